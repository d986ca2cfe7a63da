#pragma once

/// @file circuit.hpp
/// @brief Reversible netlist IR: nets, gate instances, constant inputs, and
///        the primary/garbage output partition.
///
/// Nets are single-driver and single-reader: fan-out is rejected at build
/// time, so every finalized circuit satisfies the structural reversibility
/// conditions by construction. validate_structure() re-checks them for
/// circuits that came in through deserialization.

#include "rpla/gates.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rpla {

using NetId = std::uint32_t;

enum class SourceKind : std::uint8_t { PrimaryInput, ConstantInput, GatePin };

/// Where a net's value comes from. `index` is the input position, the
/// constant position, or the gate index; `pin` is the output pin for
/// GatePin and the fixed value for ConstantInput.
struct NetSource {
    SourceKind kind;
    std::uint32_t index;
    std::uint8_t pin;
};

struct GateInstance {
    GateKind kind;
    std::vector<NetId> inputs;
    std::vector<NetId> outputs;

    bool operator==(const GateInstance&) const = default;
};

struct StructuralReport {
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

class Circuit {
  public:
    [[nodiscard]] std::uint32_t input_count() const { return input_count_; }
    [[nodiscard]] const std::vector<std::string>& input_names() const { return input_names_; }
    [[nodiscard]] const std::vector<std::pair<NetId, Bit>>& constants() const { return constants_; }
    [[nodiscard]] const std::vector<GateInstance>& gates() const { return gates_; }
    [[nodiscard]] const std::vector<std::pair<std::string, NetId>>& outputs() const { return outputs_; }
    [[nodiscard]] const std::vector<NetId>& garbage() const { return garbage_; }

    [[nodiscard]] std::uint32_t net_count() const { return static_cast<std::uint32_t>(sources_.size()); }
    [[nodiscard]] const NetSource& source(NetId net) const { return sources_[net]; }

    /// Total line count W = primary inputs + constant inputs.
    [[nodiscard]] std::uint32_t width() const {
        return input_count_ + static_cast<std::uint32_t>(constants_.size());
    }

    /// Longest input-to-output gate chain; 0 for gate-free circuits.
    [[nodiscard]] std::uint32_t depth() const;

    /// Re-checks single driver, single reader, topological order, and the
    /// primary/garbage partition. Violations are report contents, never
    /// exceptions.
    [[nodiscard]] StructuralReport validate_structure() const;

    bool operator==(const Circuit& other) const;

    /// Builds a circuit from deserialized parts. Rejects inconsistencies the
    /// representation cannot hold (id redefinition, use before definition,
    /// non-dense ids, arity mismatches) with std::invalid_argument; fan-out
    /// and partition violations are representable and left for
    /// validate_structure.
    static Circuit from_parts(std::uint32_t input_count, std::vector<std::string> input_names,
                              std::vector<std::pair<NetId, Bit>> constants,
                              std::vector<GateInstance> gates,
                              std::vector<std::pair<std::string, NetId>> outputs,
                              std::vector<NetId> garbage);

  private:
    friend class CircuitBuilder;

    Circuit() = default;

    std::uint32_t input_count_ = 0;
    std::vector<std::string> input_names_;
    std::vector<std::pair<NetId, Bit>> constants_;
    std::vector<GateInstance> gates_;
    std::vector<std::pair<std::string, NetId>> outputs_;
    std::vector<NetId> garbage_;
    std::vector<NetSource> sources_;
};

/// Single-owner builder. Net ids are dense and assigned in creation order;
/// primary inputs occupy ids 0..n-1. Fan-out is rejected at the point of
/// consumption.
class CircuitBuilder {
  public:
    /// `names` must be empty (defaults x0..x<n-1>) or exactly n entries.
    explicit CircuitBuilder(std::uint32_t input_count, std::vector<std::string> names = {});

    /// Adds a fresh constant-input line with the given value.
    NetId add_constant(Bit value);

    /// Appends a gate instance reading `inputs`; returns its freshly created
    /// output nets in pin order.
    std::vector<NetId> add_gate(GateKind kind, const std::vector<NetId>& inputs);

    [[nodiscard]] std::uint32_t input_count() const { return circuit_.input_count_; }
    [[nodiscard]] std::uint32_t net_count() const { return circuit_.net_count(); }
    [[nodiscard]] bool is_consumed(NetId net) const { return consumed_[net]; }

    /// Seals the circuit. Every remaining unconsumed net not named here
    /// becomes a garbage output (ascending id order). Use once.
    Circuit finalize(std::vector<std::pair<std::string, NetId>> primary_outputs);

  private:
    Circuit circuit_;
    std::vector<bool> consumed_;
};

} // namespace rpla
