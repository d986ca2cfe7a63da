#pragma once

/// @file synth.hpp
/// @brief Reversible PLA synthesis from a sum-of-products spec.
///
/// The pipeline mirrors the two-plane PLA structure: a literal-conditioning
/// stage (one Feynman inverter per negated variable, Feynman copy chains to
/// meet per-polarity demand under the no-fan-out rule), an AND plane of
/// 3x3 gates specialized with constant-0 third inputs, and an OR plane of
/// 3x3 gates specialized with constant-1 second inputs. The plane gate is
/// either Mux (cost 4) or Fredkin (cost 5); both satisfy the same AND/OR
/// specializations, so the two families place gates identically and differ
/// in quantum cost by exactly the plane-gate count.

#include "rpla/circuit.hpp"
#include "rpla/pla.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rpla {

enum class GateFamily : std::uint8_t { Mux, Fredkin };

[[nodiscard]] constexpr GateKind plane_gate(GateFamily family) {
    return family == GateFamily::Mux ? GateKind::Mux : GateKind::Fredkin;
}

[[nodiscard]] constexpr std::string_view family_name(GateFamily family) {
    return family == GateFamily::Mux ? "mux" : "fredkin";
}

/// Per-variable use counts across all cubes, by polarity.
struct LiteralDemand {
    std::vector<std::uint32_t> positive;
    std::vector<std::uint32_t> negative;
};

[[nodiscard]] LiteralDemand count_literal_demand(const SopSpec& spec);

/// Produces `copies` nets equal to `net` using copies-1 Feynman gates with
/// constant-0 second inputs, chained left to right (each gate's P feeds the
/// next, its Q is delivered; the last P is the final delivered copy).
/// copies == 1 returns {net} and adds nothing.
[[nodiscard]] std::vector<NetId> build_fanout_tree(CircuitBuilder& builder, NetId net,
                                                   std::uint32_t copies);

/// One Feynman gate with a constant-1 second input. Returns {inverted,
/// true_copy}: Q carries the complement, P a free true-polarity copy.
[[nodiscard]] std::pair<NetId, NetId> build_inverter(CircuitBuilder& builder, NetId net);

/// Left-to-right conjunction chain of plane gates, each with a fresh
/// constant-0 on pin C; the product appears on the final R pin. A single
/// literal passes through untouched.
[[nodiscard]] NetId build_and_chain(CircuitBuilder& builder, GateFamily family,
                                    const std::vector<NetId>& literal_nets);

/// Left-to-right disjunction chain, each gate with a fresh constant-1 on
/// pin B (accumulator on A, next term on C, result on R).
[[nodiscard]] NetId build_or_chain(CircuitBuilder& builder, GateFamily family,
                                   const std::vector<NetId>& term_nets);

/// Full spec-to-circuit synthesis. Deterministic: identical (spec, family)
/// pairs yield identical netlists.
[[nodiscard]] Circuit synthesize_rpla(const SopSpec& spec, GateFamily family);

} // namespace rpla
