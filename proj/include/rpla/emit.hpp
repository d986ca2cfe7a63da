#pragma once

/// @file emit.hpp
/// @brief Circuit serializers: canonical netlist text (with parser), DOT
///        graphs, and structural VHDL.
///
/// Canonical netlist v1 grammar (whitespace-separated, lowercase keywords,
/// LF endings):
///   rpla-netlist v1
///   inputs <n> <name...>
///   const <netid> <0|1>                      (zero or more)
///   gate <feynman|mux|fredkin> <in...> -> <out...>   (topological order)
///   output <name> <netid>                    (one per primary output)
///   garbage <netid...>                       (always present, possibly bare)

#include "rpla/circuit.hpp"

#include <string>
#include <string_view>

namespace rpla {

enum class EmitFormat : std::uint8_t { Netlist, Dot, Vhdl };

struct EmitOptions {
    EmitFormat format = EmitFormat::Netlist;
    std::string top_name = "rpla_top"; // VHDL top entity
};

/// Byte-deterministic canonical netlist emission.
[[nodiscard]] std::string emit_netlist(const Circuit& circuit);

/// Parses canonical netlist v1. Syntactic and reference errors raise
/// ParseError with a line number; fan-out and output-partition corruption
/// parse fine and are left for validate_structure.
[[nodiscard]] Circuit parse_netlist(std::string_view text);

/// Directed graph: one node per input/constant/gate/output line, one edge
/// per net, gate nodes labeled with kind and quantum cost.
[[nodiscard]] std::string emit_dot(const Circuit& circuit);

/// Behavioral entities for the gate kinds in use (FY2, MG3, FR3) plus a
/// structural top entity with one component instance per gate and one
/// signal per net. Throws std::invalid_argument for an illegal top name.
[[nodiscard]] std::string emit_vhdl(const Circuit& circuit, const EmitOptions& options = {});

[[nodiscard]] bool is_valid_vhdl_identifier(std::string_view name);

/// Dispatch helper for the CLI.
[[nodiscard]] std::string emit(const Circuit& circuit, const EmitOptions& options);

} // namespace rpla
