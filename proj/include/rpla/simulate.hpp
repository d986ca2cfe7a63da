#pragma once

/// @file simulate.hpp
/// @brief Bit-exact forward and inverse circuit evaluation, plus exhaustive
///        permutation extraction over all W input lines.
///
/// The exhaustive sweep is embarrassingly parallel: every input word is
/// evaluated independently into a preassigned slot, so the OpenMP kernel and
/// the serial reference produce identical tables regardless of partitioning.

#include "rpla/circuit.hpp"
#include "rpla/pla.hpp"

#include <cstdint>
#include <vector>

namespace rpla {

struct SimResult {
    BitVector outputs; // primary outputs, declaration order
    BitVector garbage; // garbage outputs, garbage-list order
};

/// Forward evaluation with constants at their declared values.
[[nodiscard]] SimResult simulate(const Circuit& circuit, const BitVector& primary_inputs);

/// Inverse evaluation. `all_outputs` is ordered (primary outputs, then
/// garbage outputs); the result is ordered (primary inputs, then constant
/// lines). Out-of-image queries still invert -- the recovered constant
/// positions then differ from the declared values, which is how callers
/// detect them.
[[nodiscard]] BitVector simulate_inverse(const Circuit& circuit, const BitVector& all_outputs);

/// Treats constant lines as free inputs and maps every W-bit input word
/// (primary inputs then constants, line 0 = MSB) to its W-bit output word
/// (primary outputs then garbage). OpenMP-parallel when available.
/// Throws std::invalid_argument when W exceeds `limit` (and hard-caps W at
/// 30 to bound the 2^W result allocation).
[[nodiscard]] std::vector<std::uint64_t> exhaustive_permutation(const Circuit& circuit,
                                                                std::uint32_t limit = kDefaultExhaustiveLimit);

/// Serial reference for exhaustive_permutation; kept for tests and the
/// benchmark.
[[nodiscard]] std::vector<std::uint64_t> exhaustive_permutation_serial(const Circuit& circuit,
                                                                       std::uint32_t limit = kDefaultExhaustiveLimit);

namespace detail {

/// Evaluates all gates over a scratch array holding one value per net.
/// Primary-input and constant nets must be assigned beforehand.
void eval_nets(const Circuit& circuit, std::vector<Bit>& values);

/// Runs gates in reverse, recovering each gate's input nets from its outputs.
/// Circuit output nets must be assigned beforehand.
void inverse_eval_nets(const Circuit& circuit, std::vector<Bit>& values);

/// Assigns the W input lines from a word (line 0 = MSB), evaluates, and
/// packs the W output lines into a word.
[[nodiscard]] std::uint64_t eval_word(const Circuit& circuit, std::uint64_t input_word,
                                      std::vector<Bit>& values);

} // namespace detail

} // namespace rpla
