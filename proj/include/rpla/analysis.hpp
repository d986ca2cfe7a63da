#pragma once

/// @file analysis.hpp
/// @brief Cost metrics (quantum cost, constant inputs, garbage outputs),
///        the erased-bit energy estimate, reversibility verification, and
///        the Mux-vs-Fredkin design comparison.

#include "rpla/circuit.hpp"
#include "rpla/pla.hpp"
#include "rpla/simulate.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace rpla {

/// Boltzmann constant as used throughout the energy estimate, J/K.
inline constexpr double kBoltzmannJoulesPerKelvin = 1.3807e-23;

struct MetricsReport {
    std::uint64_t quantum_cost = 0;
    std::array<std::uint32_t, kGateKindCount> gate_counts{}; // indexed by GateKind
    std::uint32_t constant_inputs = 0;
    std::uint32_t constant_zeros = 0;
    std::uint32_t constant_ones = 0;
    std::uint32_t garbage_outputs = 0;
    std::uint32_t depth = 0;
    std::uint32_t width = 0;
    std::optional<double> landauer_joules; // set when a temperature was supplied

    [[nodiscard]] std::uint32_t gate_count(GateKind kind) const {
        return gate_counts[static_cast<std::size_t>(kind)];
    }
};

/// Exact counts per the metric definitions; when `temperature_kelvin` is
/// given, adds the energy bound for erasing every garbage bit once.
[[nodiscard]] MetricsReport compute_metrics(const Circuit& circuit,
                                            std::optional<double> temperature_kelvin = std::nullopt);

/// bits_erased * k * T * ln 2. Throws std::invalid_argument for T <= 0.
[[nodiscard]] double landauer_energy(std::uint64_t bits_erased, double temperature_kelvin);

enum class BijectivityVerdict : std::uint8_t {
    ProvedExhaustive,
    SampledNoCounterexample,
    Counterexample,
};

/// Two distinct W-line input assignments producing the same output lines.
struct CollisionWitness {
    BitVector input_a;
    BitVector input_b;
    BitVector output;
};

struct VerifyOptions {
    std::uint32_t exhaustive_limit = kDefaultExhaustiveLimit;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
};

struct VerificationReport {
    StructuralReport structural;
    BijectivityVerdict bijective = BijectivityVerdict::ProvedExhaustive;
    std::uint32_t width = 0;
    std::uint64_t samples_checked = 0; // 0 for the exhaustive path
    std::uint64_t seed = 0;
    std::optional<CollisionWitness> counterexample;

    [[nodiscard]] bool ok() const {
        return structural.ok() && bijective != BijectivityVerdict::Counterexample;
    }
};

/// Structural checks plus a bijectivity verdict: exhaustive for
/// W <= exhaustive_limit, otherwise seeded random sampling (injectivity on
/// the sample and forward/inverse round-trip consistency). The sampled path
/// is deterministic for a fixed seed regardless of thread count.
[[nodiscard]] VerificationReport verify_reversibility(const Circuit& circuit,
                                                      const VerifyOptions& options = {});

struct EquivalenceResult {
    bool equivalent = true;
    std::uint64_t mismatch_input = 0; // smallest mismatching input word
    std::uint64_t circuit_word = 0;
    std::uint64_t spec_word = 0;
};

/// Exhaustively compares the circuit's primary outputs (constants fixed)
/// against the spec's truth table. Throws std::invalid_argument on I/O
/// arity mismatch or when n exceeds the limit.
[[nodiscard]] EquivalenceResult functional_equivalence(const Circuit& circuit, const SopSpec& spec,
                                                       std::uint32_t exhaustive_limit = kDefaultExhaustiveLimit);

struct ComparisonReport {
    MetricsReport mux;
    MetricsReport fredkin;
    std::uint32_t plane_gate_count = 0;
    std::int64_t qc_delta = 0; // QC(fredkin design) - QC(mux design)
};

/// Synthesizes both families, checks they place gates identically, and
/// reports the quantum-cost difference (exactly one unit per plane gate).
[[nodiscard]] ComparisonReport compare_designs(const SopSpec& spec);

// Report rendering: stable key=value lines for machines, prose for humans.
[[nodiscard]] std::string render_metrics(const MetricsReport& metrics);
[[nodiscard]] std::string render_comparison(const ComparisonReport& report);
[[nodiscard]] std::string render_verification(const VerificationReport& report);

} // namespace rpla
