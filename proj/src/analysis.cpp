#include "rpla/analysis.hpp"

#include "rpla/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace rpla {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Input lines for sample i, derived purely from (seed, i) so the sweep can
// be partitioned arbitrarily.
void sample_input_lines(std::uint64_t seed, std::uint64_t index, std::uint32_t width,
                        BitVector& lines) {
    lines.resize(width);
    const std::uint64_t base = splitmix64(seed ^ splitmix64(index));
    std::uint64_t block_value = 0;
    for (std::uint32_t line = 0; line < width; ++line) {
        if (line % 64 == 0) {
            block_value = splitmix64(base + line / 64);
        }
        lines[line] = static_cast<Bit>((block_value >> (line % 64)) & 1u);
    }
}

std::uint64_t hash_bits(const BitVector& bits) {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    std::uint64_t word = 0;
    std::uint32_t filled = 0;
    for (Bit b : bits) {
        word = (word << 1) | b;
        if (++filled == 64) {
            h = splitmix64(h ^ word);
            word = 0;
            filled = 0;
        }
    }
    return splitmix64(h ^ word ^ filled);
}

// Assigns the W input lines (primary inputs then constants) into the net
// scratch array.
void assign_lines(const Circuit& circuit, const BitVector& lines, std::vector<Bit>& values) {
    const std::uint32_t n = circuit.input_count();
    for (std::uint32_t i = 0; i < n; ++i) {
        values[i] = lines[i];
    }
    const auto& constants = circuit.constants();
    for (std::uint32_t c = 0; c < constants.size(); ++c) {
        values[constants[c].first] = lines[n + c];
    }
}

void read_input_lines(const Circuit& circuit, const std::vector<Bit>& values, BitVector& lines) {
    const std::uint32_t n = circuit.input_count();
    lines.resize(circuit.width());
    for (std::uint32_t i = 0; i < n; ++i) {
        lines[i] = values[i];
    }
    const auto& constants = circuit.constants();
    for (std::uint32_t c = 0; c < constants.size(); ++c) {
        lines[n + c] = values[constants[c].first];
    }
}

void read_output_lines(const Circuit& circuit, const std::vector<Bit>& values, BitVector& lines) {
    lines.clear();
    lines.reserve(circuit.width());
    for (const auto& [name, net] : circuit.outputs()) {
        lines.push_back(values[net]);
    }
    for (NetId net : circuit.garbage()) {
        lines.push_back(values[net]);
    }
}

void assign_output_lines(const Circuit& circuit, const BitVector& lines,
                         std::vector<Bit>& values) {
    std::size_t pos = 0;
    for (const auto& [name, net] : circuit.outputs()) {
        values[net] = lines[pos++];
    }
    for (NetId net : circuit.garbage()) {
        values[net] = lines[pos++];
    }
}

VerificationReport verify_exhaustive(const Circuit& circuit, VerificationReport report,
                                     std::uint32_t limit) {
    const auto table = exhaustive_permutation(circuit, limit);
    const std::uint32_t w = circuit.width();
    std::vector<std::uint64_t> first_preimage(table.size(), ~0ull);
    for (std::uint64_t in = 0; in < table.size(); ++in) {
        const std::uint64_t out = table[in];
        if (first_preimage[out] != ~0ull) {
            report.bijective = BijectivityVerdict::Counterexample;
            report.counterexample = CollisionWitness{word_to_bits(first_preimage[out], w),
                                                     word_to_bits(in, w), word_to_bits(out, w)};
            return report;
        }
        first_preimage[out] = in;
    }
    report.bijective = BijectivityVerdict::ProvedExhaustive;
    return report;
}

VerificationReport verify_sampled(const Circuit& circuit, VerificationReport report,
                                  const VerifyOptions& options) {
    const std::uint64_t n = options.samples;
    const std::uint32_t w = circuit.width();
    std::vector<std::uint64_t> out_hash(n);
    long long round_trip_bad = -1;

    // Parallel fill: output hash per sample, plus the forward/inverse
    // round-trip check. Every sample is a pure function of (seed, index).
#pragma omp parallel
    {
        std::vector<Bit> values(circuit.net_count(), 0);
        std::vector<Bit> inverse_values(circuit.net_count(), 0);
        BitVector in_lines, out_lines, recovered;
        long long local_bad = -1;
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            sample_input_lines(options.seed, static_cast<std::uint64_t>(i), w, in_lines);
            assign_lines(circuit, in_lines, values);
            detail::eval_nets(circuit, values);
            read_output_lines(circuit, values, out_lines);
            out_hash[static_cast<std::uint64_t>(i)] = hash_bits(out_lines);

            std::fill(inverse_values.begin(), inverse_values.end(), 0);
            assign_output_lines(circuit, out_lines, inverse_values);
            detail::inverse_eval_nets(circuit, inverse_values);
            read_input_lines(circuit, inverse_values, recovered);
            if (recovered != in_lines && (local_bad == -1 || i < local_bad)) {
                local_bad = i;
            }
        }
#pragma omp critical
        {
            if (local_bad != -1 && (round_trip_bad == -1 || local_bad < round_trip_bad)) {
                round_trip_bad = local_bad;
            }
        }
    }

    if (round_trip_bad != -1) {
        // Inverse inconsistency: the gate list does not define a bijection on
        // the W lines (reachable only through corrupted netlists). When the
        // recovered input maps forward to the same outputs we have a genuine
        // collision pair; otherwise the failure is reported without one.
        report.samples_checked = n;
        report.bijective = BijectivityVerdict::Counterexample;
        std::vector<Bit> values(circuit.net_count(), 0);
        std::vector<Bit> inverse_values(circuit.net_count(), 0);
        BitVector in_lines, out_lines, recovered, recovered_out;
        sample_input_lines(options.seed, static_cast<std::uint64_t>(round_trip_bad), w, in_lines);
        assign_lines(circuit, in_lines, values);
        detail::eval_nets(circuit, values);
        read_output_lines(circuit, values, out_lines);
        assign_output_lines(circuit, out_lines, inverse_values);
        detail::inverse_eval_nets(circuit, inverse_values);
        read_input_lines(circuit, inverse_values, recovered);
        assign_lines(circuit, recovered, values);
        detail::eval_nets(circuit, values);
        read_output_lines(circuit, values, recovered_out);
        if (recovered_out == out_lines && recovered != in_lines) {
            report.counterexample = CollisionWitness{in_lines, recovered, out_lines};
        }
        return report;
    }

    // Deterministic duplicate scan: sort sample indices by output hash, then
    // recheck equal-hash runs exactly.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return out_hash[a] != out_hash[b] ? out_hash[a] < out_hash[b] : a < b;
    });

    std::vector<Bit> values(circuit.net_count(), 0);
    BitVector in_lines, out_lines;
    std::optional<CollisionWitness> witness;
    std::uint64_t best_rank = ~0ull;
    std::size_t run_start = 0;
    while (run_start < order.size()) {
        std::size_t run_end = run_start + 1;
        while (run_end < order.size() && out_hash[order[run_end]] == out_hash[order[run_start]]) {
            ++run_end;
        }
        if (run_end - run_start > 1) {
            // Regenerate the run and look for equal outputs from distinct
            // inputs; duplicate input samples are benign.
            struct Sample {
                BitVector in;
                BitVector out;
                std::uint32_t index;
            };
            std::vector<Sample> run;
            run.reserve(run_end - run_start);
            for (std::size_t k = run_start; k < run_end; ++k) {
                Sample s;
                s.index = order[k];
                sample_input_lines(options.seed, s.index, w, in_lines);
                assign_lines(circuit, in_lines, values);
                detail::eval_nets(circuit, values);
                read_output_lines(circuit, values, out_lines);
                s.in = in_lines;
                s.out = out_lines;
                run.push_back(std::move(s));
            }
            std::sort(run.begin(), run.end(), [](const Sample& a, const Sample& b) {
                return a.out != b.out ? a.out < b.out : a.index < b.index;
            });
            for (std::size_t k = 1; k < run.size(); ++k) {
                if (run[k].out == run[k - 1].out && run[k].in != run[k - 1].in) {
                    const std::uint64_t rank =
                        (static_cast<std::uint64_t>(run[k - 1].index) << 32) | run[k].index;
                    if (rank < best_rank) {
                        best_rank = rank;
                        witness = CollisionWitness{run[k - 1].in, run[k].in, run[k].out};
                    }
                }
            }
        }
        run_start = run_end;
    }

    report.samples_checked = n;
    if (witness) {
        report.bijective = BijectivityVerdict::Counterexample;
        report.counterexample = std::move(witness);
    } else {
        report.bijective = BijectivityVerdict::SampledNoCounterexample;
    }
    return report;
}

} // namespace

MetricsReport compute_metrics(const Circuit& circuit, std::optional<double> temperature_kelvin) {
    MetricsReport metrics;
    for (const GateInstance& gate : circuit.gates()) {
        metrics.quantum_cost += static_cast<std::uint64_t>(quantum_cost(gate.kind));
        ++metrics.gate_counts[static_cast<std::size_t>(gate.kind)];
    }
    for (const auto& [net, value] : circuit.constants()) {
        ++(value ? metrics.constant_ones : metrics.constant_zeros);
    }
    metrics.constant_inputs = static_cast<std::uint32_t>(circuit.constants().size());
    metrics.garbage_outputs = static_cast<std::uint32_t>(circuit.garbage().size());
    metrics.depth = circuit.depth();
    metrics.width = circuit.width();
    if (temperature_kelvin) {
        metrics.landauer_joules = landauer_energy(metrics.garbage_outputs, *temperature_kelvin);
    }
    return metrics;
}

double landauer_energy(std::uint64_t bits_erased, double temperature_kelvin) {
    if (!(temperature_kelvin > 0.0)) {
        throw std::invalid_argument("temperature must be positive (kelvin)");
    }
    return static_cast<double>(bits_erased) * kBoltzmannJoulesPerKelvin * temperature_kelvin *
           std::log(2.0);
}

VerificationReport verify_reversibility(const Circuit& circuit, const VerifyOptions& options) {
    VerificationReport report;
    report.structural = circuit.validate_structure();
    report.width = circuit.width();
    report.seed = options.seed;
    if (circuit.width() <= options.exhaustive_limit) {
        return verify_exhaustive(circuit, std::move(report), options.exhaustive_limit);
    }
    return verify_sampled(circuit, std::move(report), options);
}

EquivalenceResult functional_equivalence(const Circuit& circuit, const SopSpec& spec,
                                         std::uint32_t exhaustive_limit) {
    if (circuit.input_count() != spec.input_count ||
        circuit.outputs().size() != spec.output_count) {
        throw std::invalid_argument("circuit I/O arity does not match the spec");
    }
    const auto table = truth_table_of(spec, exhaustive_limit);
    const std::uint32_t n = spec.input_count;
    const std::uint64_t rows = 1ull << n;

    long long first_bad = -1;
#pragma omp parallel
    {
        std::vector<Bit> values(circuit.net_count(), 0);
        long long local_bad = -1;
#pragma omp for schedule(static)
        for (long long row = 0; row < static_cast<long long>(rows); ++row) {
            if (local_bad != -1) {
                continue; // a smaller mismatch in this chunk already wins
            }
            for (std::uint32_t i = 0; i < n; ++i) {
                values[i] = static_cast<Bit>((static_cast<std::uint64_t>(row) >> (n - 1 - i)) & 1u);
            }
            for (const auto& [net, value] : circuit.constants()) {
                values[net] = value;
            }
            detail::eval_nets(circuit, values);
            std::uint64_t word = 0;
            for (const auto& [name, net] : circuit.outputs()) {
                word = (word << 1) | values[net];
            }
            if (word != table[static_cast<std::uint64_t>(row)]) {
                local_bad = row;
            }
        }
#pragma omp critical
        {
            if (local_bad != -1 && (first_bad == -1 || local_bad < first_bad)) {
                first_bad = local_bad;
            }
        }
    }

    EquivalenceResult result;
    if (first_bad != -1) {
        const auto row = static_cast<std::uint64_t>(first_bad);
        std::vector<Bit> values(circuit.net_count(), 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            values[i] = static_cast<Bit>((row >> (n - 1 - i)) & 1u);
        }
        for (const auto& [net, value] : circuit.constants()) {
            values[net] = value;
        }
        detail::eval_nets(circuit, values);
        std::uint64_t word = 0;
        for (const auto& [name, net] : circuit.outputs()) {
            word = (word << 1) | values[net];
        }
        result.equivalent = false;
        result.mismatch_input = row;
        result.circuit_word = word;
        result.spec_word = table[row];
    }
    return result;
}

ComparisonReport compare_designs(const SopSpec& spec) {
    const Circuit mux_design = synthesize_rpla(spec, GateFamily::Mux);
    const Circuit fredkin_design = synthesize_rpla(spec, GateFamily::Fredkin);

    // The two syntheses must be the same placement with only the plane gate
    // kind substituted.
    const auto& mg = mux_design.gates();
    const auto& fg = fredkin_design.gates();
    bool isomorphic = mg.size() == fg.size() && mux_design.constants() == fredkin_design.constants() &&
                      mux_design.outputs() == fredkin_design.outputs() &&
                      mux_design.garbage() == fredkin_design.garbage();
    for (std::size_t i = 0; isomorphic && i < mg.size(); ++i) {
        const bool same_wiring = mg[i].inputs == fg[i].inputs && mg[i].outputs == fg[i].outputs;
        const bool kind_ok = (mg[i].kind == fg[i].kind && mg[i].kind == GateKind::Feynman) ||
                             (mg[i].kind == GateKind::Mux && fg[i].kind == GateKind::Fredkin);
        isomorphic = same_wiring && kind_ok;
    }
    if (!isomorphic) {
        throw std::logic_error("family syntheses diverged structurally");
    }

    ComparisonReport report;
    report.mux = compute_metrics(mux_design);
    report.fredkin = compute_metrics(fredkin_design);
    report.plane_gate_count = report.mux.gate_count(GateKind::Mux);
    report.qc_delta = static_cast<std::int64_t>(report.fredkin.quantum_cost) -
                      static_cast<std::int64_t>(report.mux.quantum_cost);
    return report;
}

namespace {

std::string format_energy(double joules) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4e", joules);
    return buffer;
}

void append_metrics_kv(std::string& out, const std::string& prefix, const MetricsReport& m) {
    out += prefix + "quantum_cost=" + std::to_string(m.quantum_cost) + "\n";
    out += prefix + "constant_inputs=" + std::to_string(m.constant_inputs) + "\n";
    out += prefix + "constant_zeros=" + std::to_string(m.constant_zeros) + "\n";
    out += prefix + "constant_ones=" + std::to_string(m.constant_ones) + "\n";
    out += prefix + "garbage_outputs=" + std::to_string(m.garbage_outputs) + "\n";
    out += prefix + "depth=" + std::to_string(m.depth) + "\n";
    out += prefix + "width=" + std::to_string(m.width) + "\n";
    for (int k = 0; k < kGateKindCount; ++k) {
        const auto kind = static_cast<GateKind>(k);
        out += prefix + "gate_counts." + std::string(gate_name(kind)) + "=" +
               std::to_string(m.gate_count(kind)) + "\n";
    }
    if (m.landauer_joules) {
        out += prefix + "landauer_j=" + format_energy(*m.landauer_joules) + "\n";
    }
}

} // namespace

std::string render_metrics(const MetricsReport& metrics) {
    std::string out;
    append_metrics_kv(out, "", metrics);
    return out;
}

std::string render_comparison(const ComparisonReport& report) {
    std::string out;
    append_metrics_kv(out, "mux.", report.mux);
    append_metrics_kv(out, "fredkin.", report.fredkin);
    out += "plane_gates=" + std::to_string(report.plane_gate_count) + "\n";
    out += "qc_delta=" + std::to_string(report.qc_delta) + "\n";
    return out;
}

std::string render_verification(const VerificationReport& report) {
    std::string out;
    out += "structural: " + std::string(report.structural.ok() ? "pass" : "FAIL") + "\n";
    for (const std::string& violation : report.structural.violations) {
        out += "  violation: " + violation + "\n";
    }
    switch (report.bijective) {
    case BijectivityVerdict::ProvedExhaustive:
        out += "bijective: proved (W=" + std::to_string(report.width) + ")\n";
        break;
    case BijectivityVerdict::SampledNoCounterexample:
        out += "bijective: no counterexample in " + std::to_string(report.samples_checked) +
               " samples (W=" + std::to_string(report.width) +
               ", seed=" + std::to_string(report.seed) + ")\n";
        break;
    case BijectivityVerdict::Counterexample:
        out += "bijective: FAIL\n";
        if (report.counterexample) {
            out += "  inputs " + bits_to_string(report.counterexample->input_a) + " and " +
                   bits_to_string(report.counterexample->input_b) + " both map to " +
                   bits_to_string(report.counterexample->output) + "\n";
        }
        break;
    }
    return out;
}

} // namespace rpla
