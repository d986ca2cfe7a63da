#include "rpla/simulate.hpp"

#include <stdexcept>

namespace rpla {

namespace detail {

void eval_nets(const Circuit& circuit, std::vector<Bit>& values) {
    for (const GateInstance& gate : circuit.gates()) {
        const auto& in = gate.inputs;
        const auto& out = gate.outputs;
        switch (gate.kind) {
        case GateKind::Feynman:
            eval_feynman(values[in[0]], values[in[1]], values[out[0]], values[out[1]]);
            break;
        case GateKind::Mux:
            eval_mux(values[in[0]], values[in[1]], values[in[2]], values[out[0]], values[out[1]],
                     values[out[2]]);
            break;
        case GateKind::Fredkin:
            eval_fredkin(values[in[0]], values[in[1]], values[in[2]], values[out[0]],
                         values[out[1]], values[out[2]]);
            break;
        }
    }
}

void inverse_eval_nets(const Circuit& circuit, std::vector<Bit>& values) {
    const auto& gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        const auto& in = it->inputs;
        const auto& out = it->outputs;
        switch (it->kind) {
        case GateKind::Feynman:
            inverse_feynman(values[out[0]], values[out[1]], values[in[0]], values[in[1]]);
            break;
        case GateKind::Mux:
            inverse_mux(values[out[0]], values[out[1]], values[out[2]], values[in[0]],
                        values[in[1]], values[in[2]]);
            break;
        case GateKind::Fredkin:
            inverse_fredkin(values[out[0]], values[out[1]], values[out[2]], values[in[0]],
                            values[in[1]], values[in[2]]);
            break;
        }
    }
}

std::uint64_t eval_word(const Circuit& circuit, std::uint64_t input_word,
                        std::vector<Bit>& values) {
    const std::uint32_t w = circuit.width();
    const std::uint32_t n = circuit.input_count();
    for (std::uint32_t i = 0; i < n; ++i) {
        values[i] = static_cast<Bit>((input_word >> (w - 1 - i)) & 1u);
    }
    const auto& constants = circuit.constants();
    for (std::uint32_t c = 0; c < constants.size(); ++c) {
        values[constants[c].first] = static_cast<Bit>((input_word >> (w - 1 - n - c)) & 1u);
    }
    eval_nets(circuit, values);

    std::uint64_t out_word = 0;
    for (const auto& [name, net] : circuit.outputs()) {
        out_word = (out_word << 1) | values[net];
    }
    for (NetId net : circuit.garbage()) {
        out_word = (out_word << 1) | values[net];
    }
    return out_word;
}

} // namespace detail

SimResult simulate(const Circuit& circuit, const BitVector& primary_inputs) {
    if (primary_inputs.size() != circuit.input_count()) {
        throw std::invalid_argument("expected " + std::to_string(circuit.input_count()) +
                                    " primary input bits, got " +
                                    std::to_string(primary_inputs.size()));
    }
    for (Bit b : primary_inputs) {
        if (b > 1) {
            throw std::invalid_argument("input values must be 0 or 1");
        }
    }

    std::vector<Bit> values(circuit.net_count(), 0);
    for (std::uint32_t i = 0; i < circuit.input_count(); ++i) {
        values[i] = primary_inputs[i];
    }
    for (const auto& [net, value] : circuit.constants()) {
        values[net] = value;
    }
    detail::eval_nets(circuit, values);

    SimResult result;
    result.outputs.reserve(circuit.outputs().size());
    for (const auto& [name, net] : circuit.outputs()) {
        result.outputs.push_back(values[net]);
    }
    result.garbage.reserve(circuit.garbage().size());
    for (NetId net : circuit.garbage()) {
        result.garbage.push_back(values[net]);
    }
    return result;
}

BitVector simulate_inverse(const Circuit& circuit, const BitVector& all_outputs) {
    const std::uint32_t w = circuit.width();
    if (all_outputs.size() != w) {
        throw std::invalid_argument("expected " + std::to_string(w) + " output bits, got " +
                                    std::to_string(all_outputs.size()));
    }
    for (Bit b : all_outputs) {
        if (b > 1) {
            throw std::invalid_argument("output values must be 0 or 1");
        }
    }

    std::vector<Bit> values(circuit.net_count(), 0);
    std::size_t pos = 0;
    for (const auto& [name, net] : circuit.outputs()) {
        values[net] = all_outputs[pos++];
    }
    for (NetId net : circuit.garbage()) {
        values[net] = all_outputs[pos++];
    }
    detail::inverse_eval_nets(circuit, values);

    BitVector inputs;
    inputs.reserve(w);
    for (std::uint32_t i = 0; i < circuit.input_count(); ++i) {
        inputs.push_back(values[i]);
    }
    for (const auto& [net, value] : circuit.constants()) {
        inputs.push_back(values[net]);
    }
    return inputs;
}

namespace {

void check_width(const Circuit& circuit, std::uint32_t limit) {
    if (circuit.width() > limit) {
        throw std::invalid_argument("circuit width " + std::to_string(circuit.width()) +
                                    " exceeds the exhaustive limit of " + std::to_string(limit) +
                                    "; use the sampled check instead");
    }
    // the 2^W result table caps out well before the limit type does
    if (circuit.width() > 30) {
        throw std::invalid_argument("exhaustive sweeps above width 30 are not supported");
    }
}

} // namespace

std::vector<std::uint64_t> exhaustive_permutation(const Circuit& circuit, std::uint32_t limit) {
    check_width(circuit, limit);
    const std::uint64_t size = 1ull << circuit.width();
    std::vector<std::uint64_t> table(size);

#pragma omp parallel
    {
        std::vector<Bit> scratch(circuit.net_count(), 0);
#pragma omp for schedule(static)
        for (long long word = 0; word < static_cast<long long>(size); ++word) {
            table[static_cast<std::uint64_t>(word)] =
                detail::eval_word(circuit, static_cast<std::uint64_t>(word), scratch);
        }
    }
    return table;
}

std::vector<std::uint64_t> exhaustive_permutation_serial(const Circuit& circuit,
                                                         std::uint32_t limit) {
    check_width(circuit, limit);
    const std::uint64_t size = 1ull << circuit.width();
    std::vector<std::uint64_t> table(size);
    std::vector<Bit> scratch(circuit.net_count(), 0);
    for (std::uint64_t word = 0; word < size; ++word) {
        table[word] = detail::eval_word(circuit, word, scratch);
    }
    return table;
}

} // namespace rpla
