#include "rpla/gates.hpp"

#include <bit>
#include <stdexcept>

namespace rpla {

namespace {

void check_vector(GateKind kind, const BitVector& v, const char* what) {
    if (static_cast<int>(v.size()) != arity(kind)) {
        throw std::invalid_argument(std::string(what) + ": " + std::string(gate_name(kind)) +
                                    " expects " + std::to_string(arity(kind)) + " lines, got " +
                                    std::to_string(v.size()));
    }
    for (Bit b : v) {
        if (b > 1) {
            throw std::invalid_argument(std::string(what) + ": values must be 0 or 1");
        }
    }
}

} // namespace

std::optional<GateKind> gate_from_name(std::string_view name) {
    if (name == "feynman") return GateKind::Feynman;
    if (name == "mux") return GateKind::Mux;
    if (name == "fredkin") return GateKind::Fredkin;
    return std::nullopt;
}

BitVector eval_gate(GateKind kind, const BitVector& inputs) {
    check_vector(kind, inputs, "eval_gate");
    BitVector out(inputs.size());
    switch (kind) {
    case GateKind::Feynman:
        eval_feynman(inputs[0], inputs[1], out[0], out[1]);
        break;
    case GateKind::Mux:
        eval_mux(inputs[0], inputs[1], inputs[2], out[0], out[1], out[2]);
        break;
    case GateKind::Fredkin:
        eval_fredkin(inputs[0], inputs[1], inputs[2], out[0], out[1], out[2]);
        break;
    }
    return out;
}

BitVector inverse_eval_gate(GateKind kind, const BitVector& outputs) {
    check_vector(kind, outputs, "inverse_eval_gate");
    BitVector in(outputs.size());
    switch (kind) {
    case GateKind::Feynman:
        inverse_feynman(outputs[0], outputs[1], in[0], in[1]);
        break;
    case GateKind::Mux:
        inverse_mux(outputs[0], outputs[1], outputs[2], in[0], in[1], in[2]);
        break;
    case GateKind::Fredkin:
        inverse_fredkin(outputs[0], outputs[1], outputs[2], in[0], in[1], in[2]);
        break;
    }
    return in;
}

std::vector<std::uint32_t> truth_permutation(GateKind kind) {
    const int n = arity(kind);
    std::vector<std::uint32_t> table(1u << n);
    for (std::uint32_t i = 0; i < table.size(); ++i) {
        table[i] = static_cast<std::uint32_t>(bits_to_word(eval_gate(kind, word_to_bits(i, n))));
    }
    return table;
}

bool is_conservative(GateKind kind) {
    const auto table = truth_permutation(kind);
    for (std::uint32_t i = 0; i < table.size(); ++i) {
        if (std::popcount(i) != std::popcount(table[i])) {
            return false;
        }
    }
    return true;
}

bool is_self_inverse(GateKind kind) {
    const int n = arity(kind);
    for (std::uint32_t i = 0; i < (1u << n); ++i) {
        const BitVector once = eval_gate(kind, word_to_bits(i, n));
        if (bits_to_word(eval_gate(kind, once)) != i) {
            return false;
        }
    }
    return true;
}

BitVector word_to_bits(std::uint64_t word, std::uint32_t width) {
    BitVector bits(width);
    for (std::uint32_t i = 0; i < width; ++i) {
        bits[i] = static_cast<Bit>((word >> (width - 1 - i)) & 1u);
    }
    return bits;
}

std::uint64_t bits_to_word(const BitVector& bits) {
    std::uint64_t word = 0;
    for (Bit b : bits) {
        word = (word << 1) | (b & 1u);
    }
    return word;
}

std::string bits_to_string(const BitVector& bits) {
    std::string s;
    s.reserve(bits.size());
    for (Bit b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::optional<BitVector> bits_from_string(std::string_view text) {
    BitVector bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            return std::nullopt;
        }
        bits.push_back(ch == '1' ? 1 : 0);
    }
    return bits;
}

} // namespace rpla
