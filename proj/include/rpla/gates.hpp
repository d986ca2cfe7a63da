#pragma once

/// @file gates.hpp
/// @brief Catalog of the three reversible gates: Feynman, MUX, Fredkin.
///
/// Every gate computes a bijection on bit-vectors of its arity:
///   Feynman (A,B)   -> (A, A^B)                      quantum cost 1
///   Mux     (A,B,C) -> (A, A^B^C, A'C ^ AB)          quantum cost 4
///   Fredkin (A,B,C) -> (A, A'B ^ AC, A'C ^ AB)       quantum cost 5

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpla {

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;

enum class GateKind : std::uint8_t { Feynman = 0, Mux = 1, Fredkin = 2 };

inline constexpr int kGateKindCount = 3;

[[nodiscard]] constexpr int arity(GateKind kind) {
    switch (kind) {
    case GateKind::Feynman:
        return 2;
    case GateKind::Mux:
    case GateKind::Fredkin:
        return 3;
    }
    return 0;
}

[[nodiscard]] constexpr int quantum_cost(GateKind kind) {
    switch (kind) {
    case GateKind::Feynman:
        return 1;
    case GateKind::Mux:
        return 4;
    case GateKind::Fredkin:
        return 5;
    }
    return 0;
}

[[nodiscard]] constexpr std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::Feynman:
        return "feynman";
    case GateKind::Mux:
        return "mux";
    case GateKind::Fredkin:
        return "fredkin";
    }
    return "unknown";
}

[[nodiscard]] std::optional<GateKind> gate_from_name(std::string_view name);

// Single-gate bit equations. Shared by the checked vector API below and the
// simulator inner loop.
inline void eval_feynman(Bit a, Bit b, Bit& p, Bit& q) {
    p = a;
    q = a ^ b;
}

inline void eval_mux(Bit a, Bit b, Bit c, Bit& p, Bit& q, Bit& r) {
    p = a;
    q = a ^ b ^ c;
    r = static_cast<Bit>(((a ^ 1) & c) ^ (a & b));
}

inline void eval_fredkin(Bit a, Bit b, Bit c, Bit& p, Bit& q, Bit& r) {
    p = a;
    q = static_cast<Bit>(((a ^ 1) & b) ^ (a & c));
    r = static_cast<Bit>(((a ^ 1) & c) ^ (a & b));
}

// Feynman and Fredkin are their own inverses; the Mux inverse splits on P:
// P=0 => B=Q^R, C=R;  P=1 => B=R, C=Q^R^1.
inline void inverse_feynman(Bit p, Bit q, Bit& a, Bit& b) {
    a = p;
    b = p ^ q;
}

inline void inverse_mux(Bit p, Bit q, Bit r, Bit& a, Bit& b, Bit& c) {
    a = p;
    if (p == 0) {
        b = q ^ r;
        c = r;
    } else {
        b = r;
        c = static_cast<Bit>(q ^ r ^ 1);
    }
}

inline void inverse_fredkin(Bit p, Bit q, Bit r, Bit& a, Bit& b, Bit& c) {
    eval_fredkin(p, q, r, a, b, c);
}

/// Evaluates one gate. Throws std::invalid_argument on arity mismatch or
/// non-binary input values.
[[nodiscard]] BitVector eval_gate(GateKind kind, const BitVector& inputs);

/// Recovers the unique input vector mapping to `outputs` under `kind`.
[[nodiscard]] BitVector inverse_eval_gate(GateKind kind, const BitVector& outputs);

/// Truth table as a permutation of [0, 2^arity): entry i is the output index
/// for input index i, with the first line (A) as the most significant bit.
[[nodiscard]] std::vector<std::uint32_t> truth_permutation(GateKind kind);

/// True iff every input vector maps to an output of equal Hamming weight.
[[nodiscard]] bool is_conservative(GateKind kind);

/// True iff applying the gate twice is the identity on all 2^arity vectors.
[[nodiscard]] bool is_self_inverse(GateKind kind);

// Word <-> bit-vector helpers. Line 0 is the most significant bit.
[[nodiscard]] BitVector word_to_bits(std::uint64_t word, std::uint32_t width);
[[nodiscard]] std::uint64_t bits_to_word(const BitVector& bits);

[[nodiscard]] std::string bits_to_string(const BitVector& bits);
/// Parses a 0/1 string; returns nullopt on any other character.
[[nodiscard]] std::optional<BitVector> bits_from_string(std::string_view text);

} // namespace rpla
