#pragma once

/// @file pla.hpp
/// @brief Two-level sum-of-products specs in a Berkeley PLA format subset.
///
/// Supported directives: .i .o .p .ilb .ob .e, with `#` comments. Cube input
/// parts range over {0,1,-}, output parts over {0,1}; outputs are the OR of
/// all matching cubes.

#include "rpla/gates.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rpla {

inline constexpr std::uint32_t kDefaultExhaustiveLimit = 20;

enum class Lit : std::uint8_t { Negative = 0, Positive = 1, Absent = 2 };

/// One product term: a per-input literal polarity plus the outputs it feeds.
struct Cube {
    std::vector<Lit> inputs;
    std::vector<Bit> outputs; // 1 = this cube feeds that output

    bool operator==(const Cube&) const = default;
};

struct SopSpec {
    std::uint32_t input_count = 0;
    std::uint32_t output_count = 0;
    std::vector<std::string> input_names;  // always populated (defaults x0..)
    std::vector<std::string> output_names; // always populated (defaults y0..)
    std::vector<Cube> cubes;

    bool operator==(const SopSpec&) const = default;
};

[[nodiscard]] std::vector<std::string> default_names(char prefix, std::uint32_t count);

/// Parses the PLA subset. Throws ParseError with a 1-based line number on
/// malformed input; cubes that drive no output are rejected.
[[nodiscard]] SopSpec parse_pla(std::string_view text);

/// Canonical emission: .i, .o, .ilb/.ob only when names are non-default,
/// .p, cubes in order, .e. LF line endings. parse_pla(serialize_pla(s)) == s.
[[nodiscard]] std::string serialize_pla(const SopSpec& spec);

/// True iff the cube covers the given input word (input 0 = MSB).
[[nodiscard]] bool cube_matches(const Cube& cube, std::uint64_t input_word, std::uint32_t n);

/// Full truth table: entry i is the m-bit output word (output 0 = MSB) for
/// input word i. Throws std::invalid_argument when n exceeds the limit.
[[nodiscard]] std::vector<std::uint64_t> truth_table_of(const SopSpec& spec,
                                                        std::uint32_t exhaustive_limit = kDefaultExhaustiveLimit);

} // namespace rpla
