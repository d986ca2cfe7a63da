#include "rpla/pla.hpp"

#include "rpla/error.hpp"

#include <sstream>
#include <stdexcept>

namespace rpla {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            tokens.emplace_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

long parse_count(const std::string& token, int line, const char* directive) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(token, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(directive) + " expects a number, got '" + token + "'");
    }
    if (pos != token.size() || value < 0) {
        throw ParseError(line, std::string(directive) + " expects a non-negative number, got '" +
                                   token + "'");
    }
    return value;
}

} // namespace

std::vector<std::string> default_names(char prefix, std::uint32_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        names.push_back(std::string(1, prefix) + std::to_string(i));
    }
    return names;
}

SopSpec parse_pla(std::string_view text) {
    SopSpec spec;
    bool have_i = false;
    bool have_o = false;
    bool have_p = false;
    bool ended = false;
    long declared_cubes = 0;
    int p_line = 0;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (ended) {
            break;
        }
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto tokens = split_tokens(raw);
        if (tokens.empty()) {
            continue;
        }

        const std::string& head = tokens[0];
        if (head == ".i" || head == ".o") {
            if (!spec.cubes.empty()) {
                throw ParseError(line_no, head + " must appear before the first cube");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, head + " expects exactly one argument");
            }
            const long value = parse_count(tokens[1], line_no, head.c_str());
            if (value < 1) {
                throw ParseError(line_no, head + " must be at least 1");
            }
            if (head == ".i") {
                if (have_i) {
                    throw ParseError(line_no, "duplicate .i");
                }
                have_i = true;
                spec.input_count = static_cast<std::uint32_t>(value);
            } else {
                if (have_o) {
                    throw ParseError(line_no, "duplicate .o");
                }
                have_o = true;
                spec.output_count = static_cast<std::uint32_t>(value);
            }
        } else if (head == ".p") {
            if (tokens.size() != 2) {
                throw ParseError(line_no, ".p expects exactly one argument");
            }
            if (have_p) {
                throw ParseError(line_no, "duplicate .p");
            }
            have_p = true;
            p_line = line_no;
            declared_cubes = parse_count(tokens[1], line_no, ".p");
        } else if (head == ".ilb" || head == ".ob") {
            const bool is_input = head == ".ilb";
            if ((is_input && !have_i) || (!is_input && !have_o)) {
                throw ParseError(line_no, head + " must follow " + (is_input ? ".i" : ".o"));
            }
            const std::uint32_t want = is_input ? spec.input_count : spec.output_count;
            if (tokens.size() - 1 != want) {
                throw ParseError(line_no, head + " expects " + std::to_string(want) +
                                              " names, got " + std::to_string(tokens.size() - 1));
            }
            auto& names = is_input ? spec.input_names : spec.output_names;
            if (!names.empty()) {
                throw ParseError(line_no, "duplicate " + head);
            }
            names.assign(tokens.begin() + 1, tokens.end());
        } else if (head == ".e") {
            ended = true;
        } else if (head[0] == '.') {
            throw ParseError(line_no, "unsupported directive '" + head + "'");
        } else {
            // cube line
            if (!have_i || !have_o) {
                throw ParseError(line_no, "cube before .i/.o declarations");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, "cube expects an input part and an output part");
            }
            const std::string& in_part = tokens[0];
            const std::string& out_part = tokens[1];
            if (in_part.size() != spec.input_count) {
                throw ParseError(line_no, "cube input width " + std::to_string(in_part.size()) +
                                              " does not match .i " +
                                              std::to_string(spec.input_count));
            }
            if (out_part.size() != spec.output_count) {
                throw ParseError(line_no, "cube output width " + std::to_string(out_part.size()) +
                                              " does not match .o " +
                                              std::to_string(spec.output_count));
            }
            Cube cube;
            cube.inputs.reserve(spec.input_count);
            for (char ch : in_part) {
                switch (ch) {
                case '0':
                    cube.inputs.push_back(Lit::Negative);
                    break;
                case '1':
                    cube.inputs.push_back(Lit::Positive);
                    break;
                case '-':
                    cube.inputs.push_back(Lit::Absent);
                    break;
                default:
                    throw ParseError(line_no, std::string("invalid cube input character '") + ch +
                                                  "' (expected 0, 1 or -)");
                }
            }
            bool any_output = false;
            cube.outputs.reserve(spec.output_count);
            for (char ch : out_part) {
                if (ch != '0' && ch != '1') {
                    throw ParseError(line_no, std::string("invalid cube output character '") + ch +
                                                  "' (expected 0 or 1)");
                }
                cube.outputs.push_back(ch == '1' ? 1 : 0);
                any_output |= ch == '1';
            }
            if (!any_output) {
                throw ParseError(line_no, "cube drives no output");
            }
            spec.cubes.push_back(std::move(cube));
        }
    }

    if (!have_i) {
        throw ParseError(line_no, "missing .i declaration");
    }
    if (!have_o) {
        throw ParseError(line_no, "missing .o declaration");
    }
    if (have_p && declared_cubes != static_cast<long>(spec.cubes.size())) {
        throw ParseError(p_line, ".p declares " + std::to_string(declared_cubes) +
                                     " cubes but the file has " +
                                     std::to_string(spec.cubes.size()));
    }
    if (spec.input_names.empty()) {
        spec.input_names = default_names('x', spec.input_count);
    }
    if (spec.output_names.empty()) {
        spec.output_names = default_names('y', spec.output_count);
    }
    return spec;
}

std::string serialize_pla(const SopSpec& spec) {
    std::string out;
    out += ".i " + std::to_string(spec.input_count) + "\n";
    out += ".o " + std::to_string(spec.output_count) + "\n";
    if (spec.input_names != default_names('x', spec.input_count)) {
        out += ".ilb";
        for (const std::string& name : spec.input_names) {
            out += " " + name;
        }
        out += "\n";
    }
    if (spec.output_names != default_names('y', spec.output_count)) {
        out += ".ob";
        for (const std::string& name : spec.output_names) {
            out += " " + name;
        }
        out += "\n";
    }
    out += ".p " + std::to_string(spec.cubes.size()) + "\n";
    for (const Cube& cube : spec.cubes) {
        for (Lit lit : cube.inputs) {
            out += lit == Lit::Positive ? '1' : lit == Lit::Negative ? '0' : '-';
        }
        out += ' ';
        for (Bit bit : cube.outputs) {
            out += bit ? '1' : '0';
        }
        out += '\n';
    }
    out += ".e\n";
    return out;
}

bool cube_matches(const Cube& cube, std::uint64_t input_word, std::uint32_t n) {
    for (std::uint32_t v = 0; v < n; ++v) {
        const Bit bit = static_cast<Bit>((input_word >> (n - 1 - v)) & 1u);
        if (cube.inputs[v] == Lit::Positive && bit == 0) {
            return false;
        }
        if (cube.inputs[v] == Lit::Negative && bit == 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> truth_table_of(const SopSpec& spec, std::uint32_t exhaustive_limit) {
    if (spec.input_count > exhaustive_limit) {
        throw std::invalid_argument("truth table over " + std::to_string(spec.input_count) +
                                    " inputs exceeds the exhaustive limit of " +
                                    std::to_string(exhaustive_limit) +
                                    "; use sampled checking instead");
    }
    if (spec.output_count > 63) {
        throw std::invalid_argument("truth tables support at most 63 outputs");
    }
    const std::uint64_t rows = 1ull << spec.input_count;
    std::vector<std::uint64_t> table(rows, 0);
    for (std::uint64_t row = 0; row < rows; ++row) {
        std::uint64_t word = 0;
        for (const Cube& cube : spec.cubes) {
            if (!cube_matches(cube, row, spec.input_count)) {
                continue;
            }
            for (std::uint32_t j = 0; j < spec.output_count; ++j) {
                if (cube.outputs[j]) {
                    word |= 1ull << (spec.output_count - 1 - j);
                }
            }
        }
        table[row] = word;
    }
    return table;
}

} // namespace rpla
