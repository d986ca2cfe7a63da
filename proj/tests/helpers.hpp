#pragma once

// Shared fixtures for the test suites: corpus/golden loading, a couple of
// tiny hand-built circuits, and seeded random generators for property tests.

#include "rpla/circuit.hpp"
#include "rpla/pla.hpp"
#include "rpla/synth.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace test_util {

inline std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(RPLA_CORPUS_DIR) + "/" + name;
}

inline rpla::SopSpec load_spec(const std::string& name) {
    return rpla::parse_pla(read_file(corpus_path(name)));
}

inline const std::vector<std::string>& corpus_files() {
    static const std::vector<std::string> files = {
        "and2.pla",   "or2.pla",    "xor2.pla",      "buf1.pla",
        "not1.pla",   "halfadder.pla", "fulladder.pla", "cmp2.pla",
        "const0.pla", "const1.pla", "shared.pla",    "rand4.pla",
    };
    return files;
}

// Single plane gate wired as an AND of the two primary inputs.
inline rpla::Circuit make_and_circuit(rpla::GateFamily family = rpla::GateFamily::Mux) {
    rpla::CircuitBuilder builder(2);
    const rpla::NetId zero = builder.add_constant(0);
    const auto outs = builder.add_gate(rpla::plane_gate(family), {0, 1, zero});
    return builder.finalize({{"y0", outs[2]}});
}

inline rpla::Circuit make_identity_circuit(std::uint32_t inputs) {
    rpla::CircuitBuilder builder(inputs);
    std::vector<std::pair<std::string, rpla::NetId>> outputs;
    for (std::uint32_t i = 0; i < inputs; ++i) {
        outputs.emplace_back("o" + std::to_string(i), i);
    }
    return builder.finalize(std::move(outputs));
}

inline rpla::Circuit make_single_gate_circuit(rpla::GateKind kind) {
    const auto n = static_cast<std::uint32_t>(rpla::arity(kind));
    rpla::CircuitBuilder builder(n);
    std::vector<rpla::NetId> inputs;
    for (std::uint32_t i = 0; i < n; ++i) {
        inputs.push_back(i);
    }
    const auto outs = builder.add_gate(kind, inputs);
    std::vector<std::pair<std::string, rpla::NetId>> outputs;
    for (std::uint32_t i = 0; i < n; ++i) {
        outputs.emplace_back("o" + std::to_string(i), outs[i]);
    }
    return builder.finalize(std::move(outputs));
}

// Random well-formed build sequence: constants and gates over unconsumed
// nets, then a finalize naming a random subset of the leftovers.
inline rpla::Circuit random_circuit(std::mt19937& rng, std::uint32_t max_inputs = 5,
                                    std::uint32_t max_gates = 12) {
    const std::uint32_t inputs = 1 + rng() % max_inputs;
    rpla::CircuitBuilder builder(inputs);
    std::vector<rpla::NetId> free;
    for (std::uint32_t i = 0; i < inputs; ++i) {
        free.push_back(i);
    }
    const std::uint32_t gates = rng() % (max_gates + 1);
    for (std::uint32_t g = 0; g < gates; ++g) {
        const auto kind = static_cast<rpla::GateKind>(rng() % rpla::kGateKindCount);
        const auto need = static_cast<std::uint32_t>(rpla::arity(kind));
        while (free.size() < need) {
            free.push_back(builder.add_constant(static_cast<rpla::Bit>(rng() % 2)));
        }
        std::vector<rpla::NetId> picked;
        for (std::uint32_t k = 0; k < need; ++k) {
            const std::size_t at = rng() % free.size();
            picked.push_back(free[at]);
            free.erase(free.begin() + static_cast<std::ptrdiff_t>(at));
        }
        for (rpla::NetId net : builder.add_gate(kind, picked)) {
            free.push_back(net);
        }
    }
    std::vector<std::pair<std::string, rpla::NetId>> outputs;
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (rng() % 2 == 0) {
            outputs.emplace_back("o" + std::to_string(i), free[i]);
        }
    }
    return builder.finalize(std::move(outputs));
}

inline rpla::SopSpec random_spec(std::mt19937& rng, std::uint32_t max_inputs = 5,
                                 std::uint32_t max_outputs = 3, std::uint32_t max_cubes = 8) {
    rpla::SopSpec spec;
    spec.input_count = 1 + rng() % max_inputs;
    spec.output_count = 1 + rng() % max_outputs;
    if (rng() % 2 == 0) {
        spec.input_names = rpla::default_names('x', spec.input_count);
        spec.output_names = rpla::default_names('y', spec.output_count);
    } else {
        for (std::uint32_t i = 0; i < spec.input_count; ++i) {
            spec.input_names.push_back("in" + std::to_string(i));
        }
        for (std::uint32_t i = 0; i < spec.output_count; ++i) {
            spec.output_names.push_back("out" + std::to_string(i));
        }
    }
    const std::uint32_t cubes = 1 + rng() % max_cubes;
    for (std::uint32_t c = 0; c < cubes; ++c) {
        rpla::Cube cube;
        for (std::uint32_t v = 0; v < spec.input_count; ++v) {
            cube.inputs.push_back(static_cast<rpla::Lit>(rng() % 3));
        }
        bool any = false;
        for (std::uint32_t j = 0; j < spec.output_count; ++j) {
            const rpla::Bit fed = rng() % 2;
            cube.outputs.push_back(fed);
            any |= fed != 0;
        }
        if (!any) {
            cube.outputs[rng() % spec.output_count] = 1;
        }
        spec.cubes.push_back(std::move(cube));
    }
    return spec;
}

} // namespace test_util
