#include "rpla/simulate.hpp"

#include "helpers.hpp"
#include "rpla/emit.hpp"
#include "rpla/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace rpla;

TEST_CASE("simulate known circuits") {
    const Circuit and_circuit = test_util::make_and_circuit();
    const SimResult high = simulate(and_circuit, {1, 1});
    CHECK(high.outputs == BitVector{1});
    CHECK(high.garbage == BitVector{1, 0}); // P=1, Q=1^1^0=0
    CHECK(simulate(and_circuit, {1, 0}).outputs == BitVector{0});
    CHECK(simulate(and_circuit, {0, 1}).outputs == BitVector{0});

    const Circuit identity = test_util::make_identity_circuit(3);
    CHECK(simulate(identity, {1, 0, 1}).outputs == BitVector{1, 0, 1});

    const SopSpec half = test_util::load_spec("halfadder.pla");
    const Circuit half_circuit = synthesize_rpla(half, GateFamily::Mux);
    const auto table = truth_table_of(half);
    for (std::uint64_t word = 0; word < 4; ++word) {
        const SimResult sim = simulate(half_circuit, word_to_bits(word, 2));
        CHECK(bits_to_word(sim.outputs) == table[word]);
    }
}

TEST_CASE("simulate validates its input") {
    const Circuit circuit = test_util::make_and_circuit();
    CHECK_THROWS_AS((void)simulate(circuit, {1}), std::invalid_argument);
    CHECK_THROWS_AS((void)simulate(circuit, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)simulate_inverse(circuit, {1, 1}), std::invalid_argument);
}

TEST_CASE("simulate_inverse undoes simulate") {
    for (const char* name : {"halfadder.pla", "xor2.pla", "shared.pla"}) {
        const SopSpec spec = test_util::load_spec(name);
        const Circuit circuit = synthesize_rpla(spec, GateFamily::Mux);
        for (std::uint64_t word = 0; word < (1ull << spec.input_count); ++word) {
            const BitVector inputs = word_to_bits(word, spec.input_count);
            const SimResult sim = simulate(circuit, inputs);
            BitVector all_outputs = sim.outputs;
            all_outputs.insert(all_outputs.end(), sim.garbage.begin(), sim.garbage.end());
            const BitVector recovered = simulate_inverse(circuit, all_outputs);
            REQUIRE(recovered.size() == circuit.width());
            // primary inputs come back first, then the declared constants
            for (std::uint32_t i = 0; i < spec.input_count; ++i) {
                CHECK(recovered[i] == inputs[i]);
            }
            for (std::size_t c = 0; c < circuit.constants().size(); ++c) {
                CHECK(recovered[spec.input_count + c] == circuit.constants()[c].second);
            }
        }
    }

    const Circuit identity = test_util::make_identity_circuit(2);
    CHECK(simulate_inverse(identity, {1, 0}) == BitVector{1, 0});
}

TEST_CASE("out-of-image inverse queries flip a constant line") {
    // The AND circuit's legal runs always carry constant 0 on the C line.
    // Inverting the output vector (R,P,Q) = (1,1,1) must recover C=1.
    const Circuit circuit = test_util::make_and_circuit();
    const BitVector recovered = simulate_inverse(circuit, {1, 1, 1});
    CHECK(recovered[2] == 1);
    CHECK(recovered[2] != circuit.constants()[0].second);
}

TEST_CASE("exhaustive_permutation of single-gate circuits") {
    const Circuit feynman = test_util::make_single_gate_circuit(GateKind::Feynman);
    CHECK(exhaustive_permutation(feynman) == std::vector<std::uint64_t>{0, 1, 3, 2});

    for (GateKind kind : {GateKind::Feynman, GateKind::Mux, GateKind::Fredkin}) {
        const Circuit circuit = test_util::make_single_gate_circuit(kind);
        const auto perm = exhaustive_permutation(circuit);
        const auto table = truth_permutation(kind);
        REQUIRE(perm.size() == table.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            CHECK(perm[i] == table[i]);
        }
    }

    const Circuit identity = test_util::make_identity_circuit(3);
    std::vector<std::uint64_t> iota(8);
    std::iota(iota.begin(), iota.end(), 0ull);
    CHECK(exhaustive_permutation(identity) == iota);
}

TEST_CASE("synthesized half adder is a permutation on all 10 lines") {
    const Circuit circuit =
        synthesize_rpla(test_util::load_spec("halfadder.pla"), GateFamily::Mux);
    REQUIRE(circuit.width() == 10);
    auto perm = exhaustive_permutation(circuit);
    REQUIRE(perm.size() == 1024);
    std::sort(perm.begin(), perm.end());
    for (std::uint64_t i = 0; i < perm.size(); ++i) {
        CHECK(perm[i] == i);
    }
}

TEST_CASE("parallel sweep equals the serial reference") {
    for (const char* name : {"halfadder.pla", "xor2.pla", "rand4.pla"}) {
        const SopSpec spec = test_util::load_spec(name);
        for (GateFamily family : {GateFamily::Mux, GateFamily::Fredkin}) {
            const Circuit circuit = synthesize_rpla(spec, family);
            if (circuit.width() > kDefaultExhaustiveLimit) {
                continue;
            }
            CHECK(exhaustive_permutation(circuit) == exhaustive_permutation_serial(circuit));
        }
    }
    const Circuit identity = test_util::make_identity_circuit(4);
    CHECK(exhaustive_permutation(identity) == exhaustive_permutation_serial(identity));
}

TEST_CASE("garbage bits follow the garbage-list order of the netlist") {
    // hand-written netlist listing garbage out of id order
    const Circuit circuit = parse_netlist("rpla-netlist v1\n"
                                          "inputs 2 a b\n"
                                          "const 2 0\n"
                                          "gate mux 0 1 2 -> 3 4 5\n"
                                          "output y 5\n"
                                          "garbage 4 3\n");
    const SimResult sim = simulate(circuit, {1, 1});
    CHECK(sim.garbage == BitVector{0, 1}); // Q first, then P
}

TEST_CASE("a shared circuit simulates safely from concurrent callers") {
    const Circuit circuit =
        synthesize_rpla(test_util::load_spec("halfadder.pla"), GateFamily::Mux);
    const auto reference = exhaustive_permutation_serial(circuit);
    std::uint64_t const_bits = 0;
    for (const auto& [net, value] : circuit.constants()) {
        const_bits = (const_bits << 1) | value;
    }
    bool all_ok = true;
#pragma omp parallel for reduction(&& : all_ok)
    for (int word = 0; word < 4; ++word) {
        for (int round = 0; round < 200; ++round) {
            const SimResult sim = simulate(circuit, word_to_bits(word, 2));
            BitVector all = sim.outputs;
            all.insert(all.end(), sim.garbage.begin(), sim.garbage.end());
            const std::uint64_t full_word =
                (static_cast<std::uint64_t>(word) << circuit.constants().size()) | const_bits;
            all_ok = all_ok && bits_to_word(all) == reference[full_word];
        }
    }
    CHECK(all_ok);
}

TEST_CASE("exhaustive_permutation enforces the width limit") {
    const Circuit circuit =
        synthesize_rpla(test_util::load_spec("fulladder.pla"), GateFamily::Mux);
    REQUIRE(circuit.width() > kDefaultExhaustiveLimit);
    CHECK_THROWS_WITH_AS((void)exhaustive_permutation(circuit), doctest::Contains("sampled"),
                         std::invalid_argument);
    CHECK_THROWS_AS((void)exhaustive_permutation(circuit, 31), std::invalid_argument);
}
