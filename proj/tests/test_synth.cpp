#include "rpla/synth.hpp"

#include "helpers.hpp"
#include "rpla/analysis.hpp"
#include "rpla/emit.hpp"
#include "rpla/simulate.hpp"

#include <doctest.h>

#include <random>

using namespace rpla;

TEST_CASE("count_literal_demand") {
    const LiteralDemand half = count_literal_demand(test_util::load_spec("halfadder.pla"));
    CHECK(half.positive == std::vector<std::uint32_t>{2, 2});
    CHECK(half.negative == std::vector<std::uint32_t>{1, 1});

    const LiteralDemand and2 = count_literal_demand(test_util::load_spec("and2.pla"));
    CHECK(and2.positive == std::vector<std::uint32_t>{1, 1});
    CHECK(and2.negative == std::vector<std::uint32_t>{0, 0});

    // a variable absent from every cube
    const LiteralDemand sparse = count_literal_demand(parse_pla(".i 3\n.o 1\n1-1 1\n.e\n"));
    CHECK(sparse.positive == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(sparse.negative == std::vector<std::uint32_t>{0, 0, 0});
}

namespace {

// Simulates a one-source construction over both source values and returns
// the delivered net values as (value at source=0, value at source=1).
std::vector<std::pair<Bit, Bit>> probe_nets(CircuitBuilder&& builder,
                                            const std::vector<NetId>& nets) {
    std::vector<std::pair<std::string, NetId>> outputs;
    for (std::size_t i = 0; i < nets.size(); ++i) {
        outputs.emplace_back("p" + std::to_string(i), nets[i]);
    }
    const Circuit circuit = std::move(builder).finalize(std::move(outputs));
    const SimResult at0 = simulate(circuit, {0});
    const SimResult at1 = simulate(circuit, {1});
    std::vector<std::pair<Bit, Bit>> values;
    for (std::size_t i = 0; i < nets.size(); ++i) {
        values.emplace_back(at0.outputs[i], at1.outputs[i]);
    }
    return values;
}

} // namespace

TEST_CASE("build_fanout_tree") {
    SUBCASE("k=1 adds nothing") {
        CircuitBuilder builder(1);
        const auto nets = build_fanout_tree(builder, 0, 1);
        CHECK(nets == std::vector<NetId>{0});
        CHECK(builder.net_count() == 1);
    }
    SUBCASE("k=3 adds two copy gates and two constants") {
        CircuitBuilder builder(1);
        const auto nets = build_fanout_tree(builder, 0, 3);
        CHECK(nets.size() == 3);
        const Circuit circuit = builder.finalize(
            {{"a", nets[0]}, {"b", nets[1]}, {"c", nets[2]}});
        CHECK(circuit.gates().size() == 2);
        CHECK(circuit.constants().size() == 2);
        for (const auto& [net, value] : circuit.constants()) {
            CHECK(value == 0);
        }
    }
    SUBCASE("every delivered net equals the source") {
        for (std::uint32_t k = 1; k <= 5; ++k) {
            CircuitBuilder builder(1);
            const auto nets = build_fanout_tree(builder, 0, k);
            for (auto [at0, at1] : probe_nets(std::move(builder), nets)) {
                CHECK(at0 == 0);
                CHECK(at1 == 1);
            }
        }
    }
    SUBCASE("consumed source is rejected") {
        CircuitBuilder builder(1);
        (void)build_fanout_tree(builder, 0, 2);
        CHECK_THROWS_AS((void)build_fanout_tree(builder, 0, 2), std::invalid_argument);
    }
}

TEST_CASE("build_inverter") {
    CircuitBuilder builder(1);
    const auto [inverted, true_copy] = build_inverter(builder, 0);
    const auto values = probe_nets(std::move(builder), {inverted, true_copy});
    CHECK(values[0] == std::pair<Bit, Bit>{1, 0}); // Q = not A
    CHECK(values[1] == std::pair<Bit, Bit>{0, 1}); // P = A

    CircuitBuilder counter(1);
    (void)build_inverter(counter, 0);
    CHECK(counter.net_count() == 4); // input + const + P + Q

    CircuitBuilder pair(2);
    (void)build_inverter(pair, 0);
    (void)build_inverter(pair, 1);
    const Circuit two = pair.finalize({});
    CHECK(two.gates().size() == 2);
}

TEST_CASE("build_and_chain computes conjunctions") {
    for (GateFamily family : {GateFamily::Mux, GateFamily::Fredkin}) {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            CircuitBuilder builder(k);
            std::vector<NetId> literals;
            for (std::uint32_t i = 0; i < k; ++i) {
                literals.push_back(i);
            }
            const NetId result = build_and_chain(builder, family, literals);
            const Circuit circuit = builder.finalize({{"y", result}});
            CHECK(circuit.gates().size() == k - 1);
            for (std::uint64_t word = 0; word < (1ull << k); ++word) {
                const SimResult sim = simulate(circuit, word_to_bits(word, k));
                const Bit expected = word == (1ull << k) - 1 ? 1 : 0;
                CHECK(sim.outputs[0] == expected);
            }
        }
    }
    CircuitBuilder builder(1);
    CHECK_THROWS_AS((void)build_and_chain(builder, GateFamily::Mux, {}), std::invalid_argument);
}

TEST_CASE("build_or_chain computes disjunctions") {
    for (GateFamily family : {GateFamily::Mux, GateFamily::Fredkin}) {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            CircuitBuilder builder(k);
            std::vector<NetId> terms;
            for (std::uint32_t i = 0; i < k; ++i) {
                terms.push_back(i);
            }
            const NetId result = build_or_chain(builder, family, terms);
            const Circuit circuit = builder.finalize({{"y", result}});
            CHECK(circuit.gates().size() == k - 1);
            for (std::uint64_t word = 0; word < (1ull << k); ++word) {
                const SimResult sim = simulate(circuit, word_to_bits(word, k));
                CHECK(sim.outputs[0] == (word != 0 ? 1 : 0));
            }
        }
    }
    CircuitBuilder builder(1);
    CHECK_THROWS_AS((void)build_or_chain(builder, GateFamily::Fredkin, {}),
                    std::invalid_argument);
}

TEST_CASE("synthesize_rpla derived counts") {
    SUBCASE("2-input AND") {
        const Circuit circuit =
            synthesize_rpla(test_util::load_spec("and2.pla"), GateFamily::Mux);
        const MetricsReport m = compute_metrics(circuit);
        CHECK(m.gate_count(GateKind::Mux) == 1);
        CHECK(m.gate_count(GateKind::Feynman) == 0);
        CHECK(m.quantum_cost == 4);
        CHECK(m.constant_inputs == 1);
        CHECK(m.garbage_outputs == 2);
    }
    SUBCASE("half adder, mux family") {
        const Circuit circuit =
            synthesize_rpla(test_util::load_spec("halfadder.pla"), GateFamily::Mux);
        const MetricsReport m = compute_metrics(circuit);
        CHECK(m.gate_count(GateKind::Feynman) == 4);
        CHECK(m.gate_count(GateKind::Mux) == 4);
        CHECK(m.quantum_cost == 20);
        CHECK(m.constant_inputs == 8);
        CHECK(m.garbage_outputs == 8);
        CHECK(m.width == 10);
    }
    SUBCASE("half adder, fredkin family") {
        const Circuit circuit =
            synthesize_rpla(test_util::load_spec("halfadder.pla"), GateFamily::Fredkin);
        const MetricsReport m = compute_metrics(circuit);
        CHECK(m.gate_count(GateKind::Feynman) == 4);
        CHECK(m.gate_count(GateKind::Fredkin) == 4);
        CHECK(m.quantum_cost == 24);
        CHECK(m.constant_inputs == 8);
        CHECK(m.garbage_outputs == 8);
    }
    SUBCASE("xor2") {
        const Circuit circuit =
            synthesize_rpla(test_util::load_spec("xor2.pla"), GateFamily::Mux);
        const MetricsReport m = compute_metrics(circuit);
        CHECK(m.gate_count(GateKind::Feynman) == 2);
        CHECK(m.gate_count(GateKind::Mux) == 3);
        CHECK(m.quantum_cost == 14);
        CHECK(m.constant_inputs == 5);
        CHECK(m.width == 7);
        CHECK(m.garbage_outputs == 6);
    }
    SUBCASE("full adder") {
        const Circuit circuit =
            synthesize_rpla(test_util::load_spec("fulladder.pla"), GateFamily::Mux);
        const MetricsReport m = compute_metrics(circuit);
        CHECK(m.gate_count(GateKind::Feynman) == 19);
        CHECK(m.gate_count(GateKind::Mux) == 20);
        CHECK(m.quantum_cost == 99);
        CHECK(m.constant_inputs == 39);
        CHECK(m.width == 42);
        CHECK(m.garbage_outputs == 40);
    }
    SUBCASE("degenerate specs") {
        const Circuit buf = synthesize_rpla(test_util::load_spec("buf1.pla"), GateFamily::Mux);
        CHECK(buf.gates().empty());
        CHECK(compute_metrics(buf).quantum_cost == 0);

        const Circuit taut = synthesize_rpla(test_util::load_spec("const1.pla"), GateFamily::Mux);
        CHECK(taut.gates().empty());
        CHECK(compute_metrics(taut).constant_inputs == 1);
        CHECK(simulate(taut, {0, 0}).outputs[0] == 1);

        const Circuit zero = synthesize_rpla(test_util::load_spec("const0.pla"), GateFamily::Mux);
        CHECK(simulate(zero, {1, 1}).outputs == BitVector{1, 0});
    }
}

TEST_CASE("synthesized circuits match their specs on every input") {
    for (const std::string& name : test_util::corpus_files()) {
        const SopSpec spec = test_util::load_spec(name);
        for (GateFamily family : {GateFamily::Mux, GateFamily::Fredkin}) {
            const Circuit circuit = synthesize_rpla(spec, family);
            INFO(name, " family=", family_name(family));
            CHECK(circuit.validate_structure().ok());
            const EquivalenceResult eq = functional_equivalence(circuit, spec);
            CHECK(eq.equivalent);
        }
    }
}

TEST_CASE("family parity: placements match, cost differs by plane gates") {
    for (const std::string& name : test_util::corpus_files()) {
        const SopSpec spec = test_util::load_spec(name);
        const ComparisonReport cmp = compare_designs(spec);
        INFO(name);
        CHECK(cmp.mux.constant_inputs == cmp.fredkin.constant_inputs);
        CHECK(cmp.mux.garbage_outputs == cmp.fredkin.garbage_outputs);
        CHECK(cmp.mux.gate_count(GateKind::Feynman) == cmp.fredkin.gate_count(GateKind::Feynman));
        CHECK(cmp.mux.gate_count(GateKind::Mux) == cmp.fredkin.gate_count(GateKind::Fredkin));
        CHECK(cmp.qc_delta == cmp.plane_gate_count);
    }
}

TEST_CASE("synthesis is deterministic") {
    for (const char* name : {"halfadder.pla", "rand4.pla"}) {
        const SopSpec spec = test_util::load_spec(name);
        const Circuit first = synthesize_rpla(spec, GateFamily::Mux);
        const Circuit second = synthesize_rpla(spec, GateFamily::Mux);
        CHECK(first == second);
        CHECK(emit_netlist(first) == emit_netlist(second));
    }
}

TEST_CASE("random specs synthesize correctly under both families") {
    std::mt19937 rng(0x5EEDu);
    for (int round = 0; round < 40; ++round) {
        const SopSpec spec = test_util::random_spec(rng);
        for (GateFamily family : {GateFamily::Mux, GateFamily::Fredkin}) {
            const Circuit circuit = synthesize_rpla(spec, family);
            CHECK(circuit.validate_structure().ok());
            CHECK(functional_equivalence(circuit, spec).equivalent);
        }
    }
}
