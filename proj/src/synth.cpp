#include "rpla/synth.hpp"

#include <deque>
#include <stdexcept>

namespace rpla {

LiteralDemand count_literal_demand(const SopSpec& spec) {
    LiteralDemand demand;
    demand.positive.assign(spec.input_count, 0);
    demand.negative.assign(spec.input_count, 0);
    for (const Cube& cube : spec.cubes) {
        for (std::uint32_t v = 0; v < spec.input_count; ++v) {
            if (cube.inputs[v] == Lit::Positive) {
                ++demand.positive[v];
            } else if (cube.inputs[v] == Lit::Negative) {
                ++demand.negative[v];
            }
        }
    }
    return demand;
}

std::vector<NetId> build_fanout_tree(CircuitBuilder& builder, NetId net, std::uint32_t copies) {
    if (copies == 0) {
        throw std::invalid_argument("fan-out tree needs at least one copy");
    }
    std::vector<NetId> delivered;
    delivered.reserve(copies);
    NetId carry = net;
    for (std::uint32_t i = 1; i < copies; ++i) {
        const NetId zero = builder.add_constant(0);
        const auto outs = builder.add_gate(GateKind::Feynman, {carry, zero});
        carry = outs[0];                // P continues the chain
        delivered.push_back(outs[1]);   // Q is one delivered copy
    }
    delivered.push_back(carry);
    return delivered;
}

std::pair<NetId, NetId> build_inverter(CircuitBuilder& builder, NetId net) {
    const NetId one = builder.add_constant(1);
    const auto outs = builder.add_gate(GateKind::Feynman, {net, one});
    return {outs[1], outs[0]}; // Q = complement, P = true copy
}

NetId build_and_chain(CircuitBuilder& builder, GateFamily family,
                      const std::vector<NetId>& literal_nets) {
    if (literal_nets.empty()) {
        throw std::invalid_argument("AND chain needs at least one literal net");
    }
    NetId acc = literal_nets[0];
    for (std::size_t i = 1; i < literal_nets.size(); ++i) {
        const NetId zero = builder.add_constant(0);
        const auto outs = builder.add_gate(plane_gate(family), {acc, literal_nets[i], zero});
        acc = outs[2]; // R = acc AND next
    }
    return acc;
}

NetId build_or_chain(CircuitBuilder& builder, GateFamily family,
                     const std::vector<NetId>& term_nets) {
    if (term_nets.empty()) {
        throw std::invalid_argument("OR chain needs at least one term net");
    }
    NetId acc = term_nets[0];
    for (std::size_t i = 1; i < term_nets.size(); ++i) {
        const NetId one = builder.add_constant(1);
        const auto outs = builder.add_gate(plane_gate(family), {acc, one, term_nets[i]});
        acc = outs[2]; // R = acc OR next
    }
    return acc;
}

Circuit synthesize_rpla(const SopSpec& spec, GateFamily family) {
    CircuitBuilder builder(spec.input_count, spec.input_names);
    const LiteralDemand demand = count_literal_demand(spec);

    // Literal conditioning: one inverter per negated variable (its P copy
    // credits positive demand), then copy chains to the exact use counts.
    std::vector<std::deque<NetId>> positive_nets(spec.input_count);
    std::vector<std::deque<NetId>> negative_nets(spec.input_count);
    for (std::uint32_t v = 0; v < spec.input_count; ++v) {
        const NetId source = v;
        if (demand.negative[v] > 0) {
            const auto [inverted, true_copy] = build_inverter(builder, source);
            if (demand.positive[v] > 0) {
                for (NetId net : build_fanout_tree(builder, true_copy, demand.positive[v])) {
                    positive_nets[v].push_back(net);
                }
            }
            for (NetId net : build_fanout_tree(builder, inverted, demand.negative[v])) {
                negative_nets[v].push_back(net);
            }
        } else if (demand.positive[v] > 0) {
            for (NetId net : build_fanout_tree(builder, source, demand.positive[v])) {
                positive_nets[v].push_back(net);
            }
        }
        // A variable absent from every cube stays untouched and falls out as
        // a garbage output.
    }

    // AND plane: one product term per cube, literals in ascending variable
    // order. An all-absent cube is a constant-1 term.
    std::vector<NetId> terms;
    terms.reserve(spec.cubes.size());
    for (const Cube& cube : spec.cubes) {
        std::vector<NetId> literals;
        for (std::uint32_t v = 0; v < spec.input_count; ++v) {
            if (cube.inputs[v] == Lit::Positive) {
                literals.push_back(positive_nets[v].front());
                positive_nets[v].pop_front();
            } else if (cube.inputs[v] == Lit::Negative) {
                literals.push_back(negative_nets[v].front());
                negative_nets[v].pop_front();
            }
        }
        terms.push_back(literals.empty() ? builder.add_constant(1)
                                         : build_and_chain(builder, family, literals));
    }

    // Term sharing: a cube feeding d outputs needs d copies of its term.
    std::vector<std::deque<NetId>> term_copies(spec.cubes.size());
    for (std::size_t ci = 0; ci < spec.cubes.size(); ++ci) {
        std::uint32_t uses = 0;
        for (Bit fed : spec.cubes[ci].outputs) {
            uses += fed;
        }
        for (NetId net : build_fanout_tree(builder, terms[ci], uses)) {
            term_copies[ci].push_back(net);
        }
    }

    // OR plane: one disjunction chain per output over its terms in cube
    // order. An output no cube feeds is a constant-0 line.
    std::vector<std::pair<std::string, NetId>> primary_outputs;
    primary_outputs.reserve(spec.output_count);
    for (std::uint32_t j = 0; j < spec.output_count; ++j) {
        std::vector<NetId> inputs;
        for (std::size_t ci = 0; ci < spec.cubes.size(); ++ci) {
            if (spec.cubes[ci].outputs[j]) {
                inputs.push_back(term_copies[ci].front());
                term_copies[ci].pop_front();
            }
        }
        const NetId out = inputs.empty() ? builder.add_constant(0)
                                         : build_or_chain(builder, family, inputs);
        primary_outputs.emplace_back(spec.output_names[j], out);
    }

    return builder.finalize(std::move(primary_outputs));
}

} // namespace rpla
