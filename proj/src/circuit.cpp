#include "rpla/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rpla {

namespace {

std::string net_str(NetId net) {
    return "net " + std::to_string(net);
}

} // namespace

std::uint32_t Circuit::depth() const {
    // level[net] = number of gates on the longest path from any input to it
    std::vector<std::uint32_t> level(net_count(), 0);
    std::uint32_t result = 0;
    for (const GateInstance& gate : gates_) {
        std::uint32_t in_level = 0;
        for (NetId net : gate.inputs) {
            in_level = std::max(in_level, level[net]);
        }
        const std::uint32_t gate_level = in_level + 1;
        for (NetId net : gate.outputs) {
            level[net] = gate_level;
        }
        result = std::max(result, gate_level);
    }
    return result;
}

StructuralReport Circuit::validate_structure() const {
    StructuralReport report;
    const std::uint32_t nets = net_count();

    // (a) single driver per net
    std::vector<std::uint32_t> drivers(nets, 0);
    for (std::uint32_t i = 0; i < input_count_; ++i) {
        ++drivers[i];
    }
    for (const auto& [net, value] : constants_) {
        ++drivers[net];
    }
    for (const GateInstance& gate : gates_) {
        for (NetId net : gate.outputs) {
            ++drivers[net];
        }
    }
    for (NetId net = 0; net < nets; ++net) {
        if (drivers[net] == 0) {
            report.violations.push_back(net_str(net) + " has no driver");
        } else if (drivers[net] > 1) {
            report.violations.push_back(net_str(net) + " has " + std::to_string(drivers[net]) +
                                        " drivers");
        }
    }

    // (b) at most one reader per net (fan-out), and (c) topological order
    std::vector<std::uint32_t> readers(nets, 0);
    std::vector<bool> defined(nets, false);
    for (std::uint32_t i = 0; i < input_count_; ++i) {
        defined[i] = true;
    }
    for (const auto& [net, value] : constants_) {
        defined[net] = true;
    }
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        const GateInstance& gate = gates_[g];
        for (NetId net : gate.inputs) {
            ++readers[net];
            if (!defined[net]) {
                report.violations.push_back("gate " + std::to_string(g) + " reads " + net_str(net) +
                                            " before it is driven (feedback)");
            }
        }
        for (NetId net : gate.outputs) {
            defined[net] = true;
        }
    }
    for (NetId net = 0; net < nets; ++net) {
        if (readers[net] > 1) {
            report.violations.push_back(net_str(net) + " is read by " +
                                        std::to_string(readers[net]) + " gate pins (fan-out)");
        }
    }

    // (d) primary + garbage outputs partition exactly the unconsumed nets
    std::vector<std::uint32_t> listed(nets, 0);
    for (const auto& [name, net] : outputs_) {
        ++listed[net];
        if (readers[net] > 0) {
            report.violations.push_back("primary output '" + name + "' names consumed " +
                                        net_str(net));
        }
    }
    for (NetId net : garbage_) {
        ++listed[net];
        if (readers[net] > 0) {
            report.violations.push_back("garbage list names consumed " + net_str(net));
        }
    }
    for (NetId net = 0; net < nets; ++net) {
        if (listed[net] > 1) {
            report.violations.push_back(net_str(net) + " is listed " + std::to_string(listed[net]) +
                                        " times across primary/garbage outputs");
        }
        if (listed[net] == 0 && readers[net] == 0) {
            report.violations.push_back(net_str(net) +
                                        " is unconsumed but not listed as an output");
        }
    }

    // width preservation
    const std::uint32_t out_lines = static_cast<std::uint32_t>(outputs_.size() + garbage_.size());
    if (out_lines != width()) {
        report.violations.push_back("output line count " + std::to_string(out_lines) +
                                    " does not equal width " + std::to_string(width()));
    }

    return report;
}

bool Circuit::operator==(const Circuit& other) const {
    return input_count_ == other.input_count_ && input_names_ == other.input_names_ &&
           constants_ == other.constants_ && gates_ == other.gates_ &&
           outputs_ == other.outputs_ && garbage_ == other.garbage_;
}

Circuit Circuit::from_parts(std::uint32_t input_count, std::vector<std::string> input_names,
                            std::vector<std::pair<NetId, Bit>> constants,
                            std::vector<GateInstance> gates,
                            std::vector<std::pair<std::string, NetId>> outputs,
                            std::vector<NetId> garbage) {
    if (input_count == 0) {
        throw std::invalid_argument("circuit needs at least one primary input");
    }
    if (input_names.size() != input_count) {
        throw std::invalid_argument("input name count does not match input count");
    }

    std::size_t total = input_count;
    for (const GateInstance& gate : gates) {
        total += gate.outputs.size();
    }
    total += constants.size();

    std::vector<NetSource> sources(total, NetSource{SourceKind::PrimaryInput, 0, 0});
    std::vector<bool> defined(total, false);
    auto define = [&](NetId net, NetSource src) {
        if (net >= total) {
            throw std::invalid_argument(net_str(net) + " is out of range");
        }
        if (defined[net]) {
            throw std::invalid_argument(net_str(net) + " is defined more than once");
        }
        defined[net] = true;
        sources[net] = src;
    };

    for (std::uint32_t i = 0; i < input_count; ++i) {
        define(i, NetSource{SourceKind::PrimaryInput, i, 0});
    }
    for (std::uint32_t c = 0; c < constants.size(); ++c) {
        const auto& [net, value] = constants[c];
        if (value > 1) {
            throw std::invalid_argument("constant value must be 0 or 1");
        }
        define(net, NetSource{SourceKind::ConstantInput, c, value});
    }
    for (std::uint32_t g = 0; g < gates.size(); ++g) {
        const GateInstance& gate = gates[g];
        const auto want = static_cast<std::size_t>(arity(gate.kind));
        if (gate.inputs.size() != want || gate.outputs.size() != want) {
            throw std::invalid_argument("gate " + std::to_string(g) + " must have " +
                                        std::to_string(want) + " input and output nets");
        }
        for (NetId net : gate.inputs) {
            if (net >= total || !defined[net]) {
                throw std::invalid_argument("gate " + std::to_string(g) + " reads undefined " +
                                            net_str(net));
            }
        }
        for (std::uint8_t pin = 0; pin < gate.outputs.size(); ++pin) {
            define(gate.outputs[pin], NetSource{SourceKind::GatePin, g, pin});
        }
    }
    for (const auto& [name, net] : outputs) {
        if (net >= total || !defined[net]) {
            throw std::invalid_argument("primary output '" + name + "' names undefined " +
                                        net_str(net));
        }
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& [name, net] : outputs) {
            if (!seen.insert(name).second) {
                throw std::invalid_argument("duplicate primary output name '" + name + "'");
            }
        }
    }
    for (NetId net : garbage) {
        if (net >= total || !defined[net]) {
            throw std::invalid_argument("garbage list names undefined " + net_str(net));
        }
    }

    Circuit circuit;
    circuit.input_count_ = input_count;
    circuit.input_names_ = std::move(input_names);
    circuit.constants_ = std::move(constants);
    circuit.gates_ = std::move(gates);
    circuit.outputs_ = std::move(outputs);
    circuit.garbage_ = std::move(garbage);
    circuit.sources_ = std::move(sources);
    return circuit;
}

CircuitBuilder::CircuitBuilder(std::uint32_t input_count, std::vector<std::string> names) {
    if (input_count == 0) {
        throw std::invalid_argument("circuit needs at least one primary input");
    }
    if (!names.empty() && names.size() != input_count) {
        throw std::invalid_argument("expected " + std::to_string(input_count) +
                                    " input names, got " + std::to_string(names.size()));
    }
    if (names.empty()) {
        names.reserve(input_count);
        for (std::uint32_t i = 0; i < input_count; ++i) {
            names.push_back("x" + std::to_string(i));
        }
    }
    circuit_.input_count_ = input_count;
    circuit_.input_names_ = std::move(names);
    for (std::uint32_t i = 0; i < input_count; ++i) {
        circuit_.sources_.push_back(NetSource{SourceKind::PrimaryInput, i, 0});
    }
    consumed_.assign(input_count, false);
}

NetId CircuitBuilder::add_constant(Bit value) {
    if (value > 1) {
        throw std::invalid_argument("constant value must be 0 or 1");
    }
    const NetId net = net_count();
    circuit_.sources_.push_back(
        NetSource{SourceKind::ConstantInput, static_cast<std::uint32_t>(circuit_.constants_.size()), value});
    circuit_.constants_.emplace_back(net, value);
    consumed_.push_back(false);
    return net;
}

std::vector<NetId> CircuitBuilder::add_gate(GateKind kind, const std::vector<NetId>& inputs) {
    const auto want = static_cast<std::size_t>(arity(kind));
    if (inputs.size() != want) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " expects " +
                                    std::to_string(want) + " input nets, got " +
                                    std::to_string(inputs.size()));
    }
    for (NetId net : inputs) {
        if (net >= net_count()) {
            throw std::invalid_argument("unknown " + net_str(net));
        }
        if (consumed_[net]) {
            throw std::invalid_argument("fan-out violation: " + net_str(net) +
                                        " is already consumed");
        }
    }
    // Reject duplicate nets within the same pin list as well.
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = i + 1; j < inputs.size(); ++j) {
            if (inputs[i] == inputs[j]) {
                throw std::invalid_argument("fan-out violation: " + net_str(inputs[i]) +
                                            " used on two pins of one gate");
            }
        }
    }

    const auto gate_index = static_cast<std::uint32_t>(circuit_.gates_.size());
    for (NetId net : inputs) {
        consumed_[net] = true;
    }
    std::vector<NetId> outs;
    outs.reserve(want);
    for (std::uint8_t pin = 0; pin < want; ++pin) {
        const NetId net = net_count();
        circuit_.sources_.push_back(NetSource{SourceKind::GatePin, gate_index, pin});
        consumed_.push_back(false);
        outs.push_back(net);
    }
    circuit_.gates_.push_back(GateInstance{kind, inputs, outs});
    return outs;
}

Circuit CircuitBuilder::finalize(std::vector<std::pair<std::string, NetId>> primary_outputs) {
    std::vector<bool> named(net_count(), false);
    std::unordered_set<std::string> seen_names;
    for (const auto& [name, net] : primary_outputs) {
        if (net >= net_count()) {
            throw std::invalid_argument("unknown " + net_str(net));
        }
        if (consumed_[net]) {
            throw std::invalid_argument("primary output '" + name + "' names consumed " +
                                        net_str(net));
        }
        if (named[net]) {
            throw std::invalid_argument(net_str(net) + " named as primary output twice");
        }
        if (!seen_names.insert(name).second) {
            throw std::invalid_argument("duplicate primary output name '" + name + "'");
        }
        named[net] = true;
    }

    circuit_.outputs_ = std::move(primary_outputs);
    circuit_.garbage_.clear();
    for (NetId net = 0; net < net_count(); ++net) {
        if (!consumed_[net] && !named[net]) {
            circuit_.garbage_.push_back(net);
        }
    }
    return std::move(circuit_);
}

} // namespace rpla
