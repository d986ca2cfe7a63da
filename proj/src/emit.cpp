#include "rpla/emit.hpp"

#include "rpla/error.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rpla {

std::string emit_netlist(const Circuit& circuit) {
    std::string out = "rpla-netlist v1\n";
    out += "inputs " + std::to_string(circuit.input_count());
    for (const std::string& name : circuit.input_names()) {
        out += " " + name;
    }
    out += "\n";
    for (const auto& [net, value] : circuit.constants()) {
        out += "const " + std::to_string(net) + " " + (value ? "1" : "0") + "\n";
    }
    for (const GateInstance& gate : circuit.gates()) {
        out += "gate " + std::string(gate_name(gate.kind));
        for (NetId net : gate.inputs) {
            out += " " + std::to_string(net);
        }
        out += " ->";
        for (NetId net : gate.outputs) {
            out += " " + std::to_string(net);
        }
        out += "\n";
    }
    for (const auto& [name, net] : circuit.outputs()) {
        out += "output " + name + " " + std::to_string(net) + "\n";
    }
    out += "garbage";
    for (NetId net : circuit.garbage()) {
        out += " " + std::to_string(net);
    }
    out += "\n";
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

NetId parse_net_id(const std::string& token, int line) {
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError(line, "expected a net id, got '" + token + "'");
        }
    }
    unsigned long value = 0;
    try {
        value = std::stoul(token);
    } catch (const std::exception&) {
        throw ParseError(line, "net id out of range: '" + token + "'");
    }
    if (value > 0xFFFFFFFFul) {
        throw ParseError(line, "net id out of range: '" + token + "'");
    }
    return static_cast<NetId>(value);
}

} // namespace

Circuit parse_netlist(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;

    auto next_line = [&](std::vector<std::string>& tokens) -> bool {
        while (std::getline(stream, raw)) {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r') {
                raw.pop_back();
            }
            tokens = tokenize(raw);
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    };

    std::vector<std::string> tokens;
    if (!next_line(tokens) || tokens.size() != 2 || tokens[0] != "rpla-netlist" ||
        tokens[1] != "v1") {
        throw ParseError(line_no == 0 ? 1 : line_no, "expected header 'rpla-netlist v1'");
    }

    if (!next_line(tokens) || tokens[0] != "inputs" || tokens.size() < 2) {
        throw ParseError(line_no, "expected 'inputs <n> <name...>'");
    }
    const std::uint32_t input_count = parse_net_id(tokens[1], line_no);
    if (input_count == 0) {
        throw ParseError(line_no, "a netlist needs at least one primary input");
    }
    if (tokens.size() - 2 != input_count) {
        throw ParseError(line_no, "inputs declares " + std::to_string(input_count) +
                                      " names but lists " + std::to_string(tokens.size() - 2));
    }
    std::vector<std::string> input_names(tokens.begin() + 2, tokens.end());

    // Net definition tracking: ids must be unique and every reference must
    // point at an already defined net.
    std::vector<bool> defined;
    defined.assign(input_count, true);
    auto define_net = [&](NetId net, int line) {
        if (net < defined.size() && defined[net]) {
            throw ParseError(line, "net " + std::to_string(net) + " defined twice");
        }
        if (net >= defined.size()) {
            defined.resize(net + 1, false);
        }
        defined[net] = true;
    };
    auto require_net = [&](NetId net, int line) {
        if (net >= defined.size() || !defined[net]) {
            throw ParseError(line, "reference to undefined net " + std::to_string(net));
        }
    };

    std::vector<std::pair<NetId, Bit>> constants;
    std::vector<GateInstance> gates;
    std::vector<std::pair<std::string, NetId>> outputs;
    std::vector<NetId> garbage;

    enum class Section { Consts, Gates, Outputs, Garbage, Done };
    Section section = Section::Consts;

    while (next_line(tokens)) {
        const std::string& keyword = tokens[0];
        if (keyword == "const") {
            if (section != Section::Consts) {
                throw ParseError(line_no, "const lines must precede gate lines");
            }
            if (tokens.size() != 3 || (tokens[2] != "0" && tokens[2] != "1")) {
                throw ParseError(line_no, "expected 'const <netid> <0|1>'");
            }
            const NetId net = parse_net_id(tokens[1], line_no);
            define_net(net, line_no);
            constants.emplace_back(net, tokens[2] == "1" ? 1 : 0);
        } else if (keyword == "gate") {
            if (section == Section::Consts) {
                section = Section::Gates;
            } else if (section != Section::Gates) {
                throw ParseError(line_no, "gate lines must precede output lines");
            }
            if (tokens.size() < 2) {
                throw ParseError(line_no, "gate line missing a kind");
            }
            const auto kind = gate_from_name(tokens[1]);
            if (!kind) {
                throw ParseError(line_no, "unknown gate kind '" + tokens[1] + "'");
            }
            const auto want = static_cast<std::size_t>(arity(*kind));
            // gate <kind> in... -> out...
            if (tokens.size() != 2 + want + 1 + want || tokens[2 + want] != "->") {
                throw ParseError(line_no, "gate " + tokens[1] + " expects " +
                                              std::to_string(want) + " inputs, '->', and " +
                                              std::to_string(want) + " outputs");
            }
            GateInstance gate;
            gate.kind = *kind;
            for (std::size_t i = 0; i < want; ++i) {
                const NetId net = parse_net_id(tokens[2 + i], line_no);
                require_net(net, line_no);
                gate.inputs.push_back(net);
            }
            for (std::size_t i = 0; i < want; ++i) {
                const NetId net = parse_net_id(tokens[3 + want + i], line_no);
                define_net(net, line_no);
                gate.outputs.push_back(net);
            }
            gates.push_back(std::move(gate));
        } else if (keyword == "output") {
            if (section == Section::Consts || section == Section::Gates) {
                section = Section::Outputs;
            } else if (section != Section::Outputs) {
                throw ParseError(line_no, "output lines must precede the garbage line");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "expected 'output <name> <netid>'");
            }
            const NetId net = parse_net_id(tokens[2], line_no);
            require_net(net, line_no);
            for (const auto& [name, existing] : outputs) {
                if (name == tokens[1]) {
                    throw ParseError(line_no, "duplicate output name '" + tokens[1] + "'");
                }
            }
            outputs.emplace_back(tokens[1], net);
        } else if (keyword == "garbage") {
            if (section == Section::Done) {
                throw ParseError(line_no, "duplicate garbage line");
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const NetId net = parse_net_id(tokens[i], line_no);
                require_net(net, line_no);
                garbage.push_back(net);
            }
            section = Section::Done;
        } else {
            throw ParseError(line_no, "unexpected keyword '" + keyword + "'");
        }
    }
    if (section != Section::Done) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing garbage line");
    }

    // Net ids must be dense: 0..count-1 all defined. Definition counts are
    // unique, so matching totals imply full coverage.
    std::size_t expected = input_count + constants.size();
    for (const GateInstance& gate : gates) {
        expected += gate.outputs.size();
    }
    if (defined.size() != expected) {
        throw ParseError(line_no, "net ids are not dense: highest id " +
                                      std::to_string(defined.size() - 1) + " but " +
                                      std::to_string(expected) + " nets are declared");
    }

    try {
        return Circuit::from_parts(input_count, std::move(input_names), std::move(constants),
                                   std::move(gates), std::move(outputs), std::move(garbage));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

namespace {

// Pin labels per gate side, indexed by pin.
constexpr const char* kInPins[3] = {"A", "B", "C"};
constexpr const char* kOutPins[3] = {"P", "Q", "R"};

} // namespace

std::string emit_dot(const Circuit& circuit) {
    std::string out = "digraph rpla {\n";
    out += "  rankdir=LR;\n";

    for (std::uint32_t i = 0; i < circuit.input_count(); ++i) {
        out += "  pi" + std::to_string(i) + " [shape=circle label=\"" +
               circuit.input_names()[i] + "\"];\n";
    }
    for (const auto& [net, value] : circuit.constants()) {
        out += "  c" + std::to_string(net) + " [shape=diamond label=\"" +
               (value ? "1" : "0") + "\"];\n";
    }
    for (std::size_t g = 0; g < circuit.gates().size(); ++g) {
        const GateInstance& gate = circuit.gates()[g];
        out += "  g" + std::to_string(g) + " [shape=box label=\"" +
               std::string(gate_name(gate.kind)) +
               " qc=" + std::to_string(quantum_cost(gate.kind)) + "\"];\n";
    }
    for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
        out += "  po" + std::to_string(o) + " [shape=doublecircle label=\"" +
               circuit.outputs()[o].first + "\"];\n";
    }
    for (std::size_t gb = 0; gb < circuit.garbage().size(); ++gb) {
        out += "  gb" + std::to_string(gb) + " [shape=plaintext label=\"garbage n" +
               std::to_string(circuit.garbage()[gb]) + "\"];\n";
    }

    // One edge per net, from its unique source to its unique consumer.
    struct Endpoint {
        std::string node;
        std::string pin; // empty for non-gate endpoints
    };
    std::vector<std::optional<Endpoint>> consumer(circuit.net_count());
    for (std::size_t g = 0; g < circuit.gates().size(); ++g) {
        const GateInstance& gate = circuit.gates()[g];
        for (std::size_t pin = 0; pin < gate.inputs.size(); ++pin) {
            consumer[gate.inputs[pin]] = Endpoint{"g" + std::to_string(g), kInPins[pin]};
        }
    }
    for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
        consumer[circuit.outputs()[o].second] = Endpoint{"po" + std::to_string(o), ""};
    }
    for (std::size_t gb = 0; gb < circuit.garbage().size(); ++gb) {
        consumer[circuit.garbage()[gb]] = Endpoint{"gb" + std::to_string(gb), ""};
    }

    for (NetId net = 0; net < circuit.net_count(); ++net) {
        const NetSource& src = circuit.source(net);
        std::string from;
        std::string tail;
        switch (src.kind) {
        case SourceKind::PrimaryInput:
            from = "pi" + std::to_string(src.index);
            break;
        case SourceKind::ConstantInput:
            from = "c" + std::to_string(net);
            break;
        case SourceKind::GatePin:
            from = "g" + std::to_string(src.index);
            tail = kOutPins[src.pin];
            break;
        }
        if (!consumer[net]) {
            continue; // unreachable for well-formed circuits
        }
        out += "  " + from + " -> " + consumer[net]->node + " [label=\"n" + std::to_string(net) +
               "\"";
        if (!tail.empty()) {
            out += " taillabel=\"" + tail + "\"";
        }
        if (!consumer[net]->pin.empty()) {
            out += " headlabel=\"" + consumer[net]->pin + "\"";
        }
        out += "];\n";
    }

    out += "}\n";
    return out;
}

bool is_valid_vhdl_identifier(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    if (name.back() == '_') {
        return false;
    }
    char prev = '\0';
    for (char ch : name) {
        const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        if (!ok || (ch == '_' && prev == '_')) {
            return false;
        }
        prev = ch;
    }
    return true;
}

namespace {

const char* kContextClause =
    "library ieee;\n"
    "use ieee.std_logic_1164.all;\n"
    "use ieee.numeric_std.all;\n";

std::string entity_ports(int lines) {
    std::string out = "  port (";
    for (int i = 1; i <= lines; ++i) {
        out += (i == 1 ? std::string() : std::string(8, ' ')) + "IN" + std::to_string(i) +
               ": in STD_LOGIC;\n";
    }
    for (int i = 1; i <= lines; ++i) {
        out += std::string(8, ' ') + "OUT" + std::to_string(i) + ": out STD_LOGIC" +
               (i == lines ? ");\n" : ";\n");
    }
    return out;
}

std::string gate_entity(GateKind kind) {
    switch (kind) {
    case GateKind::Feynman: {
        std::string out = std::string(kContextClause) + "\nentity FY2 is\n" + entity_ports(2) +
                          "end FY2;\n\n";
        out += "architecture behavior of FY2 is\n"
               "begin\n"
               "  OUT1 <= IN1;\n"
               "  OUT2 <= IN1 xor IN2;\n"
               "end behavior;\n";
        return out;
    }
    case GateKind::Mux: {
        std::string out = std::string(kContextClause) + "\nentity MG3 is\n" + entity_ports(3) +
                          "end MG3;\n\n";
        out += "architecture behavioral of MG3 is\n"
               "begin\n"
               "  OUT1 <= IN1;\n"
               "  OUT2 <= IN1 xor IN2 xor IN3;\n"
               "  OUT3 <= (((not IN1) and IN3) xor (IN1 and IN2));\n"
               "end behavioral;\n";
        return out;
    }
    case GateKind::Fredkin: {
        std::string out = std::string(kContextClause) + "\nentity FR3 is\n" + entity_ports(3) +
                          "end FR3;\n\n";
        out += "architecture behavioral of FR3 is\n"
               "begin\n"
               "  OUT1 <= IN1;\n"
               "  OUT2 <= (((not IN1) and IN2) xor (IN1 and IN3));\n"
               "  OUT3 <= (((not IN1) and IN3) xor (IN1 and IN2));\n"
               "end behavioral;\n";
        return out;
    }
    }
    return {};
}

constexpr const char* kEntityName[3] = {"FY2", "MG3", "FR3"};

} // namespace

std::string emit_vhdl(const Circuit& circuit, const EmitOptions& options) {
    if (!is_valid_vhdl_identifier(options.top_name)) {
        throw std::invalid_argument("'" + options.top_name + "' is not a legal VHDL identifier");
    }

    bool used[kGateKindCount] = {false, false, false};
    for (const GateInstance& gate : circuit.gates()) {
        used[static_cast<std::size_t>(gate.kind)] = true;
    }

    std::string out;
    for (int k = 0; k < kGateKindCount; ++k) {
        if (used[k]) {
            out += gate_entity(static_cast<GateKind>(k)) + "\n";
        }
    }

    // Structural top: one signal per net, one instance per gate, concurrent
    // assignments binding ports and constants to their net signals.
    out += std::string(kContextClause) + "\nentity " + options.top_name + " is\n";
    out += "  port (";
    bool first = true;
    for (const std::string& name : circuit.input_names()) {
        out += (first ? std::string() : std::string(8, ' ')) + name + ": in STD_LOGIC;\n";
        first = false;
    }
    for (std::size_t o = 0; o < circuit.outputs().size(); ++o) {
        out += std::string(8, ' ') + circuit.outputs()[o].first + ": out STD_LOGIC" +
               (o + 1 == circuit.outputs().size() ? ");\n" : ";\n");
    }
    out += "end " + options.top_name + ";\n\n";

    out += "architecture structural of " + options.top_name + " is\n";
    for (int k = 0; k < kGateKindCount; ++k) {
        if (!used[k]) {
            continue;
        }
        out += "  component " + std::string(kEntityName[k]) + "\n";
        out += entity_ports(arity(static_cast<GateKind>(k)));
        out += "  end component;\n";
    }
    for (NetId net = 0; net < circuit.net_count(); ++net) {
        out += "  signal n" + std::to_string(net) + ": STD_LOGIC;\n";
    }
    out += "begin\n";
    for (std::uint32_t i = 0; i < circuit.input_count(); ++i) {
        out += "  n" + std::to_string(i) + " <= " + circuit.input_names()[i] + ";\n";
    }
    for (const auto& [net, value] : circuit.constants()) {
        out += "  n" + std::to_string(net) + " <= '" + (value ? "1" : "0") + "';\n";
    }
    for (std::size_t g = 0; g < circuit.gates().size(); ++g) {
        const GateInstance& gate = circuit.gates()[g];
        out += "  u" + std::to_string(g) + ": " +
               kEntityName[static_cast<std::size_t>(gate.kind)] + " port map (";
        for (std::size_t pin = 0; pin < gate.inputs.size(); ++pin) {
            out += "IN" + std::to_string(pin + 1) + " => n" + std::to_string(gate.inputs[pin]) +
                   ", ";
        }
        for (std::size_t pin = 0; pin < gate.outputs.size(); ++pin) {
            out += "OUT" + std::to_string(pin + 1) + " => n" + std::to_string(gate.outputs[pin]) +
                   (pin + 1 == gate.outputs.size() ? ");\n" : ", ");
        }
    }
    for (const auto& [name, net] : circuit.outputs()) {
        out += "  " + name + " <= n" + std::to_string(net) + ";\n";
    }
    out += "end structural;\n";
    return out;
}

std::string emit(const Circuit& circuit, const EmitOptions& options) {
    switch (options.format) {
    case EmitFormat::Netlist:
        return emit_netlist(circuit);
    case EmitFormat::Dot:
        return emit_dot(circuit);
    case EmitFormat::Vhdl:
        return emit_vhdl(circuit, options);
    }
    return {};
}

} // namespace rpla
