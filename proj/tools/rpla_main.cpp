#include "rpla/analysis.hpp"
#include "rpla/emit.hpp"
#include "rpla/error.hpp"
#include "rpla/pla.hpp"
#include "rpla/simulate.hpp"
#include "rpla/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CliError {
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw CliError{"cannot open '" + path + "'"};
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

enum class InputKind { Pla, Netlist };

// Header sniffing: netlists open with their version header, PLA files with
// dot-directives (possibly behind comments).
InputKind sniff_kind(const std::string& text, const std::string& forced) {
    if (forced == "pla") {
        return InputKind::Pla;
    }
    if (forced == "netlist") {
        return InputKind::Netlist;
    }
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        if (line.compare(start, 12, "rpla-netlist") == 0) {
            return InputKind::Netlist;
        }
        return InputKind::Pla;
    }
    return InputKind::Pla;
}

rpla::GateFamily family_from_string(const std::string& name) {
    if (name == "mux") {
        return rpla::GateFamily::Mux;
    }
    if (name == "fredkin") {
        return rpla::GateFamily::Fredkin;
    }
    throw CliError{"unknown family '" + name + "' (expected mux or fredkin)"};
}

rpla::EmitFormat format_from_string(const std::string& name) {
    if (name == "netlist") {
        return rpla::EmitFormat::Netlist;
    }
    if (name == "dot") {
        return rpla::EmitFormat::Dot;
    }
    if (name == "vhdl") {
        return rpla::EmitFormat::Vhdl;
    }
    throw CliError{"unknown emit format '" + name + "' (expected netlist, dot or vhdl)"};
}

json metrics_to_json(const rpla::MetricsReport& m) {
    json j;
    j["quantum_cost"] = m.quantum_cost;
    j["constant_inputs"] = m.constant_inputs;
    j["constant_zeros"] = m.constant_zeros;
    j["constant_ones"] = m.constant_ones;
    j["garbage_outputs"] = m.garbage_outputs;
    j["depth"] = m.depth;
    j["width"] = m.width;
    json counts;
    for (int k = 0; k < rpla::kGateKindCount; ++k) {
        const auto kind = static_cast<rpla::GateKind>(k);
        counts[std::string(rpla::gate_name(kind))] = m.gate_count(kind);
    }
    j["gate_counts"] = counts;
    if (m.landauer_joules) {
        j["landauer_j"] = *m.landauer_joules;
    }
    return j;
}

json verification_to_json(const rpla::VerificationReport& report) {
    json j;
    j["structural"] = {{"ok", report.structural.ok()},
                       {"violations", report.structural.violations}};
    switch (report.bijective) {
    case rpla::BijectivityVerdict::ProvedExhaustive:
        j["bijective"] = "proved_exhaustive";
        break;
    case rpla::BijectivityVerdict::SampledNoCounterexample:
        j["bijective"] = "sampled_no_counterexample";
        break;
    case rpla::BijectivityVerdict::Counterexample:
        j["bijective"] = "counterexample";
        break;
    }
    j["width"] = report.width;
    j["samples"] = report.samples_checked;
    j["seed"] = report.seed;
    if (report.counterexample) {
        j["counterexample"] = {{"input_a", rpla::bits_to_string(report.counterexample->input_a)},
                               {"input_b", rpla::bits_to_string(report.counterexample->input_b)},
                               {"output", rpla::bits_to_string(report.counterexample->output)}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

rpla::SopSpec load_pla(const std::string& path, const std::string& forced) {
    const std::string text = read_input(path);
    if (sniff_kind(text, forced) != InputKind::Pla) {
        throw CliError{"'" + path + "' looks like a netlist; this command needs a PLA spec"};
    }
    return rpla::parse_pla(text);
}

rpla::Circuit load_netlist(const std::string& path, const std::string& forced) {
    const std::string text = read_input(path);
    if (sniff_kind(text, forced) != InputKind::Netlist) {
        throw CliError{"'" + path + "' looks like a PLA spec; this command needs a netlist"};
    }
    return rpla::parse_netlist(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible PLA synthesis, simulation and verification"};
    app.require_subcommand(1);

    std::string input;
    std::string family_name = "mux";
    std::string emit_name = "netlist";
    std::string from = "auto";
    std::uint32_t limit = rpla::kDefaultExhaustiveLimit;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    std::optional<double> temperature;
    bool as_json = false;
    std::string sim_bits;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin")->required();
        cmd->add_option("--from", from, "input kind: auto|pla|netlist")
            ->check(CLI::IsMember({"auto", "pla", "netlist"}));
    };

    CLI::App* synth = app.add_subcommand("synth", "synthesize a reversible PLA from a SOP spec");
    add_input(synth);
    synth->add_option("--family", family_name, "plane gate family: mux|fredkin")
        ->check(CLI::IsMember({"mux", "fredkin"}));
    synth->add_option("--emit", emit_name, "output format: netlist|dot|vhdl")
        ->check(CLI::IsMember({"netlist", "dot", "vhdl"}));

    CLI::App* sim = app.add_subcommand("sim", "simulate a netlist on one input vector");
    add_input(sim);
    sim->add_option("bits", sim_bits, "primary input bits, e.g. 101")->required();

    CLI::App* verify = app.add_subcommand("verify", "check structure and bijectivity");
    add_input(verify);
    verify->add_option("--limit", limit, "exhaustive width limit (default 20)");
    verify->add_option("--sample", samples,
                       "sample count for circuits wider than the limit (default 1000000)")
        ->expected(0, 1);
    verify->add_option("--seed", seed, "sample generator seed");
    verify->add_flag("--json", as_json, "machine-readable output");

    CLI::App* metrics = app.add_subcommand("metrics", "report cost metrics");
    add_input(metrics);
    metrics->add_option("--family", family_name, "plane gate family for PLA inputs")
        ->check(CLI::IsMember({"mux", "fredkin"}));
    metrics->add_option("--temperature", temperature,
                        "temperature in kelvin for the erased-bit energy estimate");
    metrics->add_flag("--json", as_json, "machine-readable output");

    CLI::App* compare = app.add_subcommand("compare", "compare mux and fredkin designs");
    add_input(compare);
    compare->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    // --sample with no value means "sample with the default count".
    const bool sample_given = verify->count("--sample") > 0;

    try {
        if (synth->parsed()) {
            const rpla::SopSpec spec = load_pla(input, from);
            const rpla::Circuit circuit =
                rpla::synthesize_rpla(spec, family_from_string(family_name));
            rpla::EmitOptions options;
            options.format = format_from_string(emit_name);
            std::cout << rpla::emit(circuit, options);
            return kExitOk;
        }

        if (sim->parsed()) {
            const rpla::Circuit circuit = load_netlist(input, from);
            const auto bits = rpla::bits_from_string(sim_bits);
            if (!bits || bits->size() != circuit.input_count()) {
                throw CliError{"input must be " + std::to_string(circuit.input_count()) +
                               " characters of 0/1"};
            }
            const rpla::SimResult result = rpla::simulate(circuit, *bits);
            std::cout << "outputs=" << rpla::bits_to_string(result.outputs)
                      << " garbage=" << rpla::bits_to_string(result.garbage) << "\n";
            return kExitOk;
        }

        if (verify->parsed()) {
            const rpla::Circuit circuit = load_netlist(input, from);
            rpla::VerifyOptions options;
            options.exhaustive_limit = limit;
            options.seed = seed;
            if (circuit.width() > limit) {
                if (!sample_given) {
                    throw CliError{"width " + std::to_string(circuit.width()) +
                                   " exceeds the exhaustive limit " + std::to_string(limit) +
                                   "; pass --sample [count] to enable sampled checking"};
                }
                options.samples = samples == 0 ? 1'000'000 : samples;
            }
            const rpla::VerificationReport report = rpla::verify_reversibility(circuit, options);
            if (as_json) {
                std::cout << verification_to_json(report).dump(2) << "\n";
            } else {
                std::cout << rpla::render_verification(report);
            }
            return report.ok() ? kExitOk : kExitVerifyFail;
        }

        if (metrics->parsed()) {
            const std::string text = read_input(input);
            rpla::Circuit circuit = sniff_kind(text, from) == InputKind::Pla
                                        ? rpla::synthesize_rpla(rpla::parse_pla(text),
                                                                family_from_string(family_name))
                                        : rpla::parse_netlist(text);
            const rpla::MetricsReport report = rpla::compute_metrics(circuit, temperature);
            if (as_json) {
                std::cout << metrics_to_json(report).dump(2) << "\n";
            } else {
                std::cout << rpla::render_metrics(report);
            }
            return kExitOk;
        }

        if (compare->parsed()) {
            const rpla::SopSpec spec = load_pla(input, from);
            const rpla::ComparisonReport report = rpla::compare_designs(spec);
            if (as_json) {
                json j;
                j["mux"] = metrics_to_json(report.mux);
                j["fredkin"] = metrics_to_json(report.fredkin);
                j["plane_gates"] = report.plane_gate_count;
                j["qc_delta"] = report.qc_delta;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rpla::render_comparison(report);
            }
            return kExitOk;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const rpla::ParseError& e) {
        std::cerr << "error: " << input << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
