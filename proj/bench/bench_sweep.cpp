// Compares the serial and OpenMP exhaustive-permutation sweeps on a wide
// synthetic circuit and checks that they agree.

#include "rpla/circuit.hpp"
#include "rpla/simulate.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

// A deep ladder: rotate through the live nets, replacing three at a time
// with a Mux gate's outputs, plus a Feynman stage every few rounds.
rpla::Circuit build_ladder(std::uint32_t inputs, std::uint32_t gate_count) {
    rpla::CircuitBuilder builder(inputs);
    std::vector<rpla::NetId> live;
    for (std::uint32_t i = 0; i < inputs; ++i) {
        live.push_back(i);
    }
    std::size_t cursor = 0;
    for (std::uint32_t g = 0; g < gate_count; ++g) {
        if (g % 4 == 3) {
            const rpla::NetId a = live[cursor % live.size()];
            const rpla::NetId b = live[(cursor + 1) % live.size()];
            const auto outs = builder.add_gate(rpla::GateKind::Feynman, {a, b});
            live[cursor % live.size()] = outs[0];
            live[(cursor + 1) % live.size()] = outs[1];
            cursor += 1;
        } else {
            const rpla::NetId a = live[cursor % live.size()];
            const rpla::NetId b = live[(cursor + 1) % live.size()];
            const rpla::NetId c = live[(cursor + 2) % live.size()];
            const auto outs = builder.add_gate(
                g % 2 == 0 ? rpla::GateKind::Mux : rpla::GateKind::Fredkin, {a, b, c});
            for (std::size_t k = 0; k < 3; ++k) {
                live[(cursor + k) % live.size()] = outs[k];
            }
            cursor += 2;
        }
    }
    std::vector<std::pair<std::string, rpla::NetId>> outputs;
    for (std::size_t i = 0; i < live.size(); ++i) {
        outputs.emplace_back("o" + std::to_string(i), live[i]);
    }
    return builder.finalize(std::move(outputs));
}

template <typename F>
double time_ms(F&& f) {
    const auto start = Clock::now();
    f();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint32_t width = 20;
    std::uint32_t gates = 240;
    int rounds = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--quick") {
            width = 14;
            gates = 64;
            rounds = 1;
        } else if (arg == "--width" && i + 1 < argc) {
            width = static_cast<std::uint32_t>(std::stoul(argv[++i]));
        } else if (arg == "--gates" && i + 1 < argc) {
            gates = static_cast<std::uint32_t>(std::stoul(argv[++i]));
        } else if (arg == "--rounds" && i + 1 < argc) {
            rounds = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: rpla_bench [--quick] [--width N] [--gates N] [--rounds N]\n";
            return 2;
        }
    }

    const rpla::Circuit circuit = build_ladder(width, gates);
    std::cout << "circuit: width=" << circuit.width() << " gates=" << circuit.gates().size()
              << " depth=" << circuit.depth() << " sweep=2^" << circuit.width() << " words\n";
#ifdef _OPENMP
    std::cout << "openmp: max_threads=" << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled in this build\n";
#endif

    std::vector<std::uint64_t> serial_table;
    std::vector<std::uint64_t> parallel_table;
    double best_serial = -1;
    double best_parallel = -1;
    for (int r = 0; r < rounds; ++r) {
        const double s =
            time_ms([&] { serial_table = rpla::exhaustive_permutation_serial(circuit, width); });
        const double p =
            time_ms([&] { parallel_table = rpla::exhaustive_permutation(circuit, width); });
        if (best_serial < 0 || s < best_serial) {
            best_serial = s;
        }
        if (best_parallel < 0 || p < best_parallel) {
            best_parallel = p;
        }
    }

    if (serial_table != parallel_table) {
        std::cout << "MISMATCH: parallel sweep disagrees with serial reference\n";
        return 1;
    }

    std::cout << "serial:   " << best_serial << " ms\n";
    std::cout << "parallel: " << best_parallel << " ms\n";
    std::cout << "speedup:  " << (best_serial / best_parallel) << "x\n";
    std::cout << "tables match\n";
    return 0;
}
