// Copyright 2026 The stabgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compares the serial reference kernels with their OpenMP counterparts and
// checks that both produce identical results while timing them.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stabgrid/estimator.hpp"
#include "stabgrid/optimizer.hpp"

using namespace stabgrid;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
    std::cout << std::left << std::setw(34) << name << " serial " << std::setw(9)
              << std::fixed << std::setprecision(4) << serial_s << " s   omp " << std::setw(9)
              << parallel_s << " s   speedup " << std::setprecision(2)
              << (parallel_s > 0 ? serial_s / parallel_s : 0.0)
              << (identical ? "" : "   MISMATCH") << "\n";
}

void bench_group_scoring(bool quick) {
    LatticePtr lattice = quick ? make_grid(4, 4) : make_grid(4, 5);
    auto t0 = Clock::now();
    auto serial = score_group_elements(*lattice, Exec::Serial);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = score_group_elements(*lattice, Exec::OpenMP);
    double tp = seconds_since(t0);
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); i++) {
        same = serial[i].mask == parallel[i].mask && serial[i].z_bits == parallel[i].z_bits &&
               serial[i].penalty == parallel[i].penalty && serial[i].weight == parallel[i].weight;
    }
    report("group scoring " + std::to_string(lattice->num_sites()) + " sites", ts, tp, same);
}

void bench_simulation(bool quick, SimBackend backend, const std::string& label) {
    LatticePtr lattice = backend == SimBackend::Statevector ? make_grid(3, 4) : make_grid(4, 4);
    auto [a, b] = checkerboard_patterns(*lattice);
    NoiseModel noise;
    noise.p_flip = 0.05;
    noise.p_vacancy = 0.01;
    noise.seed = 12345;
    std::uint32_t shots = quick ? 2000 : (backend == SimBackend::Statevector ? 400000 : 20000);
#ifdef _OPENMP
    auto partitions = static_cast<std::uint32_t>(omp_get_max_threads());
#else
    std::uint32_t partitions = 4;
#endif

    auto t0 = Clock::now();
    ShotTable serial = simulate_pattern(*lattice, a, shots, noise, partitions, Exec::Serial, backend);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    ShotTable parallel =
        simulate_pattern(*lattice, a, shots, noise, partitions, Exec::OpenMP, backend);
    double tp = seconds_since(t0);
    bool same = serial.data == parallel.data;
    report(label + " " + std::to_string(shots) + " shots", ts, tp, same);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both lanes run serially\n";
#endif
    bench_group_scoring(quick);
    bench_simulation(quick, SimBackend::Statevector, "statevector sampling");
    bench_simulation(quick, SimBackend::Tableau, "tableau sampling");
    return 0;
}
