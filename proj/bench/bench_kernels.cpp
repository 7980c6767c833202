// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [--quick] [--reps N]
//
// Each row reports the best wall time over N repetitions and checks that both
// versions return identical results.

#include "hfmap/kernels.hpp"
#include "hfmap/map_assembler.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>

namespace {

using namespace hfmap;
using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(int reps, F&& f) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

struct Row {
    std::string kernel;
    std::string params;
    std::size_t size;
    double serial_ms;
    double omp_ms;
    bool same;
};

template <typename Serial, typename Parallel>
Row measure(const std::string& kernel, const HeckeParams& p, std::size_t size, int reps, Serial serial,
            Parallel parallel) {
    decltype(serial()) a;
    decltype(parallel()) b;
    const double s = best_ms(reps, [&] { a = serial(); });
    const double o = best_ms(reps, [&] { b = parallel(); });
    return {kernel, p.to_string(), size, s, o, a == b};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    bool quick = false;
    int reps = 3;
    app.add_flag("--quick", quick, "small groups only, one repetition");
    app.add_option("--reps", reps, "repetitions per measurement")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    if (quick) {
        reps = 1;
    }

    const std::vector<HeckeParams> params =
        quick ? std::vector<HeckeParams>{{4, 5}, {3, 7}} : std::vector<HeckeParams>{{4, 7}, {4, 11}, {6, 11}, {4, 13}};

    std::vector<Row> rows;
    for (const HeckeParams& p : params) {
        const auto group = enumerate_group(p);
        const auto coords = enumerate_coords(p);
        const auto map = build_algebraic_map(group);
        const auto code = canonical_form(map, 0);
        const auto adj = kernels::serial::adjacency_matrix(coords, p);
        const auto action = kernels::serial::action_table(group, coords);

        rows.push_back(measure("mult_table", p, group.order(), reps,
                               [&] { return kernels::serial::mult_table(group); },
                               [&] { return kernels::omp::mult_table(group); }));
        rows.push_back(measure("adjacency_matrix", p, coords.size(), reps,
                               [&] { return kernels::serial::adjacency_matrix(coords, p); },
                               [&] { return kernels::omp::adjacency_matrix(coords, p); }));
        rows.push_back(measure("action_table", p, group.order(), reps,
                               [&] { return kernels::serial::action_table(group, coords); },
                               [&] { return kernels::omp::action_table(group, coords); }));
        rows.push_back(measure("equivariance", p, group.order(), reps,
                               [&] { return kernels::serial::equivariance_violations(action, adj, coords.size()); },
                               [&] { return kernels::omp::equivariance_violations(action, adj, coords.size()); }));
        rows.push_back(measure("matching_roots", p, map.darts(), reps,
                               [&] { return kernels::serial::matching_roots(map, code); },
                               [&] { return kernels::omp::matching_roots(map, code); }));
    }

    std::printf("threads: %d, repetitions: %d\n", kernels::max_threads(), reps);
    std::printf("%-18s %-14s %8s %12s %12s %8s %6s\n", "kernel", "params", "size", "serial ms", "omp ms", "speedup",
                "same");
    bool all_same = true;
    for (const Row& r : rows) {
        std::printf("%-18s %-14s %8zu %12.3f %12.3f %8.2f %6s\n", r.kernel.c_str(), r.params.c_str(), r.size,
                    r.serial_ms, r.omp_ms, r.omp_ms > 0 ? r.serial_ms / r.omp_ms : 0.0, r.same ? "yes" : "NO");
        all_same = all_same && r.same;
    }
    return all_same ? 0 : 1;
}
