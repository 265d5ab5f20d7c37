// Serial reference vs OpenMP sweep on the Fig. 2(a)-style overlap grid.
//
//   bench_sweep [n_sites] [grid_points] [repeats]

#include "gsfid/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace gsfid::analysis;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

bool identical(const SweepTable& a, const SweepTable& b) {
    if (a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].value != b.rows[i].value && !(a.rows[i].value != a.rows[i].value))
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const long n_sites = argc > 1 ? std::atol(argv[1]) : 20001;
    const std::size_t points = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 31;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

    SweepSpec spec;
    spec.kind = ValueKind::overlap;
    spec.base.n_sites = n_sites;
    spec.axes = {{"gamma", linear_grid(-1.5, 1.5, points)}, {"lambda", linear_grid(-1.5, 1.5, points)}};

    SweepTable reference;
    const double serial = best_of(repeats, [&] { reference = sweep_serial(spec); });
    std::cout << "cells " << points * points << "  n_sites " << n_sites << "\n";
    std::cout << "serial            " << serial << " s\n";

    const int max_threads = omp_get_max_threads();
    for (int workers = 1; workers <= max_threads; workers *= 2) {
        SweepTable table;
        const double t = best_of(repeats, [&] { table = sweep_parallel(spec, workers); });
        std::cout << "parallel x" << workers << (workers < 10 ? "       " : "      ") << t << " s  speedup "
                  << serial / t << (identical(reference, table) ? "  identical" : "  MISMATCH") << "\n";
    }
    return 0;
}
