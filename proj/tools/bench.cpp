// Micro-benchmark comparing the serial reference kernels against the
// OpenMP-parallel ones: amoeba raster scan, doubling decimation, and batched
// Ronkin surface evaluation.

#include <chrono>
#include <cstdio>
#include <vector>

#include "decilim/decimate.hpp"
#include "decilim/parallel.hpp"
#include "decilim/parser.hpp"
#include "decilim/ronkin.hpp"

using namespace decilim;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_of(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = clock_type::now();
        fn();
        best = std::min(best,
                        std::chrono::duration<double>(clock_type::now() - t0).count());
    }
    return best;
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", thread_count());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "parallel s", "speedup");

    {
        LaurentPoly f = parse_poly("5+x+x^-1+y+y^-1");
        double box[4] = {-3, 3, -3, 3};
        volatile int sink = 0;
        double ts = seconds_of([&] {
            auto r = amoeba_scan_serial(f, box, 192, 16);
            sink += r.cells[0];
        });
        double tp = seconds_of([&] {
            auto r = amoeba_scan(f, box, 192, 16);
            sink += r.cells[0];
        });
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", "amoeba scan 192x192 N=16", ts, tp,
                    ts / tp);
    }

    {
        LaurentPoly f = parse_poly("1+x+y");
        volatile std::size_t sink = 0;
        double ts = seconds_of([&] { sink += decimate_pow2_serial(f, 32).term_count(); });
        double tp = seconds_of([&] {
            sink += decimate(f, 32, DecimationMethod::Doubling).term_count();
        });
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", "doubling decimation to N=32", ts, tp,
                    ts / tp);
    }

    {
        LaurentPoly f = parse_poly("1+x+y");
        const int n = 24;
        std::vector<double> vals(n * n);
        auto surface = [&](bool parallel) {
#pragma omp parallel for schedule(dynamic) if (parallel)
            for (long i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::vector<double> u = {-1.5 + 3.0 * i / (n - 1),
                                             -1.5 + 3.0 * j / (n - 1)};
                    vals[static_cast<std::size_t>(i) * n + j] =
                        fiber_jensen(f, u, 1, 1e-7).value;
                }
        };
        double ts = seconds_of([&] { surface(false); }, 2);
        double tp = seconds_of([&] { surface(true); }, 2);
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", "ronkin surface 24x24 @1e-7", ts, tp,
                    ts / tp);
    }

    return 0;
}
