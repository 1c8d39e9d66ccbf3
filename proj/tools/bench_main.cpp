// Benchmarks the OpenMP product kernels against the serial reference
// implementations on the pentagon workloads.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skein/dilog.hpp"
#include "skein/quantum_torus.hpp"
#include "skein/torus_skein.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = Clock::now();
        f();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int skein_degree = 7;
    int qt_degree = 12;
    int repeats = 3;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        auto next = [&](int& target) {
            if (k + 1 < argc) target = std::atoi(argv[++k]);
        };
        if (arg == "--skein-degree") next(skein_degree);
        if (arg == "--qt-degree") next(qt_degree);
        if (arg == "--repeats") next(repeats);
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %13s %13s\n", "", "serial", "parallel");

    {
        skein::QTSeries a = skein::phi_series({1, 0}, qt_degree);
        skein::QTSeries b = skein::phi_series({0, 1}, qt_degree);
        skein::QTSeries rs, rp;
        double ts = time_best_of(repeats, [&] { rs = skein::qt_mul_serial(a, b); });
        double tp = time_best_of(repeats, [&] { rp = skein::qt_mul(a, b); });
        row("qt_mul, Phi_x * Phi_y, N=" + std::to_string(qt_degree), ts, tp, rs == rp);
    }

    {
        skein::SkeinElement qy = skein::skein_dilog({0, 1}, skein_degree);
        skein::SkeinElement qxy = skein::skein_dilog({1, 1}, skein_degree);
        skein::SkeinElement qx = skein::skein_dilog({1, 0}, skein_degree);
        skein::SkeinElement rs, rp;
        double ts = time_best_of(repeats, [&] {
            rs = skein::multiply_serial(skein::multiply_serial(qy, qxy), qx);
        });
        double tp =
            time_best_of(repeats, [&] { rp = skein::multiply(skein::multiply(qy, qxy), qx); });
        row("skein multiply, Qy*Qxy*Qx, N=" + std::to_string(skein_degree), ts, tp, rs == rp);
    }

    {
        auto t0 = Clock::now();
        auto report = skein::pentagon_check(skein_degree, skein::AlgebraKind::torus_skein);
        std::printf("pentagon end-to-end, N=%d: %.1f ms (%s)\n", skein_degree, ms_since(t0),
                    report.passed ? "pass" : "fail");
    }
    return 0;
}
