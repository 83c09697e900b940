// Compares the serial reference sweep against the OpenMP path and checks that
// both produce identical results.
#include <chrono>
#include <cstdio>

#include "icfb/sweep.hpp"
#include "icfb/verify.hpp"

using namespace icfb;

namespace {

double run_ms(const char* claim, int jobs, long long* failures) {
    VerifyOptions opt;
    opt.jobs = jobs;
    opt.samples = 20000;
    opt.grid_points = 6;
    opt.rho_grid = 65;
    opt.max_n = 5;
    const auto t0 = std::chrono::steady_clock::now();
    const VerifyReport rep = run_claim(claim, opt);
    *failures = rep.failure_count;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const int jobs = default_jobs();
    std::printf("available parallelism: %d\n", jobs);
    for (const char* claim : {"inclusion", "lemma4", "gap2bit", "delta-bound"}) {
        long long fs = -1, fp = -1;
        const double serial = run_ms(claim, 1, &fs);
        const double parallel = run_ms(claim, jobs, &fp);
        std::printf("%-12s serial %8.1f ms   omp(%d) %8.1f ms   speedup %.2fx   results %s\n", claim, serial, jobs,
                    parallel, serial / parallel, fs == fp ? "identical" : "DIFFER");
        if (fs != fp) return 1;
    }
    return 0;
}
