// Serial vs OpenMP refutation kernels. Every run rebuilds its reals so that
// neither side benefits from approximants memoized by the other.
//
//   bench_kernels [reals] [indices]     (OMP_NUM_THREADS picks the thread count)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "bishop/kernels.hpp"
#include "bishop/seq.hpp"

using namespace bishop;

namespace {

std::vector<Real> workload(int count) {
    std::vector<Real> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rat q(BigInt(i % 7 - 3), BigInt(5 + i % 4));
        Real e = exp_rational(q);
        Real shifted = real_add(real_mul(e, real_from_rat(Rat(BigInt(i + 1), BigInt(3)))), real_from_rat(q));
        out.push_back(real_max(shifted, real_neg(e)));
    }
    return out;
}

template <class F>
double seconds(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int reals = argc > 1 ? std::atoi(argv[1]) : 16;
    long top = argc > 2 ? std::atol(argv[2]) : 400;
    IndexSchedule indices = range_schedule(1, top);
    for (long big = 1000; big <= 1000000000L; big *= 10) indices.emplace_back(big);

    int serial_bad = 0, parallel_bad = 0;
    std::vector<Real> a = workload(reals);
    double t_serial = seconds([&] {
        for (const Real& x : a) serial_bad += kernels::regularity_violation_serial(x, indices).has_value();
    });
    std::vector<Real> b = workload(reals);
    double t_parallel = seconds([&] {
        for (const Real& x : b) parallel_bad += kernels::regularity_violation_parallel(x, indices).has_value();
    });

    std::printf("reals %d, indices %zu, threads %d\n", reals, indices.size(), kernels::max_threads());
    std::printf("serial    %8.3f s  (%d violations)\n", t_serial, serial_bad);
    std::printf("parallel  %8.3f s  (%d violations)\n", t_parallel, parallel_bad);
    std::printf("speedup   %8.2fx\n", t_parallel > 0 ? t_serial / t_parallel : 0.0);
    return serial_bad == parallel_bad ? 0 : 1;
}
