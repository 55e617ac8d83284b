// Compares the OpenMP kernels against their serial reference
// implementations on the workloads that dominate real runs.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "m0delta/dissection.hpp"
#include "m0delta/moduli.hpp"
#include "m0delta/parallel.hpp"
#include "m0delta/series.hpp"

namespace {

using m0delta::DeltaMethod;
using m0delta::Polynomial;
using m0delta::TruncatedSeries;

double time_ms(const std::function<void()>& work) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        auto start = std::chrono::steady_clock::now();
        work();
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

void report(const char* name, const std::function<void()>& serial,
            const std::function<void()>& parallel) {
    m0delta::set_parallel(false);
    double serial_ms = time_ms(serial);
    m0delta::set_parallel(true);
    double parallel_ms = time_ms(parallel);
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

TruncatedSeries open_series(int order) {
    std::vector<Polynomial> tail(static_cast<std::size_t>(order));
    tail[0] = Polynomial::one();
    for (int m = 2; m <= order; ++m)
        tail[static_cast<std::size_t>(m - 1)] = -m0delta::euler_open(m + 1);
    return TruncatedSeries::from_tail(order, std::move(tail));
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", m0delta::thread_count());
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        TruncatedSeries f = open_series(48);
        report(
            "series product (order 48)", [&] { (void)m0delta::mul_serial(f, f); },
            [&] { (void)m0delta::mul_parallel(f, f); });
    }

    report(
        "series reversion (order 26)", [] { (void)m0delta::euler_delta_upto(27, DeltaMethod::inversion); },
        [] { (void)m0delta::euler_delta_upto(27, DeltaMethod::inversion); });

    report(
        "stratification sums (n <= 26)",
        [] { (void)m0delta::euler_delta_upto(26, DeltaMethod::stratification); },
        [] { (void)m0delta::euler_delta_upto(26, DeltaMethod::stratification); });

    report(
        "dissection enumeration (n = 11)",
        [] { (void)m0delta::enumerate_dissections_serial(11); },
        [] { (void)m0delta::enumerate_dissections_parallel(11); });

    return 0;
}
