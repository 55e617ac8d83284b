#include <doctest.h>

#include "m0delta/dissection.hpp"
#include "m0delta/moduli.hpp"
#include "m0delta/parallel.hpp"
#include "m0delta/series.hpp"

using m0delta::DeltaMethod;
using m0delta::Polynomial;
using m0delta::TruncatedSeries;

namespace {

struct SerialGuard {
    bool saved;
    explicit SerialGuard(bool enable) : saved(m0delta::parallel_enabled()) {
        m0delta::set_parallel(enable);
    }
    ~SerialGuard() { m0delta::set_parallel(saved); }
};

}  // namespace

TEST_CASE("parallel switch: stratification sums match the serial reference") {
    std::vector<Polynomial> serial, parallel;
    {
        SerialGuard guard(false);
        serial = m0delta::euler_delta_upto(16, DeltaMethod::stratification);
    }
    {
        SerialGuard guard(true);
        parallel = m0delta::euler_delta_upto(16, DeltaMethod::stratification);
    }
    CHECK(serial == parallel);
}

TEST_CASE("parallel switch: compact sums match the serial reference") {
    std::vector<Polynomial> serial, parallel;
    {
        SerialGuard guard(false);
        serial = m0delta::euler_compact_upto(13);
    }
    {
        SerialGuard guard(true);
        parallel = m0delta::euler_compact_upto(13);
    }
    CHECK(serial == parallel);
}

TEST_CASE("parallel switch: series reversion matches the serial reference") {
    std::vector<Polynomial> serial, parallel;
    {
        SerialGuard guard(false);
        serial = m0delta::euler_delta_upto(14, DeltaMethod::inversion);
    }
    {
        SerialGuard guard(true);
        parallel = m0delta::euler_delta_upto(14, DeltaMethod::inversion);
    }
    CHECK(serial == parallel);
}

TEST_CASE("parallel switch: dissection enumeration matches the serial reference") {
    for (int n : {6, 9}) {
        auto serial = m0delta::enumerate_dissections_serial(n);
        auto parallel = m0delta::enumerate_dissections_parallel(n);
        CHECK(serial == parallel);
    }
}

TEST_CASE("series kernels: one large product, both paths") {
    const int order = 24;
    std::vector<Polynomial> tail(order);
    tail[0] = Polynomial::one();
    for (int m = 2; m <= order; ++m) tail[m - 1] = -m0delta::euler_open(m + 1);
    TruncatedSeries f = TruncatedSeries::from_tail(order, std::move(tail));
    CHECK(m0delta::mul_serial(f, f) == m0delta::mul_parallel(f, f));
}

TEST_CASE("thread controls are safe to call") {
    m0delta::set_thread_count(2);
    CHECK(m0delta::thread_count() >= 1);
}
