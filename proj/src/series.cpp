#include "m0delta/series.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "m0delta/parallel.hpp"
#include "m0delta/partition.hpp"

namespace m0delta {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    tail_.resize(static_cast<std::size_t>(order));
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries out(order);
    out.tail_[0] = Polynomial::one();
    return out;
}

TruncatedSeries TruncatedSeries::from_tail(int order, std::vector<Polynomial> tail) {
    TruncatedSeries out(order);
    if (tail.size() > static_cast<std::size_t>(order))
        throw std::invalid_argument("TruncatedSeries: tail longer than the order");
    for (std::size_t k = 0; k < tail.size(); ++k) out.tail_[k] = std::move(tail[k]);
    return out;
}

const Polynomial& TruncatedSeries::coeff(int n) const {
    if (n < 1 || n > order_)
        throw std::invalid_argument("TruncatedSeries: coefficient index out of range");
    return tail_[static_cast<std::size_t>(n - 1)];
}

bool TruncatedSeries::is_zero() const {
    for (const Polynomial& p : tail_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order_);
    for (std::size_t k = 0; k < tail_.size(); ++k) out.tail_[k] = -tail_[k];
    return out;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncatedSeries: mixed truncation orders (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

using Tail = std::vector<Polynomial>;

// out[n-1] = sum_{i+j=n} a_i b_j for n <= upto; both factors have zero
// constant term, so the sum starts at x^2.
Tail mul_tail_serial(const Tail& a, const Tail& b, int upto) {
    Tail out(static_cast<std::size_t>(upto));
    for (int n = 2; n <= upto; ++n) {
        Polynomial acc;
        for (int i = 1; i < n; ++i) {
            acc += a[static_cast<std::size_t>(i - 1)] * b[static_cast<std::size_t>(n - i - 1)];
        }
        out[static_cast<std::size_t>(n - 1)] = std::move(acc);
    }
    return out;
}

Tail mul_tail_parallel(const Tail& a, const Tail& b, int upto) {
    Tail out(static_cast<std::size_t>(upto));
#pragma omp parallel for schedule(dynamic)
    for (int n = 2; n <= upto; ++n) {
        Polynomial acc;
        for (int i = 1; i < n; ++i) {
            acc += a[static_cast<std::size_t>(i - 1)] * b[static_cast<std::size_t>(n - i - 1)];
        }
        out[static_cast<std::size_t>(n - 1)] = std::move(acc);
    }
    return out;
}

Tail mul_tail(const Tail& a, const Tail& b, int upto) {
    return parallel_enabled() ? mul_tail_parallel(a, b, upto) : mul_tail_serial(a, b, upto);
}

// sum_{k=1}^{upto} outer_k * inner^k, every product truncated at `upto`.
Tail compose_tail(const Tail& outer, const Tail& inner, int upto) {
    Tail acc(static_cast<std::size_t>(upto));
    Tail power(inner.begin(), inner.begin() + upto);
    for (int k = 1; k <= upto; ++k) {
        const Polynomial& ok = outer[static_cast<std::size_t>(k - 1)];
        if (!ok.is_zero()) {
            for (int m = k; m <= upto; ++m) {  // inner^k starts at x^k
                const Polynomial& pm = power[static_cast<std::size_t>(m - 1)];
                if (!pm.is_zero()) acc[static_cast<std::size_t>(m - 1)] += ok * pm;
            }
        }
        if (k < upto) power = mul_tail(power, inner, upto);
    }
    return acc;
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] += rhs.tail_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] -= rhs.tail_[k];
    return *this;
}

TruncatedSeries TruncatedSeries::scaled(const Polynomial& factor) const {
    TruncatedSeries out(order_);
    for (std::size_t k = 0; k < tail_.size(); ++k) out.tail_[k] = tail_[k] * factor;
    return out;
}

TruncatedSeries mul_serial(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_order(lhs, rhs);
    return TruncatedSeries::from_tail(lhs.order(),
                                      mul_tail_serial(lhs.tail(), rhs.tail(), lhs.order()));
}

TruncatedSeries mul_parallel(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_order(lhs, rhs);
    return TruncatedSeries::from_tail(lhs.order(),
                                      mul_tail_parallel(lhs.tail(), rhs.tail(), lhs.order()));
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return parallel_enabled() ? mul_parallel(lhs, rhs) : mul_serial(lhs, rhs);
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_same_order(outer, inner);
    return TruncatedSeries::from_tail(outer.order(),
                                      compose_tail(outer.tail(), inner.tail(), outer.order()));
}

namespace {

void require_unit_leading(const TruncatedSeries& s, const char* who) {
    if (!s.coeff(1).is_one())
        throw std::invalid_argument(std::string(who) +
                                    ": coefficient of x must be the constant 1");
}

}  // namespace

TruncatedSeries revert(const TruncatedSeries& s) {
    require_unit_leading(s, "revert");
    int order = s.order();
    Tail t(static_cast<std::size_t>(order));
    t[0] = Polynomial::one();
    // With t fixed below order n and t_n still zero, the x^n coefficient of
    // s(t(x)) is exactly the defect that t_n must cancel.
    for (int n = 2; n <= order; ++n) {
        Tail composed = compose_tail(s.tail(), t, n);
        t[static_cast<std::size_t>(n - 1)] = -composed[static_cast<std::size_t>(n - 1)];
    }
    return TruncatedSeries::from_tail(order, std::move(t));
}

TruncatedSeries revert_lagrange(const TruncatedSeries& s) {
    require_unit_leading(s, "revert_lagrange");
    int order = s.order();
    Tail t(static_cast<std::size_t>(order));
    t[0] = Polynomial::one();
    // subtracted-tail convention: s = x - sum u_m x^m
    std::vector<Polynomial> u(static_cast<std::size_t>(order) + 1);
    for (int m = 2; m <= order; ++m) u[static_cast<std::size_t>(m)] = -s.coeff(m);
    for (int n = 2; n <= order; ++n) {
        Polynomial v;
        for (const Partition& type : partitions(n - 1)) {
            Polynomial term{dissection_count(type)};
            for (auto [part, mult] : type.entries()) {
                term *= u[static_cast<std::size_t>(part + 1)].pow(static_cast<unsigned>(mult));
            }
            v += term;
        }
        t[static_cast<std::size_t>(n - 1)] = std::move(v);
    }
    return TruncatedSeries::from_tail(order, std::move(t));
}

TruncatedSeries egf_scale(const TruncatedSeries& s, EgfDirection direction) {
    int order = s.order();
    BigInt order_factorial = factorial(order);
    Tail out(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) {
        BigInt scale = order_factorial.div_exact(factorial(n));
        out[static_cast<std::size_t>(n - 1)] =
            direction == EgfDirection::to_egf ? s.coeff(n).scaled(scale)
                                              : s.coeff(n).div_exact_scalar(scale);
    }
    return TruncatedSeries::from_tail(order, std::move(out));
}

TruncatedSeries compose_egf(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_same_order(outer, inner);
    int order = outer.order();
    BigInt nf = factorial(order);

    // Clearing factorials: with A = N! * inner and weights
    // w_k = (N!/k!) * N!^{N-k}, the integer series
    //   T = sum_k outer_k * w_k * A^k
    // equals N!^{N+1} times the exponential composition, so the numerator
    // of x^n in the result is T_n * n! / N!^{N+1}, an exact division.
    Tail scaled_inner = egf_scale(inner, EgfDirection::to_egf).tail();
    std::vector<BigInt> weight(static_cast<std::size_t>(order) + 1);
    weight[static_cast<std::size_t>(order)] = BigInt(1);
    for (int k = order - 1; k >= 1; --k) {
        weight[static_cast<std::size_t>(k)] =
            weight[static_cast<std::size_t>(k + 1)] * nf * BigInt(k + 1);
    }

    Tail acc(static_cast<std::size_t>(order));
    Tail power = scaled_inner;
    for (int k = 1; k <= order; ++k) {
        const Polynomial& ok = outer.coeff(k);
        if (!ok.is_zero()) {
            Polynomial factor = ok.scaled(weight[static_cast<std::size_t>(k)]);
            for (int m = k; m <= order; ++m) {
                const Polynomial& pm = power[static_cast<std::size_t>(m - 1)];
                if (!pm.is_zero()) acc[static_cast<std::size_t>(m - 1)] += factor * pm;
            }
        }
        if (k < order) power = mul_tail(power, scaled_inner, order);
    }

    BigInt denom = weight[1] * nf;  // weight[1] = N!^N, so this is N!^{N+1}
    Tail out(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) {
        out[static_cast<std::size_t>(n - 1)] =
            acc[static_cast<std::size_t>(n - 1)].scaled(factorial(n)).div_exact_scalar(denom);
    }
    return TruncatedSeries::from_tail(order, std::move(out));
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int n = 1; n <= order_; ++n) {
        const Polynomial& p = tail_[static_cast<std::size_t>(n - 1)];
        if (p.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (n == 1 && p.is_one()) {
            out += 'x';
            continue;
        }
        out += '(';
        out += p.to_string();
        out += ")*x";
        if (n > 1) {
            out += '^';
            out += std::to_string(n);
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(x^" + std::to_string(order_ + 1) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& value) {
    return os << value.to_string();
}

}  // namespace m0delta
