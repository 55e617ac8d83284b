#pragma once

#include <string>
#include <vector>

#include "m0delta/polynomial.hpp"

namespace m0delta {

// Formal power series in x with Polynomial coefficients, truncated at a
// fixed order N: the coefficients of x^1..x^N are tracked and the constant
// term is identically zero by construction. Operations on series of
// different orders are rejected outright; silent truncation is how wrong
// inversion tables happen.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order);

    static TruncatedSeries identity(int order);  // the series x

    // tail[k] becomes the coefficient of x^{k+1}; shorter tails are padded
    // with zeros. Tails longer than the order are rejected.
    static TruncatedSeries from_tail(int order, std::vector<Polynomial> tail);

    int order() const { return order_; }
    const Polynomial& coeff(int n) const;  // 1 <= n <= order
    const std::vector<Polynomial>& tail() const { return tail_; }
    bool is_zero() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
        return lhs += rhs;
    }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
        return lhs -= rhs;
    }

    TruncatedSeries scaled(const Polynomial& factor) const;

    // "x + (p2)*x^2 + ... + O(x^{N+1})" with coefficients in the
    // polynomial grammar; zero coefficients are omitted.
    std::string to_string() const;

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        return lhs.order_ == rhs.order_ && lhs.tail_ == rhs.tail_;
    }

  private:
    int order_ = 0;
    std::vector<Polynomial> tail_;  // tail_[k] multiplies x^{k+1}
};

// Truncated product. operator* dispatches on the global parallel switch;
// the _serial and _parallel kernels are exposed for tests and benchmarks.
TruncatedSeries mul_serial(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries mul_parallel(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// outer(inner(x)) truncated at the common order.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Compositional inverse by coefficient-by-coefficient recursion: t_n is
// solved from the x^n coefficient of s(t(x)) = x. Requires the coefficient
// of x^1 to be the constant 1 (no silent normalization).
TruncatedSeries revert(const TruncatedSeries& s);

// Compositional inverse through the partition-sum form of Lagrange's
// formula, with dissection counts as the coefficients. Independent of
// revert(); the two must agree at every order.
TruncatedSeries revert_lagrange(const TruncatedSeries& s);

enum class EgfDirection { to_egf, from_egf };

// Exponential-convention bookkeeping without rational coefficients: a
// series with integer numerators a_n (implicitly a_n/n!) maps to the
// integer series with coefficient a_n * N!/n!, i.e. N! times the actual
// exponential series. from_egf inverts this and insists every division is
// exact; a remainder means a computation bug, since every quantity here is
// integral once the factorials clear.
TruncatedSeries egf_scale(const TruncatedSeries& s, EgfDirection direction);

// Composition of two series understood in the exponential convention
// (coefficient n carries an implicit 1/n!), returning numerators in the
// same convention. Computed over the integers by clearing factorials and
// dividing back out at the end, each division checked exact.
TruncatedSeries compose_egf(const TruncatedSeries& outer, const TruncatedSeries& inner);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& value);

}  // namespace m0delta
