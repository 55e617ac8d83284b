#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "m0delta/bigint.hpp"

namespace m0delta {

// Dense univariate polynomial in q over BigInt, kept in canonical form:
// the stored leading coefficient is nonzero and the zero polynomial stores
// nothing (degree() == -1). This is the coefficient ring for every series
// in the library; all Poincare polynomials live here.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(BigInt constant);
    explicit Polynomial(long long constant) : Polynomial(BigInt(constant)) {}

    static Polynomial from_coefficients(std::vector<BigInt> ascending_powers);
    static Polynomial one() { return Polynomial(BigInt(1)); }
    static Polynomial variable() { return monomial(1, BigInt(1)); }
    static Polynomial monomial(std::size_t power, BigInt coefficient);

    // prod_{i=lo}^{hi} (q - i); an empty range (hi < lo) gives 1
    static Polynomial from_root_range(long long lo, long long hi);

    // Parses the canonical text grammar, e.g. "q^3 + 5*q - 4".
    static Polynomial parse(std::string_view text);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    const BigInt& coeff(std::size_t power) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    Polynomial scaled(const BigInt& factor) const;
    Polynomial div_exact_scalar(const BigInt& divisor) const;
    Polynomial pow(unsigned exponent) const;

    BigInt eval(const BigInt& x) const;

    // q -> q^2, used to build the even-weight generating series.
    Polynomial substitute_q_squared() const;

    // Canonical rendering: terms in descending powers, "c*q^k" with the
    // usual elisions ("1*" dropped, "q^1" -> "q", "+ -c" -> "- c").
    std::string to_string() const;

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

  private:
    std::vector<BigInt> coeffs_;  // coeffs_[k] multiplies q^k

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Polynomial& value);

}  // namespace m0delta
