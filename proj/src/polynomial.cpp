#include "m0delta/polynomial.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace m0delta {

namespace {
const BigInt kZero{};
}

Polynomial::Polynomial(BigInt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::from_coefficients(std::vector<BigInt> ascending_powers) {
    Polynomial out;
    out.coeffs_ = std::move(ascending_powers);
    out.normalize();
    return out;
}

Polynomial Polynomial::monomial(std::size_t power, BigInt coefficient) {
    Polynomial out;
    if (coefficient.is_zero()) return out;
    out.coeffs_.resize(power + 1);
    out.coeffs_[power] = std::move(coefficient);
    return out;
}

Polynomial Polynomial::from_root_range(long long lo, long long hi) {
    Polynomial acc = one();
    for (long long i = lo; i <= hi; ++i) {
        acc *= from_coefficients({BigInt(-i), BigInt(1)});
    }
    return acc;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : kZero;
}

const BigInt& Polynomial::leading() const {
    if (is_zero()) throw std::invalid_argument("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    out.coeffs_.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt{});
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.normalize();
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::scaled(const BigInt& factor) const {
    Polynomial out;
    if (factor.is_zero()) return out;
    out.coeffs_.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.coeffs_.push_back(c * factor);
    return out;
}

Polynomial Polynomial::div_exact_scalar(const BigInt& divisor) const {
    Polynomial out;
    out.coeffs_.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.coeffs_.push_back(c.div_exact(divisor));
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

BigInt Polynomial::eval(const BigInt& x) const {
    BigInt acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * x + coeffs_[k];
    }
    return acc;
}

Polynomial Polynomial::substitute_q_squared() const {
    Polynomial out;
    if (is_zero()) return out;
    out.coeffs_.assign(2 * coeffs_.size() - 1, BigInt{});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[2 * k] = coeffs_[k];
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt mag = c.abs();
        if (k == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) {
                out += mag.to_string();
                out += '*';
            }
            out += 'q';
            if (k > 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("Polynomial: cannot parse \"" + std::string(text) +
                                    "\": " + why + " at offset " + std::to_string(pos));
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    // term := integer | integer '*' qpow | qpow ; qpow := 'q' ['^' integer]
    void read_term(int sign, std::vector<BigInt>& acc) {
        skip_ws();
        if (pos == text.size()) fail("expected term");
        BigInt magnitude{1};
        bool have_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            magnitude = BigInt::from_string(read_digits());
            have_coefficient = true;
            skip_ws();
            if (pos < text.size() && peek() == '*') {
                ++pos;
                skip_ws();
                if (pos == text.size() || peek() != 'q') fail("expected q after '*'");
            } else if (pos < text.size() && peek() == 'q') {
                fail("missing '*' between coefficient and q");
            }
        }
        std::size_t power = 0;
        if (pos < text.size() && peek() == 'q') {
            ++pos;
            power = 1;
            skip_ws();
            if (pos < text.size() && peek() == '^') {
                ++pos;
                power = std::stoul(read_digits());
            }
        } else if (!have_coefficient) {
            fail("expected coefficient or q");
        }
        if (acc.size() <= power) acc.resize(power + 1);
        if (sign < 0) magnitude = -magnitude;
        acc[power] += magnitude;
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
    PolyParser p{text};
    std::vector<BigInt> acc;
    if (p.at_end()) p.fail("empty input");
    int sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
        if (p.peek() == '-') sign = -1;
        ++p.pos;
    }
    p.read_term(sign, acc);
    while (!p.at_end()) {
        char op = p.peek();
        if (op != '+' && op != '-') p.fail("expected '+' or '-'");
        ++p.pos;
        p.read_term(op == '-' ? -1 : 1, acc);
    }
    return from_coefficients(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& value) {
    return os << value.to_string();
}

}  // namespace m0delta
