#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace m0delta {

// Thrown when a division that must be exact leaves a remainder. Every
// division in this library divides a quantity that is an integer by
// construction, so a nonzero remainder always indicates a bug upstream,
// never bad user input.
class ExactDivisionError : public std::logic_error {
  public:
    explicit ExactDivisionError(const std::string& what) : std::logic_error(what) {}
};

// Signed arbitrary-precision integer. The magnitude is a little-endian
// vector of 64-bit limbs with no trailing zero limb; zero stores no limbs
// and sign 0. Values are immutable once built and safe to share across
// threads.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long value);
    BigInt(int value) : BigInt(static_cast<long long>(value)) {}

    static BigInt from_string(std::string_view text);
    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    std::size_t bit_length() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    // Truncated division: the quotient rounds toward zero and the remainder
    // carries the dividend's sign. The divisor must be nonzero.
    struct DivMod;
    DivMod divmod(const BigInt& divisor) const;

    // Division known to be exact; throws ExactDivisionError on a remainder.
    BigInt div_exact(const BigInt& divisor) const;

    BigInt pow(unsigned exponent) const;

    friend bool operator==(const BigInt& lhs, const BigInt& rhs);
    friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

  private:
    int sign_ = 0;
    std::vector<std::uint64_t> limbs_;

    void normalize();
};

struct BigInt::DivMod {
    BigInt quotient;
    BigInt remainder;
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace m0delta
