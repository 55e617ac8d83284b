#include "m0delta/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <utility>

namespace m0delta {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Limbs = std::vector<u64>;

void trim(Limbs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int cmp_mag(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Limbs add_mag(const Limbs& a, const Limbs& b) {
    const Limbs& hi = a.size() >= b.size() ? a : b;
    const Limbs& lo = a.size() >= b.size() ? b : a;
    Limbs out(hi.size());
    u64 carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        u128 cur = static_cast<u128>(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
        out[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) out.push_back(carry);
    return out;
}

// requires |a| >= |b|
Limbs sub_mag(const Limbs& a, const Limbs& b) {
    Limbs out(a.size());
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 res = a[i] - bi - borrow;
        borrow = (static_cast<u128>(bi) + borrow > a[i]) ? 1 : 0;
        out[i] = res;
    }
    trim(out);
    return out;
}

void sub_mag_inplace(Limbs& a, const Limbs& b) {
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 res = a[i] - bi - borrow;
        borrow = (static_cast<u128>(bi) + borrow > a[i]) ? 1 : 0;
        a[i] = res;
    }
    trim(a);
}

Limbs mul_mag(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty()) return {};
    Limbs out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        out[i + b.size()] = carry;
    }
    trim(out);
    return out;
}

std::size_t bit_length_mag(const Limbs& a) {
    if (a.empty()) return 0;
    return 64 * (a.size() - 1) + (64 - static_cast<std::size_t>(std::countl_zero(a.back())));
}

bool get_bit(const Limbs& a, std::size_t i) {
    return (a[i / 64] >> (i % 64)) & 1;
}

void shl1_add_bit(Limbs& r, bool bit) {
    u64 carry = bit ? 1 : 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 next = r[i] >> 63;
        r[i] = (r[i] << 1) | carry;
        carry = next;
    }
    if (carry) r.push_back(carry);
}

// Shift-subtract long division of magnitudes. Quadratic in the bit length,
// which is ample here: nothing in this artifact exceeds a few thousand bits.
std::pair<Limbs, Limbs> divmod_mag(const Limbs& a, const Limbs& b) {
    if (cmp_mag(a, b) < 0) return {Limbs{}, a};
    std::size_t bits = bit_length_mag(a);
    Limbs quotient((bits + 63) / 64, 0);
    Limbs rem;
    for (std::size_t i = bits; i-- > 0;) {
        shl1_add_bit(rem, get_bit(a, i));
        if (cmp_mag(rem, b) >= 0) {
            sub_mag_inplace(rem, b);
            quotient[i / 64] |= u64{1} << (i % 64);
        }
    }
    trim(quotient);
    return {std::move(quotient), std::move(rem)};
}

std::pair<Limbs, u64> divmod_small(const Limbs& a, u64 d) {
    Limbs q(a.size());
    u128 rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        u128 cur = (rem << 64) | a[i];
        q[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    trim(q);
    return {std::move(q), static_cast<u64>(rem)};
}

void mul_small_inplace(Limbs& a, u64 m) {
    u64 carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u128 cur = static_cast<u128>(a[i]) * m + carry;
        a[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) a.push_back(carry);
    trim(a);
}

void add_small_inplace(Limbs& a, u64 v) {
    u64 carry = v;
    for (std::size_t i = 0; i < a.size() && carry; ++i) {
        u128 cur = static_cast<u128>(a[i]) + carry;
        a[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) a.push_back(carry);
}

constexpr u64 kDecChunk = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr int kDecChunkDigits = 19;

}  // namespace

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    u64 mag = value > 0 ? static_cast<u64>(value) : 0 - static_cast<u64>(value);
    limbs_.push_back(mag);
}

void BigInt::normalize() {
    trim(limbs_);
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    while (pos < text.size()) {
        std::size_t take = std::min<std::size_t>(kDecChunkDigits, text.size() - pos);
        u64 chunk = 0;
        u64 scale = 1;
        for (std::size_t k = 0; k < take; ++k) {
            char c = text[pos + k];
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("BigInt: invalid digit in numeral");
            chunk = chunk * 10 + static_cast<u64>(c - '0');
            scale *= 10;
        }
        mul_small_inplace(out.limbs_, scale);
        add_small_inplace(out.limbs_, chunk);
        pos += take;
    }
    out.sign_ = out.limbs_.empty() ? 0 : sign;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    Limbs rest = limbs_;
    while (!rest.empty()) {
        auto [q, r] = divmod_small(rest, kDecChunk);
        std::string group = std::to_string(r);
        if (!q.empty()) group.insert(0, kDecChunkDigits - group.size(), '0');
        digits.insert(0, group);
        rest = std::move(q);
    }
    if (sign_ < 0) digits.insert(0, 1, '-');
    return digits;
}

std::size_t BigInt::bit_length() const { return bit_length_mag(limbs_); }

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
        return *this;
    }
    int cmp = cmp_mag(limbs_, rhs.limbs_);
    if (cmp == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (cmp > 0) {
        limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_mag(rhs.limbs_, limbs_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.sign_ == 0 || rhs.sign_ == 0) return out;
    out.limbs_ = mul_mag(lhs.limbs_, rhs.limbs_);
    out.sign_ = lhs.sign_ * rhs.sign_;
    return out;
}

BigInt::DivMod BigInt::divmod(const BigInt& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    DivMod out;
    if (is_zero()) return out;
    auto [q, r] = divmod_mag(limbs_, divisor.limbs_);
    out.quotient.limbs_ = std::move(q);
    out.quotient.sign_ = out.quotient.limbs_.empty() ? 0 : sign_ * divisor.sign_;
    out.remainder.limbs_ = std::move(r);
    out.remainder.sign_ = out.remainder.limbs_.empty() ? 0 : sign_;
    return out;
}

BigInt BigInt::div_exact(const BigInt& divisor) const {
    DivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero())
        throw ExactDivisionError("BigInt: division of " + to_string() + " by " +
                                 divisor.to_string() + " is not exact");
    return std::move(dm.quotient);
}

BigInt BigInt::pow(unsigned exponent) const {
    BigInt result{1};
    BigInt base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

bool operator==(const BigInt& lhs, const BigInt& rhs) {
    return lhs.sign_ == rhs.sign_ && lhs.limbs_ == rhs.limbs_;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.sign_ != rhs.sign_) return lhs.sign_ <=> rhs.sign_;
    int cmp = cmp_mag(lhs.limbs_, rhs.limbs_);
    if (lhs.sign_ < 0) cmp = -cmp;
    return cmp <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace m0delta
