#include <doctest.h>

#include <random>

#include "m0delta/polynomial.hpp"

using m0delta::BigInt;
using m0delta::Polynomial;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
    for (BigInt& c : coeffs) c = BigInt(coeff(rng));
    return Polynomial::from_coefficients(std::move(coeffs));
}

}  // namespace

TEST_CASE("Polynomial: addition") {
    Polynomial a = Polynomial::parse("q - 2");
    Polynomial b = Polynomial::parse("q - 3");
    CHECK((a + b).to_string() == "2*q - 5");
    CHECK(a + Polynomial{} == a);
    CHECK((Polynomial::parse("q^2 + 1") + Polynomial::parse("-q^2 - 1")).is_zero());
}

TEST_CASE("Polynomial: multiplication") {
    CHECK(Polynomial::parse("q - 2") * Polynomial::parse("q - 3") ==
          Polynomial::parse("q^2 - 5*q + 6"));
    Polynomial p = Polynomial::parse("3*q^4 - q + 7");
    CHECK(p * Polynomial::one() == p);
    CHECK(Polynomial::parse("q^2 - 5*q + 6") * Polynomial::parse("q - 4") ==
          Polynomial::parse("q^3 - 9*q^2 + 26*q - 24"));
}

TEST_CASE("Polynomial: evaluation") {
    CHECK(Polynomial::parse("q^3 + 5*q - 4").eval(BigInt(0)) == BigInt(-4));
    CHECK(Polynomial{}.eval(BigInt(17)) == BigInt(0));
    CHECK(Polynomial::parse("q^2 - 5*q + 6").eval(BigInt(1)) == BigInt(2));
}

TEST_CASE("Polynomial: root-range products") {
    CHECK(Polynomial::from_root_range(2, 3) == Polynomial::parse("q^2 - 5*q + 6"));
    CHECK(Polynomial::from_root_range(2, 1).is_one());  // empty product
    CHECK(Polynomial::from_root_range(2, 4) == Polynomial::parse("q^3 - 9*q^2 + 26*q - 24"));
}

TEST_CASE("Polynomial: ring axioms on random inputs") {
    std::mt19937 rng(987123);
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Polynomial{} == a);
        CHECK(a * Polynomial::one() == a);
    }
}

TEST_CASE("Polynomial: degree and leading coefficient are multiplicative") {
    std::mt19937 rng(55221);
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial a = random_poly(rng, 7), b = random_poly(rng, 7);
        if (a.is_zero() || b.is_zero()) continue;
        Polynomial ab = a * b;
        CHECK(ab.degree() == a.degree() + b.degree());
        CHECK(ab.leading() == a.leading() * b.leading());
    }
}

TEST_CASE("Polynomial: evaluation is a ring homomorphism") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<long long> point(-20, 20);
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6);
        BigInt x(point(rng));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("Polynomial: canonical form never stores a zero leading coefficient") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial a = random_poly(rng, 5), b = random_poly(rng, 5);
        for (const Polynomial& p : {a + b, a - b, a * b, a + (-a)}) {
            if (!p.is_zero()) CHECK_FALSE(p.leading().is_zero());
        }
    }
    CHECK(Polynomial::from_coefficients({BigInt(3), BigInt(0), BigInt(0)}).degree() == 0);
}

TEST_CASE("Polynomial: text grammar") {
    CHECK(Polynomial::parse("q^3 + 5*q - 4").to_string() == "q^3 + 5*q - 4");
    CHECK(Polynomial{}.to_string() == "0");
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial::parse("-q + 2").to_string() == "-q + 2");
    CHECK(Polynomial::parse("-12*q^4 - 1").to_string() == "-12*q^4 - 1");
    CHECK(Polynomial::monomial(2, BigInt(-1)).to_string() == "-q^2");

    // canonical renderings parse back to the same value
    std::mt19937 rng(2718);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial p = random_poly(rng, 8);
        CHECK(Polynomial::parse(p.to_string()) == p);
    }

    CHECK_THROWS_AS(Polynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("q +"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("3q"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("q^"), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::parse("* q"), std::invalid_argument);
}

TEST_CASE("Polynomial: q -> q^2 substitution") {
    CHECK(Polynomial::parse("q - 2").substitute_q_squared() == Polynomial::parse("q^2 - 2"));
    CHECK(Polynomial::parse("q^2 - 5*q + 6").substitute_q_squared() ==
          Polynomial::parse("q^4 - 5*q^2 + 6"));
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> point(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial p = random_poly(rng, 5);
        BigInt x(point(rng));
        CHECK(p.substitute_q_squared().eval(x) == p.eval(x * x));
    }
}
