#pragma once

#include <string>
#include <vector>

#include "m0delta/polynomial.hpp"
#include "m0delta/series.hpp"

namespace m0delta {

// The three independent routes to the Poincare polynomial of the affine
// dihedral space: summing over the strata indexed by polygon dissections,
// reading coefficients of the compositional inverse of the open-space
// generating series, and the quadratic/cubic coefficient recurrence.
enum class DeltaMethod { stratification, inversion, recurrence };

// e(M_{0,n})(q) for the open moduli space with n marked points:
// the product (q-2)(q-3)...(q-(n-2)); 1 for n = 3. Requires n >= 3.
Polynomial euler_open(int n);

// e(M^delta_{0,n})(q), degree n-3. All three methods agree exactly.
Polynomial euler_delta(int n, DeltaMethod method);
// One entry per n = 3..n_max; far cheaper than per-n calls for the
// inversion and recurrence methods, which share their forward pass.
std::vector<Polynomial> euler_delta_upto(int n_max, DeltaMethod method);

// e(Mbar_{0,n})(q) for the smooth compactification: non-negative,
// palindromic, degree n-3.
Polynomial euler_compact(int n);
std::vector<Polynomial> euler_compact_upto(int n_max);

// Betti numbers a[n][i] = dim H^i of the affine dihedral space, extracted
// from the Poincare polynomial through purity: a_{n,i} is (-1)^i times the
// coefficient of q^{(n-3)-i}. Rows n = 3..n_max, columns i = 0..n-3.
class BettiTable {
  public:
    BettiTable() = default;

    // rows[r] holds row n = r+3 and must have exactly r+1 entries, all
    // non-negative.
    explicit BettiTable(std::vector<std::vector<BigInt>> rows);

    static BettiTable from_polynomials(const std::vector<Polynomial>& euler_by_n);

    int n_max() const { return static_cast<int>(rows_.size()) + 2; }
    const std::vector<BigInt>& row(int n) const;
    const BigInt& at(int n, int i) const;

    friend bool operator==(const BettiTable& lhs, const BettiTable& rhs) {
        return lhs.rows_ == rhs.rows_;
    }

  private:
    std::vector<std::vector<BigInt>> rows_;
};

BettiTable betti_table(int n_max, DeltaMethod method = DeltaMethod::stratification);

// Checks the closed expressions for the first two nontrivial columns,
// a_{n,2} = C(n-1,4) and a_{n,3} = 4*C(n,6), against the computed table.
struct ClosedFormulaRow {
    int n = 0;
    bool a2_matches = false;
    bool a3_matches = false;
};
struct ClosedFormulaReport {
    std::vector<ClosedFormulaRow> rows;
    bool all_pass() const;
};
ClosedFormulaReport closed_formula_check(int n_max);

enum class MiddleMethod { recurrence, q_zero };

// dim H^{n-3} of the affine dihedral space for n = 4..n_max, either by the
// integer recurrence or by evaluating the Poincare polynomial at q = 0 and
// applying the purity sign.
std::vector<BigInt> middle_betti(int n_max, MiddleMethod method);
// Computes both and insists they agree.
std::vector<BigInt> middle_betti_checked(int n_max);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::vector<int> bad_orders;  // orders with a nonzero residual coefficient
    std::string first_residual;   // rendering of the first offending coefficient
};
struct InversionReport {
    int order = 0;
    std::vector<IdentityCheck> identities;
    bool all_pass() const;
};

// Verifies the two inversion identities at the given truncation order:
// (a) the ordinary generating series of the open and dihedral spaces are
//     compositional inverses, and
// (b) the exponential series of the open space and of the compactification
//     are compositional inverses, both written in the weight-graded
//     variable (coefficients at q^2),
// each in both composition orders, coefficient by coefficient.
InversionReport verify_inversion(int order);

struct VerificationItem {
    std::string name;
    bool pass = true;
    std::string detail;
};
struct VerificationReport {
    std::vector<VerificationItem> items;
    bool all_pass() const;
};

// Full self-check: the four inversion identities at `order`, agreement of
// the three euler_delta methods for n <= order+1, and the brute-force
// dissection oracle for n <= min(order+2, 10).
VerificationReport verify_all(int order);

}  // namespace m0delta
