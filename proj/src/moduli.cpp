#include "m0delta/moduli.hpp"

#include <stdexcept>
#include <utility>

#include "m0delta/dissection.hpp"
#include "m0delta/parallel.hpp"
#include "m0delta/partition.hpp"

namespace m0delta {

Polynomial euler_open(int n) {
    if (n < 3) throw std::invalid_argument("euler_open: need n >= 3 marked points");
    return Polynomial::from_root_range(2, n - 2);
}

namespace {

// euler_open(3..n_max), indexed directly by n for readability downstream.
std::vector<Polynomial> open_values(int n_max) {
    std::vector<Polynomial> eo(static_cast<std::size_t>(n_max) + 1);
    for (int n = 3; n <= n_max; ++n) eo[static_cast<std::size_t>(n)] = euler_open(n);
    return eo;
}

Polynomial stratum_term(const Partition& type, const std::vector<Polynomial>& eo,
                        BigInt (*weigh)(const Partition&)) {
    Polynomial term{weigh(type)};
    for (auto [part, mult] : type.entries()) {
        term *= eo[static_cast<std::size_t>(part + 2)].pow(static_cast<unsigned>(mult));
    }
    return term;
}

Polynomial stratification_sum_serial(int n, const std::vector<Polynomial>& eo,
                                     BigInt (*weigh)(const Partition&)) {
    Polynomial total;
    for (const Partition& type : partitions(n - 2)) total += stratum_term(type, eo, weigh);
    return total;
}

Polynomial stratification_sum_parallel(int n, const std::vector<Polynomial>& eo,
                                       BigInt (*weigh)(const Partition&)) {
    std::vector<Partition> types = partitions(n - 2);
    Polynomial total;
#pragma omp parallel
    {
        Polynomial local;
#pragma omp for schedule(dynamic) nowait
        for (int idx = 0; idx < static_cast<int>(types.size()); ++idx) {
            local += stratum_term(types[static_cast<std::size_t>(idx)], eo, weigh);
        }
#pragma omp critical
        total += local;
    }
    return total;
}

Polynomial stratification_sum(int n, const std::vector<Polynomial>& eo,
                              BigInt (*weigh)(const Partition&)) {
    return parallel_enabled() ? stratification_sum_parallel(n, eo, weigh)
                              : stratification_sum_serial(n, eo, weigh);
}

std::vector<Polynomial> delta_by_stratification(int n_max) {
    std::vector<Polynomial> eo = open_values(n_max);
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) - 2);
    for (int n = 3; n <= n_max; ++n) out.push_back(stratification_sum(n, eo, &dissection_count));
    return out;
}

std::vector<Polynomial> delta_by_inversion(int n_max) {
    int order = n_max - 1;  // highest series coefficient read below
    std::vector<Polynomial> tail(static_cast<std::size_t>(order));
    tail[0] = Polynomial::one();
    for (int m = 2; m <= order; ++m) {
        tail[static_cast<std::size_t>(m - 1)] = -euler_open(m + 1);
    }
    TruncatedSeries inverse = revert(TruncatedSeries::from_tail(order, std::move(tail)));
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) - 2);
    for (int n = 3; n <= n_max; ++n) out.push_back(inverse.coeff(n - 1));
    return out;
}

// Forward pass of the coefficient recurrence: with a_1 = 1,
//   a_m = - sum_{k+l=m+1, k,l>=2} k a_k a_l
//         + sum_{k+l=m} (qk - 1) a_k a_l
//         - q sum_{k+l+j=m+1} k a_k a_l a_j,
// and a_m is the signed Poincare polynomial of the space with m+1 points.
std::vector<Polynomial> delta_by_recurrence(int n_max) {
    std::vector<Polynomial> a(static_cast<std::size_t>(n_max));
    a[1] = Polynomial::one();
    const Polynomial q = Polynomial::variable();
    for (int m = 2; m <= n_max - 1; ++m) {
        Polynomial value;
        for (int k = 2; k <= m - 1; ++k) {
            int l = m + 1 - k;
            if (l < 2) continue;
            value -= Polynomial(BigInt(k)) * a[static_cast<std::size_t>(k)] *
                     a[static_cast<std::size_t>(l)];
        }
        for (int k = 1; k <= m - 1; ++k) {
            int l = m - k;
            value += (q.scaled(BigInt(k)) - Polynomial::one()) *
                     a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(l)];
        }
        for (int k = 1; k <= m - 1; ++k) {
            for (int l = 1; m + 1 - k - l >= 1; ++l) {
                int j = m + 1 - k - l;
                value -= q.scaled(BigInt(k)) * a[static_cast<std::size_t>(k)] *
                         a[static_cast<std::size_t>(l)] * a[static_cast<std::size_t>(j)];
            }
        }
        a[static_cast<std::size_t>(m)] = std::move(value);
    }
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) - 2);
    for (int n = 3; n <= n_max; ++n) {
        const Polynomial& signed_value = a[static_cast<std::size_t>(n - 1)];
        out.push_back(n % 2 == 0 ? signed_value : -signed_value);
    }
    return out;
}

}  // namespace

std::vector<Polynomial> euler_delta_upto(int n_max, DeltaMethod method) {
    if (n_max < 3) throw std::invalid_argument("euler_delta: need n >= 3 marked points");
    switch (method) {
        case DeltaMethod::stratification: return delta_by_stratification(n_max);
        case DeltaMethod::inversion: return delta_by_inversion(n_max);
        case DeltaMethod::recurrence: return delta_by_recurrence(n_max);
    }
    throw std::invalid_argument("euler_delta: unknown method");
}

Polynomial euler_delta(int n, DeltaMethod method) {
    if (method == DeltaMethod::stratification) {
        if (n < 3) throw std::invalid_argument("euler_delta: need n >= 3 marked points");
        return stratification_sum(n, open_values(n), &dissection_count);
    }
    // inversion and recurrence produce the whole prefix anyway
    return euler_delta_upto(n, method).back();
}

std::vector<Polynomial> euler_compact_upto(int n_max) {
    if (n_max < 3) throw std::invalid_argument("euler_compact: need n >= 3 marked points");
    std::vector<Polynomial> eo = open_values(n_max);
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) - 2);
    for (int n = 3; n <= n_max; ++n) out.push_back(stratification_sum(n, eo, &stable_graph_count));
    return out;
}

Polynomial euler_compact(int n) {
    if (n < 3) throw std::invalid_argument("euler_compact: need n >= 3 marked points");
    return stratification_sum(n, open_values(n), &stable_graph_count);
}

BettiTable::BettiTable(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != r + 1)
            throw std::invalid_argument("BettiTable: row for n = " + std::to_string(r + 3) +
                                        " must have " + std::to_string(r + 1) + " entries");
        for (const BigInt& a : rows_[r]) {
            if (a.sign() < 0) throw std::invalid_argument("BettiTable: negative entry");
        }
    }
}

BettiTable BettiTable::from_polynomials(const std::vector<Polynomial>& euler_by_n) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(euler_by_n.size());
    for (std::size_t r = 0; r < euler_by_n.size(); ++r) {
        const Polynomial& e = euler_by_n[r];
        int dim = static_cast<int>(r);  // complex dimension n-3 of row n = r+3
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(dim) + 1);
        for (int i = 0; i <= dim; ++i) {
            BigInt value = e.coeff(static_cast<std::size_t>(dim - i));
            if (i % 2 == 1) value = -value;
            if (value.sign() < 0)
                throw std::logic_error(
                    "BettiTable: purity sign violated at n = " + std::to_string(r + 3) +
                    ", i = " + std::to_string(i) + " (extracted " + value.to_string() + ")");
            row.push_back(std::move(value));
        }
        rows.push_back(std::move(row));
    }
    return BettiTable(std::move(rows));
}

const std::vector<BigInt>& BettiTable::row(int n) const {
    if (n < 3 || n > n_max()) throw std::invalid_argument("BettiTable: row out of range");
    return rows_[static_cast<std::size_t>(n - 3)];
}

const BigInt& BettiTable::at(int n, int i) const {
    const std::vector<BigInt>& r = row(n);
    if (i < 0 || static_cast<std::size_t>(i) >= r.size())
        throw std::invalid_argument("BettiTable: no entry above the diagonal at n = " +
                                    std::to_string(n) + ", i = " + std::to_string(i));
    return r[static_cast<std::size_t>(i)];
}

BettiTable betti_table(int n_max, DeltaMethod method) {
    return BettiTable::from_polynomials(euler_delta_upto(n_max, method));
}

bool ClosedFormulaReport::all_pass() const {
    for (const ClosedFormulaRow& row : rows) {
        if (!row.a2_matches || !row.a3_matches) return false;
    }
    return true;
}

ClosedFormulaReport closed_formula_check(int n_max) {
    if (n_max < 5) throw std::invalid_argument("closed_formula_check: need n_max >= 5");
    BettiTable table = betti_table(n_max);
    ClosedFormulaReport report;
    for (int n = 5; n <= n_max; ++n) {
        ClosedFormulaRow row;
        row.n = n;
        row.a2_matches = table.at(n, 2) == binomial(n - 1, 4);
        // a_{n,3} first exists at n = 6; 4*C(n,6) is zero before that
        BigInt a3 = n >= 6 ? table.at(n, 3) : BigInt{};
        row.a3_matches = a3 == BigInt(4) * binomial(n, 6);
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::vector<BigInt> middle_by_recurrence(int n_max) {
    // b_m = sum_{k+l=m+1, k,l>=2} k b_k b_l + sum_{k+l=m} b_k b_l,
    // seeded with b_1 = -1; b_m is the middle Betti number of the space
    // with m+1 points.
    std::vector<BigInt> b(static_cast<std::size_t>(n_max));
    b[1] = BigInt(-1);
    for (int m = 2; m <= n_max - 1; ++m) {
        BigInt value;
        for (int k = 2; k <= m - 1; ++k) {
            int l = m + 1 - k;
            if (l < 2) continue;
            value += BigInt(k) * b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(l)];
        }
        for (int k = 1; k <= m - 1; ++k) {
            value += b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
        }
        b[static_cast<std::size_t>(m)] = std::move(value);
    }
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_max) - 3);
    for (int n = 4; n <= n_max; ++n) out.push_back(b[static_cast<std::size_t>(n - 1)]);
    return out;
}

std::vector<BigInt> middle_by_q_zero(int n_max) {
    std::vector<Polynomial> e = euler_delta_upto(n_max, DeltaMethod::stratification);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_max) - 3);
    for (int n = 4; n <= n_max; ++n) {
        BigInt value = e[static_cast<std::size_t>(n - 3)].eval(BigInt{});
        if ((n - 3) % 2 == 1) value = -value;  // purity sign (-1)^{n-3}
        if (value.sign() < 0)
            throw std::logic_error("middle_betti: negative dimension at n = " + std::to_string(n));
        out.push_back(std::move(value));
    }
    return out;
}

}  // namespace

std::vector<BigInt> middle_betti(int n_max, MiddleMethod method) {
    if (n_max < 4) throw std::invalid_argument("middle_betti: need n_max >= 4");
    return method == MiddleMethod::recurrence ? middle_by_recurrence(n_max)
                                              : middle_by_q_zero(n_max);
}

std::vector<BigInt> middle_betti_checked(int n_max) {
    std::vector<BigInt> by_recurrence = middle_betti(n_max, MiddleMethod::recurrence);
    std::vector<BigInt> by_q_zero = middle_betti(n_max, MiddleMethod::q_zero);
    if (by_recurrence != by_q_zero)
        throw std::logic_error("middle_betti: recurrence and q = 0 evaluations disagree");
    return by_recurrence;
}

bool InversionReport::all_pass() const {
    for (const IdentityCheck& check : identities) {
        if (!check.pass) return false;
    }
    return true;
}

namespace {

IdentityCheck check_identity(std::string name, const TruncatedSeries& composed) {
    IdentityCheck check;
    check.name = std::move(name);
    TruncatedSeries residual = composed - TruncatedSeries::identity(composed.order());
    for (int n = 1; n <= residual.order(); ++n) {
        if (!residual.coeff(n).is_zero()) {
            if (check.pass) check.first_residual = residual.coeff(n).to_string();
            check.pass = false;
            check.bad_orders.push_back(n);
        }
    }
    return check;
}

}  // namespace

InversionReport verify_inversion(int order) {
    if (order < 1) throw std::invalid_argument("verify_inversion: order must be >= 1");
    InversionReport report;
    report.order = order;

    std::vector<Polynomial> open_tail(static_cast<std::size_t>(order));
    std::vector<Polynomial> delta_tail(static_cast<std::size_t>(order));
    std::vector<Polynomial> open_sq_tail(static_cast<std::size_t>(order));
    std::vector<Polynomial> compact_tail(static_cast<std::size_t>(order));
    open_tail[0] = delta_tail[0] = open_sq_tail[0] = compact_tail[0] = Polynomial::one();
    std::vector<Polynomial> delta =
        order >= 2 ? euler_delta_upto(order + 1, DeltaMethod::stratification)
                   : std::vector<Polynomial>{};
    std::vector<Polynomial> compact =
        order >= 2 ? euler_compact_upto(order + 1) : std::vector<Polynomial>{};
    for (int m = 2; m <= order; ++m) {
        Polynomial open_value = euler_open(m + 1);
        open_tail[static_cast<std::size_t>(m - 1)] = -open_value;
        open_sq_tail[static_cast<std::size_t>(m - 1)] = -open_value.substitute_q_squared();
        delta_tail[static_cast<std::size_t>(m - 1)] = delta[static_cast<std::size_t>(m - 2)];
        // Both exponential series must live in the same weight-graded
        // variable: the open side spreads H^i over q^{2(d-i)}, so the
        // compact side's even classes sit at q^{2(d-k)} as well. Pairing
        // q^2 with plain q breaks the identity already at x^3.
        compact_tail[static_cast<std::size_t>(m - 1)] =
            compact[static_cast<std::size_t>(m - 2)].substitute_q_squared();
    }
    TruncatedSeries f = TruncatedSeries::from_tail(order, std::move(open_tail));
    TruncatedSeries f_delta = TruncatedSeries::from_tail(order, std::move(delta_tail));
    TruncatedSeries g = TruncatedSeries::from_tail(order, std::move(open_sq_tail));
    TruncatedSeries g_bar = TruncatedSeries::from_tail(order, std::move(compact_tail));

    report.identities.push_back(check_identity("f(f_delta(x)) = x", compose(f, f_delta)));
    report.identities.push_back(check_identity("f_delta(f(x)) = x", compose(f_delta, f)));
    report.identities.push_back(check_identity("gbar(g(x)) = x", compose_egf(g_bar, g)));
    report.identities.push_back(check_identity("g(gbar(x)) = x", compose_egf(g, g_bar)));
    return report;
}

bool VerificationReport::all_pass() const {
    for (const VerificationItem& item : items) {
        if (!item.pass) return false;
    }
    return true;
}

VerificationReport verify_all(int order) {
    VerificationReport report;

    for (const IdentityCheck& check : verify_inversion(order).identities) {
        VerificationItem item;
        item.name = "inversion identity " + check.name + " at order " + std::to_string(order);
        item.pass = check.pass;
        if (!check.pass)
            item.detail = "first nonzero residual " + check.first_residual + " at x^" +
                          std::to_string(check.bad_orders.front());
        report.items.push_back(std::move(item));
    }

    int cross_max = order + 1;
    VerificationItem cross;
    cross.name = "stratification, inversion and recurrence agree for n <= " +
                 std::to_string(cross_max);
    if (cross_max >= 3) {
        std::vector<Polynomial> strat = euler_delta_upto(cross_max, DeltaMethod::stratification);
        std::vector<Polynomial> inv = euler_delta_upto(cross_max, DeltaMethod::inversion);
        std::vector<Polynomial> rec = euler_delta_upto(cross_max, DeltaMethod::recurrence);
        for (int n = 3; n <= cross_max && cross.pass; ++n) {
            std::size_t idx = static_cast<std::size_t>(n - 3);
            if (!(strat[idx] == inv[idx] && strat[idx] == rec[idx])) {
                cross.pass = false;
                cross.detail = "methods disagree at n = " + std::to_string(n);
            }
        }
    } else {
        cross.detail = "vacuous";
    }
    report.items.push_back(std::move(cross));

    for (int n = 3; n <= std::min(order + 2, 10); ++n) {
        VerificationItem item;
        item.name = "dissection counts match the closed formula for n = " + std::to_string(n);
        std::map<Partition, BigInt> enumerated = enumerate_dissections(n);
        BigInt enumerated_total;
        for (const auto& [type, count] : enumerated) enumerated_total += count;
        BigInt formula_total;
        for (const Partition& type : partitions(n - 2)) {
            BigInt expected = dissection_count(type);
            formula_total += expected;
            auto it = enumerated.find(type);
            if (it == enumerated.end() || !(it->second == expected)) {
                item.pass = false;
                item.detail = "mismatch at type " + type.to_string();
                break;
            }
        }
        if (item.pass && !(enumerated_total == formula_total)) {
            item.pass = false;
            item.detail = "totals disagree";
        }
        report.items.push_back(std::move(item));
    }

    return report;
}

}  // namespace m0delta
