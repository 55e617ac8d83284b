// Acceptance suite: every check the library must pass before a release,
// one line of output per criterion. All comparisons are exact; the timed
// criteria carry hard wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "m0delta/cli.hpp"
#include "m0delta/dissection.hpp"
#include "m0delta/moduli.hpp"
#include "m0delta/partition.hpp"
#include "m0delta/series.hpp"

using m0delta::BettiTable;
using m0delta::BigInt;
using m0delta::DeltaMethod;
using m0delta::MiddleMethod;
using m0delta::Partition;
using m0delta::Polynomial;
using m0delta::TruncatedSeries;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& check) {
    std::string detail;
    bool pass = false;
    try {
        pass = check(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// a[n][i] for n = 5..11
const std::vector<std::vector<long long>> kPublishedRows = {
    {1, 0, 1},
    {1, 0, 5, 4},
    {1, 0, 15, 28, 22},
    {1, 0, 35, 112, 206, 144},
    {1, 0, 70, 336, 1063, 1704, 1089},
    {1, 0, 126, 840, 3999, 10848, 15709, 9308},
    {1, 0, 210, 1848, 12255, 49368, 119857, 159412, 88562},
};

bool check_published_table(const BettiTable& table, std::string& detail) {
    int entries = 0;
    for (int n = 5; n <= 11; ++n) {
        const auto& expected = kPublishedRows[static_cast<std::size_t>(n - 5)];
        const auto& actual = table.row(n);
        if (actual.size() != expected.size()) {
            detail = "row length mismatch at n = " + std::to_string(n);
            return false;
        }
        for (std::size_t i = 2; i < expected.size(); ++i) ++entries;  // published a_{n,i}, i >= 1
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!(actual[i] == BigInt(expected[i]))) {
                detail = "a[" + std::to_string(n) + "," + std::to_string(i) + "] = " +
                         actual[i].to_string() + ", published " + std::to_string(expected[i]);
                return false;
            }
        }
        ++entries;  // the a_{n,1} = 0 column
    }
    if (entries != 35) {
        detail = "expected 35 published entries, counted " + std::to_string(entries);
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "published Betti table reproduced by all three methods in < 1 s", [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        for (DeltaMethod method :
             {DeltaMethod::stratification, DeltaMethod::inversion, DeltaMethod::recurrence}) {
            BettiTable table = m0delta::betti_table(11, method);
            if (!check_published_table(table, detail)) return false;
        }
        double elapsed = seconds_since(start);
        detail = std::to_string(elapsed) + " s";
        return elapsed < 1.0;
    });

    criterion(2, "hexagon polynomial q^3 + 5*q - 4 and its five-stratum sum", [](std::string& detail) {
        Polynomial expected = Polynomial::parse("q^3 + 5*q - 4");
        for (DeltaMethod method :
             {DeltaMethod::stratification, DeltaMethod::inversion, DeltaMethod::recurrence}) {
            if (!(m0delta::euler_delta(6, method) == expected)) {
                detail = "euler_delta(6) mismatch";
                return false;
            }
        }
        auto types = m0delta::partitions(4);
        const long long counts[] = {1, 6, 3, 21, 14};
        if (types.size() != 5) return false;
        Polynomial sum;
        for (std::size_t k = 0; k < types.size(); ++k) {
            BigInt weight = m0delta::dissection_count(types[k]);
            if (!(weight == BigInt(counts[k]))) {
                detail = "stratum count mismatch at " + types[k].to_string();
                return false;
            }
            Polynomial term{weight};
            for (auto [part, mult] : types[k].entries()) {
                term *= m0delta::euler_open(part + 2).pow(static_cast<unsigned>(mult));
            }
            sum += term;
        }
        if (!(sum == expected)) {
            detail = "stratification sum mismatch";
            return false;
        }
        return true;
    });

    criterion(3, "stratification = inversion = recurrence for 3 <= n <= 30 in < 30 s", [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        auto strat = m0delta::euler_delta_upto(30, DeltaMethod::stratification);
        auto inv = m0delta::euler_delta_upto(30, DeltaMethod::inversion);
        auto rec = m0delta::euler_delta_upto(30, DeltaMethod::recurrence);
        for (int n = 3; n <= 30; ++n) {
            std::size_t k = static_cast<std::size_t>(n - 3);
            if (!(strat[k] == inv[k]) || !(strat[k] == rec[k])) {
                detail = "methods disagree at n = " + std::to_string(n);
                return false;
            }
        }
        double elapsed = seconds_since(start);
        detail = std::to_string(elapsed) + " s";
        return elapsed < 30.0;
    });

    criterion(4, "ordinary inversion identity exact at order 30", [](std::string& detail) {
        auto report = m0delta::verify_inversion(30);
        for (const auto& check : report.identities) {
            if (check.name.rfind("f", 0) == 0 && !check.pass) {
                detail = check.name + " first residual " + check.first_residual;
                return false;
            }
        }
        return true;
    });

    criterion(5, "exponential inversion identity exact at order 15, divisions exact", [](std::string& detail) {
        const int order = 15;
        auto report = m0delta::verify_inversion(order);
        for (const auto& check : report.identities) {
            if (check.name.rfind("g", 0) == 0 && !check.pass) {
                detail = check.name + " first residual " + check.first_residual;
                return false;
            }
        }
        // the same identity in the plain point-count variable; the two are
        // related by the substitution q -> q^2 coefficient-wise
        std::vector<Polynomial> g_tail(order), gbar_tail(order);
        g_tail[0] = gbar_tail[0] = Polynomial::one();
        auto compact = m0delta::euler_compact_upto(order + 1);
        for (int m = 2; m <= order; ++m) {
            g_tail[static_cast<std::size_t>(m - 1)] = -m0delta::euler_open(m + 1);
            gbar_tail[static_cast<std::size_t>(m - 1)] = compact[static_cast<std::size_t>(m - 2)];
        }
        TruncatedSeries g = TruncatedSeries::from_tail(order, std::move(g_tail));
        TruncatedSeries gbar = TruncatedSeries::from_tail(order, std::move(gbar_tail));
        if (!(m0delta::compose_egf(gbar, g) == TruncatedSeries::identity(order)) ||
            !(m0delta::compose_egf(g, gbar) == TruncatedSeries::identity(order))) {
            detail = "plain-variable composition is not the identity";
            return false;
        }
        return true;
    });

    criterion(6, "dissection oracle equals the counting formula for 3 <= n <= 10 in < 60 s", [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        const long long totals[] = {1, 3, 11, 45, 197, 903};
        for (int n = 3; n <= 10; ++n) {
            auto enumerated = m0delta::enumerate_dissections(n);
            BigInt enumerated_total, formula_total;
            for (const auto& [type, count] : enumerated) enumerated_total += count;
            for (const Partition& type : m0delta::partitions(n - 2)) {
                BigInt expected = m0delta::dissection_count(type);
                formula_total += expected;
                auto it = enumerated.find(type);
                if (it == enumerated.end() || !(it->second == expected)) {
                    detail = "mismatch at n = " + std::to_string(n) + ", type " + type.to_string();
                    return false;
                }
            }
            if (!(enumerated_total == formula_total)) {
                detail = "totals disagree at n = " + std::to_string(n);
                return false;
            }
            if (n <= 8 && !(enumerated_total == BigInt(totals[n - 3]))) {
                detail = "super-Catalan total wrong at n = " + std::to_string(n);
                return false;
            }
        }
        double elapsed = seconds_since(start);
        detail = std::to_string(elapsed) + " s";
        return elapsed < 60.0;
    });

    criterion(7, "a[n,2] = C(n-1,4) and a[n,3] = 4*C(n,6) for 5 <= n <= 20", [](std::string& detail) {
        auto report = m0delta::closed_formula_check(20);
        for (const auto& row : report.rows) {
            if (!row.a2_matches || !row.a3_matches) {
                detail = "mismatch at n = " + std::to_string(row.n);
                return false;
            }
        }
        return report.rows.size() == 16;
    });

    criterion(8, "middle Betti numbers: recurrence = q = 0 = table diagonal", [](std::string& detail) {
        auto by_recurrence = m0delta::middle_betti(16, MiddleMethod::recurrence);
        auto by_q_zero = m0delta::middle_betti(16, MiddleMethod::q_zero);
        if (by_recurrence != by_q_zero) {
            detail = "methods disagree";
            return false;
        }
        if (!by_recurrence[0].is_zero()) {
            detail = "n = 4 must have middle dimension 0";
            return false;
        }
        const long long diagonal[] = {1, 4, 22, 144, 1089, 9308, 88562};
        for (int n = 5; n <= 11; ++n) {
            if (!(by_recurrence[static_cast<std::size_t>(n - 4)] == BigInt(diagonal[n - 5]))) {
                detail = "diagonal mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(9, "structural invariants for n <= 12", [](std::string& detail) {
        BettiTable table = m0delta::betti_table(12);
        auto deltas = m0delta::euler_delta_upto(12, DeltaMethod::stratification);
        auto compact = m0delta::euler_compact_upto(12);
        for (int n = 3; n <= 12; ++n) {
            const auto& row = table.row(n);
            if (static_cast<int>(row.size()) != n - 2) {
                detail = "entries above the diagonal at n = " + std::to_string(n);
                return false;
            }
            if (!row[0].is_one() || (n >= 4 && !row[1].is_zero())) {
                detail = "a[n,0] or a[n,1] wrong at n = " + std::to_string(n);
                return false;
            }
            const Polynomial& e = deltas[static_cast<std::size_t>(n - 3)];
            for (int i = 0; i <= n - 3; ++i) {
                BigInt signed_coeff = e.coeff(static_cast<std::size_t>(n - 3 - i));
                if (i % 2 == 1) signed_coeff = -signed_coeff;
                if (signed_coeff.sign() < 0) {
                    detail = "purity sign violated at n = " + std::to_string(n);
                    return false;
                }
            }
            const Polynomial& c = compact[static_cast<std::size_t>(n - 3)];
            if (c.degree() != n - 3) {
                detail = "compact degree wrong at n = " + std::to_string(n);
                return false;
            }
            const auto& cc = c.coefficients();
            for (std::size_t i = 0; i < cc.size(); ++i) {
                if (cc[i].sign() <= 0 || !(cc[i] == cc[cc.size() - 1 - i])) {
                    detail = "compact polynomial not positive-palindromic at n = " +
                             std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    if (failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
