#include "m0delta/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "m0delta/dissection.hpp"
#include "m0delta/parallel.hpp"
#include "m0delta/partition.hpp"

namespace m0delta::cli {

std::string betti_to_text(const BettiTable& table) {
    std::ostringstream out;
    out << "# row n lists a[n,i] for i = 0..n-3\n";
    for (int n = 3; n <= table.n_max(); ++n) {
        out << n << ':';
        for (const BigInt& a : table.row(n)) out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

std::string betti_to_csv(const BettiTable& table) {
    std::ostringstream out;
    out << "n,i,a\n";
    for (int n = 3; n <= table.n_max(); ++n) {
        const std::vector<BigInt>& row = table.row(n);
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << n << ',' << i << ',' << row[i] << '\n';
        }
    }
    return out.str();
}

BettiTable betti_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "n,i,a")
        throw std::invalid_argument("betti_from_csv: missing n,i,a header");
    std::map<int, std::vector<std::pair<int, BigInt>>> cells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("betti_from_csv: malformed row \"" + line + "\"");
        int n = std::stoi(line.substr(0, c1));
        int i = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
        cells[n].emplace_back(i, BigInt::from_string(line.substr(c2 + 1)));
    }
    std::vector<std::vector<BigInt>> rows;
    int expected_n = 3;
    for (auto& [n, entries] : cells) {
        if (n != expected_n++)
            throw std::invalid_argument("betti_from_csv: rows must cover n = 3.. contiguously");
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<BigInt> row;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].first != static_cast<int>(i))
                throw std::invalid_argument("betti_from_csv: columns must cover i = 0..n-3");
            row.push_back(std::move(entries[i].second));
        }
        rows.push_back(std::move(row));
    }
    return BettiTable(std::move(rows));
}

std::string betti_to_json(const BettiTable& table) {
    nlohmann::ordered_json root;
    for (int n = 3; n <= table.n_max(); ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const BigInt& a : table.row(n)) row.push_back(a.to_string());
        root[std::to_string(n)] = std::move(row);
    }
    return root.dump();
}

BettiTable betti_from_json(std::string_view text) {
    nlohmann::json root = nlohmann::json::parse(text);
    if (!root.is_object()) throw std::invalid_argument("betti_from_json: expected an object");
    std::map<int, std::vector<BigInt>> by_n;
    for (const auto& [key, value] : root.items()) {
        std::vector<BigInt> row;
        for (const auto& cell : value) row.push_back(BigInt::from_string(cell.get<std::string>()));
        by_n[std::stoi(key)] = std::move(row);
    }
    std::vector<std::vector<BigInt>> rows;
    int expected_n = 3;
    for (auto& [n, row] : by_n) {
        if (n != expected_n++)
            throw std::invalid_argument("betti_from_json: keys must cover n = 3.. contiguously");
        rows.push_back(std::move(row));
    }
    return BettiTable(std::move(rows));
}

namespace {

DeltaMethod parse_method(const std::string& name) {
    if (name == "stratification") return DeltaMethod::stratification;
    if (name == "inversion") return DeltaMethod::inversion;
    return DeltaMethod::recurrence;
}

// Series of the open (f) and dihedral (f_delta) spaces at the given order,
// optionally specialized to q = 0.
std::pair<TruncatedSeries, TruncatedSeries> build_series_pair(int order, bool q_zero) {
    std::vector<Polynomial> f_tail(static_cast<std::size_t>(order));
    std::vector<Polynomial> fd_tail(static_cast<std::size_t>(order));
    f_tail[0] = fd_tail[0] = Polynomial::one();
    std::vector<Polynomial> delta = order >= 2
                                        ? euler_delta_upto(order + 1, DeltaMethod::stratification)
                                        : std::vector<Polynomial>{};
    for (int m = 2; m <= order; ++m) {
        Polynomial open_value = euler_open(m + 1);
        Polynomial delta_value = delta[static_cast<std::size_t>(m - 2)];
        if (q_zero) {
            open_value = Polynomial(open_value.eval(BigInt{}));
            delta_value = Polynomial(delta_value.eval(BigInt{}));
        }
        f_tail[static_cast<std::size_t>(m - 1)] = -open_value;
        fd_tail[static_cast<std::size_t>(m - 1)] = delta_value;
    }
    return {TruncatedSeries::from_tail(order, std::move(f_tail)),
            TruncatedSeries::from_tail(order, std::move(fd_tail))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Betti tables and generating-series checks for the moduli spaces "
                 "of n-pointed genus-zero curves with a dihedral structure"};
    app.name("m0delta");

    bool serial = false;
    int threads = 0;
    app.add_flag("--serial", serial, "run every kernel on its serial reference path");
    app.add_option("--threads", threads, "worker threads for the parallel kernels");
    app.require_subcommand(1);

    auto method_check = CLI::IsMember({"stratification", "inversion", "recurrence"});

    CLI::App* table_cmd = app.add_subcommand("table", "print the Betti table a[n,i] for 3 <= n <= N");
    int table_n_max = 0;
    std::string table_format = "text";
    std::string table_method = "stratification";
    table_cmd->add_option("--n-max", table_n_max, "largest n")->required();
    table_cmd->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table_cmd->add_option("--method", table_method, "how to compute the polynomials")
        ->check(method_check);

    CLI::App* euler_cmd = app.add_subcommand("euler", "print one Poincare polynomial");
    std::string euler_space;
    int euler_n = 0;
    std::string euler_method = "stratification";
    euler_cmd->add_option("--space", euler_space, "which moduli space")
        ->required()
        ->check(CLI::IsMember({"open", "delta", "compact"}));
    euler_cmd->add_option("--n", euler_n, "number of marked points")->required();
    euler_cmd->add_option("--method", euler_method, "method for the delta space")
        ->check(method_check);

    CLI::App* invert_cmd = app.add_subcommand(
        "invert", "print the open/dihedral series pair and its composition residuals");
    int invert_order = 0;
    bool invert_q0 = false;
    invert_cmd->add_option("--order", invert_order, "truncation order")->required();
    invert_cmd->add_flag("--q0", invert_q0, "specialize the coefficients to q = 0");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the inversion identities, cross-method agreement and dissection oracle");
    int verify_order = 0;
    verify_cmd->add_option("--order", verify_order, "truncation order")->required();

    CLI::App* dissections_cmd =
        app.add_subcommand("dissections", "enumerate polygon dissections by cell type");
    int dissections_n = 0;
    dissections_cmd->add_option("--n", dissections_n, "polygon size")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (serial) set_parallel(false);
    if (threads > 0) set_thread_count(threads);

    try {
        if (table_cmd->parsed()) {
            BettiTable table = betti_table(table_n_max, parse_method(table_method));
            if (table_format == "csv") {
                out << betti_to_csv(table);
            } else if (table_format == "json") {
                out << betti_to_json(table) << '\n';
            } else {
                out << betti_to_text(table);
            }
            return 0;
        }

        if (euler_cmd->parsed()) {
            Polynomial value;
            if (euler_space == "open") {
                value = euler_open(euler_n);
            } else if (euler_space == "compact") {
                value = euler_compact(euler_n);
            } else {
                value = euler_delta(euler_n, parse_method(euler_method));
            }
            out << value.to_string() << '\n';
            return 0;
        }

        if (invert_cmd->parsed()) {
            auto [f, f_delta] = build_series_pair(invert_order, invert_q0);
            TruncatedSeries x = TruncatedSeries::identity(invert_order);
            TruncatedSeries residual_fd = compose(f, f_delta) - x;
            TruncatedSeries residual_df = compose(f_delta, f) - x;
            out << "f(x)       = " << f << '\n';
            out << "f_delta(x) = " << f_delta << '\n';
            out << "f(f_delta(x)) - x = " << residual_fd << '\n';
            out << "f_delta(f(x)) - x = " << residual_df << '\n';
            return residual_fd.is_zero() && residual_df.is_zero() ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            VerificationReport report = verify_all(verify_order);
            for (const VerificationItem& item : report.items) {
                out << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
                if (!item.pass && !item.detail.empty()) out << " (" << item.detail << ')';
                out << '\n';
            }
            out << (report.all_pass() ? "all checks passed\n" : "checks FAILED\n");
            return report.all_pass() ? 0 : 1;
        }

        if (dissections_cmd->parsed()) {
            std::map<Partition, BigInt> counts = enumerate_dissections(dissections_n);
            BigInt total;
            for (const Partition& type : partitions(dissections_n - 2)) {
                auto it = counts.find(type);
                const BigInt& count = it == counts.end() ? BigInt{} : it->second;
                out << type.to_string() << ": " << count << '\n';
                total += count;
            }
            out << "total: " << total << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return 1;
    }

    return 2;
}

}  // namespace m0delta::cli
