#include "m0delta/partition.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace m0delta {

Partition Partition::from_parts(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        out.entries_.emplace_back(parts[i], static_cast<int>(j - i));
        i = j;
    }
    for (auto [part, mult] : out.entries_) {
        out.weight_ += part * mult;
        out.part_count_ += mult;
    }
    return out;
}

Partition Partition::from_multiplicities(std::vector<std::pair<int, int>> entries) {
    std::vector<int> parts;
    for (auto [part, mult] : entries) {
        if (mult < 1) throw std::invalid_argument("Partition: multiplicities must be positive");
        for (int k = 0; k < mult; ++k) parts.push_back(part);
    }
    return from_parts(std::move(parts));
}

int Partition::multiplicity(int part) const {
    for (auto [p, mult] : entries_) {
        if (p == part) return mult;
        if (p < part) break;
    }
    return 0;
}

std::string Partition::to_string() const {
    if (entries_.empty()) return "(empty)";
    std::string out;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += std::to_string(it->first);
        if (it->second > 1) {
            out += '^';
            out += std::to_string(it->second);
        }
    }
    return out;
}

bool operator<(const Partition& lhs, const Partition& rhs) {
    // larger parts first, then longer runs of the same part
    const auto& a = lhs.entries_;
    const auto& b = rhs.entries_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first > b[i].first;
        if (a[i].second != b[i].second) return a[i].second > b[i].second;
    }
    return a.size() < b.size();
}

std::vector<Partition> partitions(int m) {
    if (m < 0) throw std::invalid_argument("partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    // descending-first search emits decreasing-lexicographic order
    auto descend = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(current));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    descend(descend, m, m == 0 ? 1 : m);
    return out;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    static std::mutex memo_mutex;
    static std::vector<BigInt> memo{BigInt(1)};
    std::scoped_lock lock(memo_mutex);
    while (static_cast<int>(memo.size()) <= n) {
        memo.push_back(memo.back() * BigInt(static_cast<long long>(memo.size())));
    }
    return memo[static_cast<std::size_t>(n)];
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt{};
    return factorial(n).div_exact(factorial(k) * factorial(n - k));
}

BigInt dissection_count(const Partition& type) {
    if (type.empty()) throw std::invalid_argument("dissection_count: empty type");
    int n = type.polygon_size();
    BigInt numerator = factorial(n - 2 + type.part_count());
    BigInt denominator = factorial(n - 1);
    for (auto [part, mult] : type.entries()) {
        (void)part;
        denominator *= factorial(mult);
    }
    // always divides evenly; a remainder would mean the count formula broke
    return numerator.div_exact(denominator);
}

BigInt stable_graph_count(const Partition& type) {
    int n = type.polygon_size();
    BigInt result = dissection_count(type) * factorial(n - 1);
    for (auto [part, mult] : type.entries()) {
        result = result.div_exact(factorial(part + 1).pow(static_cast<unsigned>(mult)));
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Partition& value) {
    return os << value.to_string();
}

}  // namespace m0delta
