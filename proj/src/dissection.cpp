#include "m0delta/dissection.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "m0delta/parallel.hpp"

namespace m0delta {

bool chords_cross(const Chord& x, const Chord& y) {
    if (x.first == y.first || x.first == y.second || x.second == y.first ||
        x.second == y.second) {
        return false;
    }
    bool first_inside = x.first < y.first && y.first < x.second;
    bool second_inside = x.first < y.second && y.second < x.second;
    return first_inside != second_inside;
}

std::vector<Chord> polygon_chords(int n) {
    if (n < 3) throw std::invalid_argument("polygon_chords: need at least a triangle");
    std::vector<Chord> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 2; b < n; ++b) {
            if (a == 0 && b == n - 1) continue;  // wrap-around edge, not a chord
            out.emplace_back(a, b);
        }
    }
    return out;
}

namespace {

/*
  Cell classification. The chord set is non-crossing, so the least chord
  (a, b) splits the current vertex cycle into two arcs that share only a and
  b, and every remaining chord lies entirely on one side. Recursing on both
  sides until no chords remain peels off exactly |chords|+1 cells. Cells are
  tracked as position lists into the current cycle, so the scheme works for
  the nested splits where a cell boundary mixes polygon edges and chords.
*/
void split_cells(const std::vector<int>& cycle, const std::vector<Chord>& chords,
                 std::vector<int>& cell_sizes) {
    if (chords.empty()) {
        cell_sizes.push_back(static_cast<int>(cycle.size()));
        return;
    }
    const Chord& cut = chords.front();
    std::size_t pos_a = 0, pos_b = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] == cut.first) pos_a = i;
        if (cycle[i] == cut.second) pos_b = i;
    }
    if (pos_a > pos_b) std::swap(pos_a, pos_b);

    std::vector<int> side1(cycle.begin() + static_cast<std::ptrdiff_t>(pos_a),
                           cycle.begin() + static_cast<std::ptrdiff_t>(pos_b) + 1);
    std::vector<int> side2(cycle.begin() + static_cast<std::ptrdiff_t>(pos_b), cycle.end());
    side2.insert(side2.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(pos_a) + 1);

    std::vector<Chord> chords1, chords2;
    for (std::size_t k = 1; k < chords.size(); ++k) {
        const Chord& c = chords[k];
        std::size_t pos_c = 0, pos_d = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (cycle[i] == c.first) pos_c = i;
            if (cycle[i] == c.second) pos_d = i;
        }
        if (pos_c > pos_d) std::swap(pos_c, pos_d);
        // endpoints on the cut itself belong to both arcs; the partner decides
        bool in_side1;
        if (pos_c == pos_a || pos_c == pos_b) {
            in_side1 = pos_a < pos_d && pos_d < pos_b;
        } else if (pos_d == pos_a || pos_d == pos_b) {
            in_side1 = pos_a < pos_c && pos_c < pos_b;
        } else {
            in_side1 = pos_a <= pos_c && pos_d <= pos_b;
        }
        (in_side1 ? chords1 : chords2).push_back(c);
    }
    split_cells(side1, chords1, cell_sizes);
    split_cells(side2, chords2, cell_sizes);
}

Partition classify_cells(int n, const std::vector<Chord>& chords) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    std::vector<int> cell_sizes;
    split_cells(cycle, chords, cell_sizes);
    std::vector<int> parts;
    parts.reserve(cell_sizes.size());
    for (int s : cell_sizes) {
        if (s < 3) throw std::logic_error("Dissection: produced a cell with fewer than 3 sides");
        parts.push_back(s - 2);
    }
    return Partition::from_parts(std::move(parts));
}

struct EnumContext {
    int n = 0;
    std::vector<Chord> chords;
    std::vector<std::vector<char>> compatible;

    explicit EnumContext(int polygon) : n(polygon), chords(polygon_chords(polygon)) {
        std::size_t m = chords.size();
        compatible.assign(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                compatible[i][j] = compatible[j][i] = !chords_cross(chords[i], chords[j]);
            }
        }
    }
};

using TypeCounts = std::map<Partition, std::uint64_t>;

// Canonical-extension search: only chords after the last picked one are
// tried, so each non-crossing set is visited exactly once.
void count_extensions(const EnumContext& ctx, std::vector<int>& picked,
                      std::vector<Chord>& picked_chords, TypeCounts& counts) {
    counts[classify_cells(ctx.n, picked_chords)] += 1;
    int m = static_cast<int>(ctx.chords.size());
    for (int j = picked.empty() ? 0 : picked.back() + 1; j < m; ++j) {
        bool ok = true;
        for (int i : picked) {
            if (!ctx.compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        picked.push_back(j);
        picked_chords.push_back(ctx.chords[static_cast<std::size_t>(j)]);
        count_extensions(ctx, picked, picked_chords, counts);
        picked_chords.pop_back();
        picked.pop_back();
    }
}

std::map<Partition, BigInt> to_bigint_counts(const TypeCounts& counts) {
    std::map<Partition, BigInt> out;
    for (const auto& [type, count] : counts) {
        out.emplace(type, BigInt(static_cast<long long>(count)));
    }
    return out;
}

}  // namespace

std::map<Partition, BigInt> enumerate_dissections_serial(int n) {
    EnumContext ctx(n);
    TypeCounts counts;
    std::vector<int> picked;
    std::vector<Chord> picked_chords;
    count_extensions(ctx, picked, picked_chords, counts);
    return to_bigint_counts(counts);
}

std::map<Partition, BigInt> enumerate_dissections_parallel(int n) {
    EnumContext ctx(n);
    TypeCounts total;
    total[classify_cells(ctx.n, {})] += 1;  // empty dissection
    int m = static_cast<int>(ctx.chords.size());
#pragma omp parallel
    {
        TypeCounts local;
#pragma omp for schedule(dynamic) nowait
        for (int i = 0; i < m; ++i) {
            std::vector<int> picked{i};
            std::vector<Chord> picked_chords{ctx.chords[static_cast<std::size_t>(i)]};
            count_extensions(ctx, picked, picked_chords, local);
        }
#pragma omp critical
        {
            for (const auto& [type, count] : local) total[type] += count;
        }
    }
    return to_bigint_counts(total);
}

std::map<Partition, BigInt> enumerate_dissections(int n) {
    return parallel_enabled() ? enumerate_dissections_parallel(n)
                              : enumerate_dissections_serial(n);
}

Dissection::Dissection(int polygon_size, std::vector<Chord> chords)
    : polygon_size_(polygon_size), chords_(std::move(chords)) {
    if (polygon_size_ < 3) throw std::invalid_argument("Dissection: polygon needs >= 3 vertices");
    for (const Chord& c : chords_) {
        if (c.first < 0 || c.second >= polygon_size_ || c.first >= c.second)
            throw std::invalid_argument("Dissection: chord endpoints out of range or unordered");
        if (c.second - c.first < 2 || (c.first == 0 && c.second == polygon_size_ - 1))
            throw std::invalid_argument("Dissection: chord joins adjacent vertices");
    }
    std::sort(chords_.begin(), chords_.end());
    for (std::size_t i = 0; i + 1 < chords_.size(); ++i) {
        if (chords_[i] == chords_[i + 1]) throw std::invalid_argument("Dissection: duplicate chord");
        for (std::size_t j = i + 1; j < chords_.size(); ++j) {
            if (chords_cross(chords_[i], chords_[j]))
                throw std::invalid_argument("Dissection: chords cross");
        }
    }
}

Partition Dissection::type() const { return classify_cells(polygon_size_, chords_); }

void for_each_dissection(int n, const std::function<void(const Dissection&)>& visit) {
    EnumContext ctx(n);
    std::vector<int> picked;
    std::vector<Chord> picked_chords;
    auto walk = [&](auto&& self) -> void {
        visit(Dissection(ctx.n, picked_chords));
        int m = static_cast<int>(ctx.chords.size());
        for (int j = picked.empty() ? 0 : picked.back() + 1; j < m; ++j) {
            bool ok = true;
            for (int i : picked) {
                if (!ctx.compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            picked.push_back(j);
            picked_chords.push_back(ctx.chords[static_cast<std::size_t>(j)]);
            self(self);
            picked_chords.pop_back();
            picked.pop_back();
        }
    };
    walk(walk);
}

}  // namespace m0delta
