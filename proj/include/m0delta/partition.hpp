#pragma once

#include <string>
#include <utility>
#include <vector>

#include "m0delta/bigint.hpp"

namespace m0delta {

// Integer partition stored by multiplicity: entries() lists (part, count)
// pairs with parts strictly decreasing. Used as the combinatorial type of a
// polygon dissection, where the multiplicity of part i counts cells with
// i+2 sides; the dissected polygon then has weight()+2 vertices.
class Partition {
  public:
    Partition() = default;

    static Partition from_parts(std::vector<int> parts);
    // pairs are (part, multiplicity); multiplicities must be >= 1
    static Partition from_multiplicities(std::vector<std::pair<int, int>> entries);

    bool empty() const { return entries_.empty(); }
    int weight() const { return weight_; }          // sum of all parts
    int part_count() const { return part_count_; }  // number of parts
    int polygon_size() const { return weight_ + 2; }
    int multiplicity(int part) const;

    // (part, multiplicity) pairs, parts strictly decreasing
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }

    // "1^a 2^b ..." with parts ascending and exponent 1 elided
    std::string to_string() const;

    friend bool operator==(const Partition& lhs, const Partition& rhs) {
        return lhs.entries_ == rhs.entries_;
    }
    // Canonical order: decreasing-lexicographic on the expanded part list,
    // i.e. the order in which partitions(m) emits and tables are printed.
    friend bool operator<(const Partition& lhs, const Partition& rhs);

  private:
    std::vector<std::pair<int, int>> entries_;
    int weight_ = 0;
    int part_count_ = 0;
};

// All partitions of m in canonical (decreasing-lexicographic) order.
// partitions(0) holds exactly the empty partition.
std::vector<Partition> partitions(int m);

// Memoized arbitrary-precision factorial; safe for concurrent callers.
BigInt factorial(int n);
BigInt binomial(int n, int k);

// Number of sets of pairwise non-crossing chords of a convex polygon whose
// cell decomposition has the given type. Requires a nonempty type.
BigInt dissection_count(const Partition& type);

// Number of stable dual graphs of the same type, the compactified analogue
// of dissection_count.
BigInt stable_graph_count(const Partition& type);

std::ostream& operator<<(std::ostream& os, const Partition& value);

}  // namespace m0delta
