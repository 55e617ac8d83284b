#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "m0delta/partition.hpp"

namespace m0delta {

// A chord of the polygon with vertices 0..n-1, stored as an ordered pair
// (a, b) with a < b and b - a >= 2, excluding the wrap-around edge.
using Chord = std::pair<int, int>;

// Two chords cross iff exactly one endpoint of one lies strictly between
// the endpoints of the other on the vertex cycle. Chords sharing an
// endpoint never cross.
bool chords_cross(const Chord& x, const Chord& y);

// All chords of the n-gon in lexicographic order; size n(n-3)/2.
std::vector<Chord> polygon_chords(int n);

// A set of pairwise non-crossing chords of a convex n-gon. Construction
// validates every invariant; type() classifies the induced cells (a cell
// with i+2 sides contributes multiplicity to part i).
class Dissection {
  public:
    Dissection(int polygon_size, std::vector<Chord> chords);

    int polygon_size() const { return polygon_size_; }
    const std::vector<Chord>& chords() const { return chords_; }

    Partition type() const;

  private:
    int polygon_size_ = 0;
    std::vector<Chord> chords_;  // sorted, duplicate-free
};

// Brute-force enumeration of every non-crossing chord set of the n-gon
// (including the empty one), tallied by cell type. This is the oracle the
// counting formulas are verified against. Intended for n up to ~12.
std::map<Partition, BigInt> enumerate_dissections(int n);
std::map<Partition, BigInt> enumerate_dissections_serial(int n);
std::map<Partition, BigInt> enumerate_dissections_parallel(int n);

// Serial walk over the same sets, handing each to the visitor as a fully
// validated Dissection. Slower than the counting enumerators; test use.
void for_each_dissection(int n, const std::function<void(const Dissection&)>& visit);

}  // namespace m0delta
