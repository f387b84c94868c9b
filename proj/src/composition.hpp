#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ncsf {

// A finite sequence of strictly positive parts. The empty composition is the
// unique composition of 0.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  // Drops zero parts; throws DomainError on a negative entry.
  static Composition from_weak(const std::vector<int>& entries);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  bool is_partition() const;
  Composition reversed() const;
  Composition sorted_descending() const;
  Composition concat(const Composition& o) const;

  // Canonical term order: by size, then lexicographic on parts (a proper
  // prefix sorts first).
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);
  friend bool operator==(const Composition& a, const Composition& b) = default;

  // "4,2,3"; the empty composition renders as "-".
  std::string to_string() const;
  // Accepts "4,2,3", "[4,2,3]", "423" (single digits), "-", "" and "[]".
  static Composition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Finite sequence of arbitrary integers; indexes Jacobi-Trudi style
// expressions and is never a basis index on its own.
struct IntTuple {
  std::vector<int> entries;

  int sum() const;
  std::size_t length() const { return entries.size(); }
  bool is_composition() const;
  Composition to_composition() const;

  friend auto operator<=>(const IntTuple&, const IntTuple&) = default;

  std::string to_string() const;
  static IntTuple parse(std::string_view text);
  static IntTuple of(const Composition& c) { return IntTuple{c.parts()}; }
};

struct Cell {
  int row;  // 1-based
  int col;  // 1-based
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// All compositions of n, ascending in lexicographic order.
const std::vector<Composition>& compositions_of(int n);
// Partitions of n, ascending in lexicographic order.
std::vector<Composition> partitions_of(int n);

std::set<int> descent_set(const Composition& alpha);
// Inverse of descent_set for compositions of n.
Composition composition_from_descents(const std::set<int>& descents, int n);

// D(beta) is a subset of D(alpha): alpha is finer than (or equal to) beta.
bool refines(const Composition& alpha, const Composition& beta);
// All beta with beta refining alpha (beta <= alpha), ascending.
std::vector<Composition> refinements_of(const Composition& alpha);
// All beta coarser than alpha (beta >= alpha), ascending.
std::vector<Composition> coarsenings_of(const Composition& alpha);

// Three-way lexicographic comparison for compositions of the same size.
std::strong_ordering lex_compare(const Composition& alpha, const Composition& beta);

// Right-Pieri successors: |beta| = |alpha| + s, alpha_j <= beta_j, and
// length(beta) <= length(alpha) + 1.
std::set<Composition> pieri_successors(const Composition& alpha, int s);
// True when beta is one of pieri_successors(alpha, |beta|-|alpha|).
bool pieri_contained(const Composition& alpha, const Composition& beta);

// Hooks of every cell of a nonempty composition diagram.
std::map<Cell, int> hooks(const Composition& alpha);

}  // namespace ncsf
