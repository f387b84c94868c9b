#pragma once

#include <string>
#include <vector>

#include "composition.hpp"
#include "qsym.hpp"

namespace ncsf {

// Maximal chain in the immaculate poset, stored as the start composition and
// the row labels of the removed boxes.
struct PosetPath {
  Composition start;
  std::vector<int> steps;  // 1-based rows
  Composition end;

  // Intermediate compositions, start first and end last.
  std::vector<Composition> chain() const;
  // "[1,3,2] -3-> [1,3,1] -1-> ... -> [1,1]"
  std::string to_string() const;
};

// Compositions covered by alpha: one box removed from a row of length >= 2,
// or the last row removed when it has length 1. Labels are 1-based rows.
std::vector<std::pair<int, Composition>> poset_covers(const Composition& alpha);

// All maximal chains from alpha down to beta, in lexicographic order of the
// label words.
std::vector<PosetPath> enumerate_paths(const Composition& alpha, const Composition& beta);

// Descent composition of a word: positions i with w_i > w_{i+1}.
Composition word_descent_composition(const std::vector<int>& word);
// Reverse of the descent composition of the label word.
Composition path_descent_composition(const PosetPath& p);

QSymExpr skew_dual_immaculate(const Composition& alpha, const Composition& beta, QSymBasis target);

}  // namespace ncsf
