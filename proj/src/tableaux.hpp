#pragma once

#include <functional>
#include <string>
#include <vector>

#include "composition.hpp"
#include "qpoly.hpp"

namespace ncsf {

// Row-wise filling of a composition diagram: rows weakly increase and the
// first column strictly increases top to bottom.
class ImmaculateTableau {
 public:
  ImmaculateTableau(Composition shape, std::vector<std::vector<int>> rows);

  const Composition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  // Multiplicities of 1, 2, ..., max entry (zeros allowed inside).
  std::vector<int> content() const;
  bool is_standard() const;

  friend bool operator==(const ImmaculateTableau&, const ImmaculateTableau&) = default;

  // One row per line, entries space separated, row 1 first.
  std::string to_string() const;

 private:
  Composition shape_;
  std::vector<std::vector<int>> rows_;
};

// All immaculate tableaux of the given shape and content in row-major
// lexicographic order of entries.
std::vector<ImmaculateTableau> enumerate_immaculate(const Composition& shape, const Composition& content);
// Visits the same tableaux without materializing the list.
void for_each_immaculate(const Composition& shape, const std::vector<int>& content,
                         const std::function<void(const ImmaculateTableau&)>& visit);
// K_{shape,content}.
Integer count_immaculate(const Composition& shape, const Composition& content);

std::vector<ImmaculateTableau> enumerate_standard(const Composition& shape);

// n! / product of hooks; aborts if the quotient is not integral.
Integer count_standard_hook(const Composition& shape);

ImmaculateTableau standardize(const ImmaculateTableau& t);
Composition descent_composition(const ImmaculateTableau& standard);
// L_{shape,beta}: standard tableaux of the shape with descent composition beta.
Integer count_L(const Composition& shape, const Composition& beta);
// Total number of distinct letters per row beyond the first.
int n_statistic(const ImmaculateTableau& t);

// Semistandard Young tableaux of partition shape lambda with given content.
Integer ssyt_count(const Composition& lambda, const Composition& content);

}  // namespace ncsf
