#include "tableaux.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>

#include "errors.hpp"

namespace ncsf {

ImmaculateTableau::ImmaculateTableau(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.length()) throw DomainError("tableau: row count does not match shape");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (static_cast<int>(r.size()) != shape_[i]) throw DomainError("tableau: row length does not match shape");
    if (r.front() < 1) throw DomainError("tableau: entries must be positive");
    if (!std::is_sorted(r.begin(), r.end())) throw DomainError("tableau: rows must weakly increase");
    if (i > 0 && rows_[i - 1].front() >= r.front())
      throw DomainError("tableau: first column must strictly increase");
  }
}

std::vector<int> ImmaculateTableau::content() const {
  std::vector<int> c;
  for (const auto& r : rows_)
    for (int v : r) {
      if (static_cast<int>(c.size()) < v) c.resize(v, 0);
      ++c[v - 1];
    }
  return c;
}

bool ImmaculateTableau::is_standard() const {
  auto c = content();
  return std::all_of(c.begin(), c.end(), [](int m) { return m == 1; });
}

std::string ImmaculateTableau::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(r[j]);
    }
    s += '\n';
  }
  return s;
}

namespace {

struct Filler {
  const Composition& shape;
  std::vector<int> remaining;
  std::vector<std::vector<int>> rows;
  const std::function<void(const ImmaculateTableau&)>& visit;

  void run(std::size_t row, int col) {
    if (row == shape.length()) {
      visit(ImmaculateTableau(shape, rows));
      return;
    }
    if (col == shape[row]) {
      run(row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) {
      lo = rows[row][col - 1];
    } else if (row > 0) {
      lo = rows[row - 1][0] + 1;
    }
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      rows[row].push_back(v);
      run(row, col + 1);
      rows[row].pop_back();
      ++remaining[v - 1];
    }
  }
};

}  // namespace

void for_each_immaculate(const Composition& shape, const std::vector<int>& content,
                         const std::function<void(const ImmaculateTableau&)>& visit) {
  int total = 0;
  for (int m : content) {
    if (m < 0) throw DomainError("content multiplicities must be non-negative");
    total += m;
  }
  if (total != shape.size()) throw DomainError("enumerate_immaculate: |shape| != |content|");
  Filler f{shape, content, std::vector<std::vector<int>>(shape.length()), visit};
  f.run(0, 0);
}

std::vector<ImmaculateTableau> enumerate_immaculate(const Composition& shape, const Composition& content) {
  std::vector<ImmaculateTableau> out;
  for_each_immaculate(shape, content.parts(), [&](const ImmaculateTableau& t) { out.push_back(t); });
  return out;
}

Integer count_immaculate(const Composition& shape, const Composition& content) {
  Integer n = 0;
  for_each_immaculate(shape, content.parts(), [&](const ImmaculateTableau&) { ++n; });
  return n;
}

std::vector<ImmaculateTableau> enumerate_standard(const Composition& shape) {
  std::vector<ImmaculateTableau> out;
  for_each_immaculate(shape, std::vector<int>(static_cast<std::size_t>(shape.size()), 1),
                      [&](const ImmaculateTableau& t) { out.push_back(t); });
  return out;
}

Integer count_standard_hook(const Composition& shape) {
  if (shape.empty()) throw DomainError("count_standard_hook: empty shape");
  Integer fact = 1;
  for (int i = 2; i <= shape.size(); ++i) fact *= i;
  Integer prod = 1;
  for (const auto& [cell, h] : hooks(shape)) prod *= h;
  if (fact % prod != 0) {
    std::cerr << "ncsf: hook product does not divide n! for shape " << shape.to_string() << "\n";
    std::abort();
  }
  return fact / prod;
}

ImmaculateTableau standardize(const ImmaculateTableau& t) {
  const auto& rows = t.rows();
  std::vector<std::vector<int>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i].assign(rows[i].size(), 0);
  int maxv = 0;
  for (const auto& r : rows) maxv = std::max(maxv, r.back());
  int label = 0;
  for (int v = 1; v <= maxv; ++v)
    for (std::size_t i = rows.size(); i-- > 0;)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j] == v) out[i][j] = ++label;
  return ImmaculateTableau(t.shape(), std::move(out));
}

Composition descent_composition(const ImmaculateTableau& standard) {
  if (!standard.is_standard()) throw DomainError("descent_composition: tableau is not standard");
  const int n = standard.size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
  const auto& rows = standard.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i]) row_of[v] = static_cast<int>(i);
  std::set<int> d;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) d.insert(i);
  return composition_from_descents(d, n);
}

Integer count_L(const Composition& shape, const Composition& beta) {
  if (shape.size() != beta.size()) throw DomainError("count_L: |shape| != |beta|");
  Integer n = 0;
  for_each_immaculate(shape, std::vector<int>(static_cast<std::size_t>(shape.size()), 1),
                      [&](const ImmaculateTableau& t) {
                        if (descent_composition(t) == beta) ++n;
                      });
  return n;
}

int n_statistic(const ImmaculateTableau& t) {
  int n = 0;
  for (const auto& r : t.rows()) {
    int distinct = 1;
    for (std::size_t j = 1; j < r.size(); ++j)
      if (r[j] != r[j - 1]) ++distinct;
    n += distinct - 1;
  }
  return n;
}

namespace {

// Adds horizontal strips of sizes content[k..] to mu, staying inside lambda.
Integer ssyt_rec(const std::vector<int>& lambda, std::vector<int>& mu, const std::vector<int>& content,
                 std::size_t k);

void strips(const std::vector<int>& lambda, const std::vector<int>& base, std::vector<int>& nu, std::size_t row,
            int left, const std::vector<int>& content, std::size_t k, Integer& acc) {
  if (row == lambda.size()) {
    if (left == 0) acc += ssyt_rec(lambda, nu, content, k + 1);
    return;
  }
  int cap = lambda[row];
  if (row > 0) cap = std::min(cap, base[row - 1]);
  for (int add = 0; base[row] + add <= cap && add <= left; ++add) {
    nu[row] = base[row] + add;
    strips(lambda, base, nu, row + 1, left - add, content, k, acc);
  }
  nu[row] = base[row];
}

Integer ssyt_rec(const std::vector<int>& lambda, std::vector<int>& mu, const std::vector<int>& content,
                 std::size_t k) {
  if (k == content.size()) return mu == lambda ? Integer(1) : Integer(0);
  Integer acc = 0;
  std::vector<int> base = mu;
  std::vector<int> nu = mu;
  strips(lambda, base, nu, 0, content[k], content, k, acc);
  return acc;
}

}  // namespace

Integer ssyt_count(const Composition& lambda, const Composition& content) {
  if (!lambda.is_partition()) throw DomainError("ssyt_count: shape must be a partition");
  if (lambda.size() != content.size()) return 0;
  std::vector<int> mu(lambda.length(), 0);
  return ssyt_rec(lambda.parts(), mu, content.parts(), 0);
}

}  // namespace ncsf
