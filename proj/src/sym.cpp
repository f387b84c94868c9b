#include "sym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "errors.hpp"

namespace ncsf {

const char* basis_tag(SymBasis b) { return b == SymBasis::h ? "h" : "s"; }

SymExpr SymExpr::element(SymBasis b, const Composition& partition, const QPoly& coef) {
  if (!partition.is_partition()) throw DomainError("symmetric function index must be a partition");
  SymExpr e{b, {}};
  add_term(e.terms, partition, coef);
  return e;
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis = o.basis;
  if (basis != o.basis) throw DomainError("cannot add h and s expressions without conversion");
  add_scaled(terms, o.terms, QPoly(1));
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis = o.basis;
  if (basis != o.basis) throw DomainError("cannot add h and s expressions without conversion");
  add_scaled(terms, o.terms, QPoly(-1));
  return *this;
}

SymExpr chi(const NSymExpr& f) {
  SymExpr out;
  for (const auto& [a, c] : to_h(f).terms) add_term(out.terms, a.sorted_descending(), c);
  return out;
}

SymExpr schur_jacobi_trudi(const IntTuple& alpha) {
  const std::size_t m = alpha.length();
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  SymExpr out;
  do {
    std::vector<int> parts;
    bool dead = false;
    for (std::size_t i = 0; i < m && !dead; ++i) {
      const int p = alpha.entries[i] + sigma[i] - static_cast<int>(i);
      if (p < 0) dead = true;
      else if (p > 0) parts.push_back(p);
    }
    if (dead) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) inversions += sigma[i] > sigma[j];
    std::sort(parts.begin(), parts.end(), std::greater<>());
    add_term(out.terms, Composition(parts), QPoly(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Straightened straighten(const IntTuple& alpha) {
  const std::size_t m = alpha.length();
  std::vector<int> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = alpha.entries[i] - static_cast<int>(i + 1);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  for (std::size_t j = 1; j < m; ++j)
    if (v[order[j]] == v[order[j - 1]]) return {};
  int inversions = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) inversions += order[i] > order[j];
  std::vector<int> lambda(m);
  for (std::size_t j = 0; j < m; ++j) lambda[j] = v[order[j]] + static_cast<int>(j + 1);
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (!lambda.empty() && lambda.back() < 0) return {};
  return {inversions % 2 ? -1 : 1, Composition(lambda)};
}

SymExpr sym_product(const SymExpr& a, const SymExpr& b) {
  if ((a.basis != SymBasis::h && !a.is_zero()) || (b.basis != SymBasis::h && !b.is_zero()))
    throw DomainError("sym_product: operands must be in the h basis");
  SymExpr out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) add_term(out.terms, ka.concat(kb).sorted_descending(), ca * cb);
  return out;
}

SymExpr to_basis(const SymExpr& f, SymBasis target) {
  if (f.basis == target) return f;
  if (target == SymBasis::h) {
    SymExpr out;
    for (const auto& [l, c] : f.terms) add_scaled(out.terms, schur_jacobi_trudi(IntTuple::of(l)).terms, c);
    return out;
  }
  // s_lambda in h is h_lambda plus terms dominating lambda, hence lex-larger.
  Terms rem = f.terms;
  SymExpr out{SymBasis::s, {}};
  while (!rem.empty()) {
    const Composition l = rem.begin()->first;
    const QPoly c = rem.begin()->second;
    add_term(out.terms, l, c);
    add_scaled(rem, schur_jacobi_trudi(IntTuple::of(l)).terms, -c);
  }
  return out;
}

ProjectionReport verify_projection(int n) {
  if (n < 1) throw DomainError("verify_projection: n must be positive");
  ProjectionReport r;
  r.n = n;
  for (const auto& a : compositions_of(n)) {
    ++r.checked;
    if (chi(immaculate_via_bernstein(IntTuple::of(a))) != schur_jacobi_trudi(IntTuple::of(a))) r.failures.push_back(a);
  }
  return r;
}

}  // namespace ncsf
