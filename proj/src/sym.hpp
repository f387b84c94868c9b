#pragma once

#include <optional>
#include <vector>

#include "composition.hpp"
#include "nsym.hpp"
#include "terms.hpp"

namespace ncsf {

enum class SymBasis { h, s };

const char* basis_tag(SymBasis b);

// Commutative symmetric function; every index is a partition.
struct SymExpr {
  SymBasis basis = SymBasis::h;
  Terms terms;

  static SymExpr element(SymBasis b, const Composition& partition, const QPoly& coef = QPoly(1));
  QPoly coefficient(const Composition& index) const { return coefficient_of(terms, index); }
  bool is_zero() const { return terms.empty(); }

  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend bool operator==(const SymExpr&, const SymExpr&) = default;
};

// Forgetful map H_alpha -> h_{sort(alpha)}.
SymExpr chi(const NSymExpr& f);
// det[h_{alpha_i + j - i}] expanded in h-monomials.
SymExpr schur_jacobi_trudi(const IntTuple& alpha);

struct Straightened {
  int sign = 0;  // 0 when s_alpha vanishes
  Composition partition;
};
Straightened straighten(const IntTuple& alpha);

SymExpr sym_product(const SymExpr& a, const SymExpr& b);
SymExpr to_basis(const SymExpr& f, SymBasis target);

struct ProjectionReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<Composition> failures;
  bool passed() const { return failures.empty(); }
};

// chi(S_alpha), computed through Bernstein operators, against the classical
// Jacobi-Trudi determinant for every alpha of size n.
ProjectionReport verify_projection(int n);

}  // namespace ncsf
