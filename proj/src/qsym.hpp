#pragma once

#include <optional>

#include "composition.hpp"
#include "nsym.hpp"
#include "qpoly.hpp"
#include "terms.hpp"

namespace ncsf {

enum class QSymBasis { M, F, Sd, P };

const char* basis_tag(QSymBasis b);

struct QSymExpr {
  QSymBasis basis = QSymBasis::M;
  Terms terms;

  static QSymExpr zero(QSymBasis b = QSymBasis::M) { return {b, {}}; }
  static QSymExpr element(QSymBasis b, const Composition& index, const QPoly& coef = QPoly(1));

  QPoly coefficient(const Composition& index) const { return coefficient_of(terms, index); }
  std::optional<int> degree() const { return homogeneous_degree(terms); }
  bool is_zero() const { return terms.empty(); }

  QSymExpr& operator+=(const QSymExpr& o);
  QSymExpr& operator-=(const QSymExpr& o);
  QSymExpr& operator*=(const QPoly& c);
  friend QSymExpr operator+(QSymExpr a, const QSymExpr& b) { return a += b; }
  friend QSymExpr operator-(QSymExpr a, const QSymExpr& b) { return a -= b; }
  friend QSymExpr operator*(const QPoly& c, QSymExpr a) { return a *= c; }
  friend bool operator==(const QSymExpr&, const QSymExpr&) = default;
};

QSymExpr f_to_m(const QSymExpr& f);
// sum_beta K_{alpha,beta} M_beta
const QSymExpr& dual_immaculate_in_m(const Composition& alpha);
// sum_beta L_{alpha,beta} F_beta
QSymExpr dual_immaculate_in_f(const Composition& alpha);
// sum over immaculate tableaux T of shape alpha of (1-q)^{n(T)} M_{content(T)}
const QSymExpr& p_basis_in_m(const Composition& alpha);
// Classical monomial expansion of a Schur function through SSYT counts.
QSymExpr schur_in_m(const Composition& lambda);

QSymExpr to_m(const QSymExpr& g);
QSymExpr to_basis(const QSymExpr& g, QSymBasis target);

// <H_alpha, M_beta> = delta, extended bilinearly.
QPoly pairing(const NSymExpr& f, const QSymExpr& g);

// Signed expansion of s_lambda in the dual immaculate basis.
QSymExpr schur_to_dual_immaculate(const Composition& lambda);
// Keeps only the partition-indexed dual immaculate coefficients; meaningful
// when g is symmetric.
Terms sstar_to_schur_projection(const QSymExpr& g);

// F_i times the dual immaculate function, read off by duality from the
// action of F_i^perp on immaculate functions.
QSymExpr f_times_dual_immaculate(int i, const Composition& alpha);

// Rows are the partitions of n, columns all compositions of n.
TransitionMatrix schur_to_dual_immaculate_matrix(int n);
TransitionMatrix transition_matrix(int n, QSymBasis from, QSymBasis to);

}  // namespace ncsf
