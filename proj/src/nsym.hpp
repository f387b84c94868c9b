#pragma once

#include <optional>
#include <string>
#include <vector>

#include "composition.hpp"
#include "qpoly.hpp"
#include "terms.hpp"

namespace ncsf {

enum class NSymBasis { H, R, S, Qp };

const char* basis_tag(NSymBasis b);

// Element of NSym (over Z[q]) in one of the supported bases. Only the H basis
// may hold inhomogeneous combinations through the matrix-based conversions.
struct NSymExpr {
  NSymBasis basis = NSymBasis::H;
  Terms terms;

  static NSymExpr zero(NSymBasis b = NSymBasis::H) { return {b, {}}; }
  static NSymExpr one(NSymBasis b = NSymBasis::H) { return element(b, Composition{}); }
  static NSymExpr element(NSymBasis b, const Composition& index, const QPoly& coef = QPoly(1));

  QPoly coefficient(const Composition& index) const { return coefficient_of(terms, index); }
  std::optional<int> degree() const { return homogeneous_degree(terms); }
  bool is_zero() const { return terms.empty(); }

  NSymExpr& operator+=(const NSymExpr& o);
  NSymExpr& operator-=(const NSymExpr& o);
  NSymExpr& operator*=(const QPoly& c);
  friend NSymExpr operator+(NSymExpr a, const NSymExpr& b) { return a += b; }
  friend NSymExpr operator-(NSymExpr a, const NSymExpr& b) { return a -= b; }
  friend NSymExpr operator*(const QPoly& c, NSymExpr a) { return a *= c; }
  friend bool operator==(const NSymExpr&, const NSymExpr&) = default;
};

// H_alpha H_beta = H_{alpha.beta}, extended bilinearly.
NSymExpr h_product(const NSymExpr& a, const NSymExpr& b);
// Product of arbitrary NSym elements; the result is expressed in a's basis.
NSymExpr product(const NSymExpr& a, const NSymExpr& b);

// Signed permutation sum over H indexed by shifted tuples (H_0 = 1, H_{<0} = 0).
NSymExpr immaculate_jacobi_trudi(const IntTuple& alpha);

// Adjoint actions on the H basis.
NSymExpr perp_e(int k, const NSymExpr& f);  // F_{1^k}^perp
NSymExpr perp_h(int k, const NSymExpr& f);  // F_k^perp
NSymExpr perp_m(const Composition& alpha, const NSymExpr& f);  // M_alpha^perp

// Non-commutative Bernstein creation operator applied to an H expression.
NSymExpr bernstein_apply(int m, const NSymExpr& f);
// Hall-Littlewood creation operator sum_i q^i B_{m+i} F_i^perp.
NSymExpr hl_creation_apply(int m, const NSymExpr& f);

// Cached images of single basis elements in H.
const NSymExpr& immaculate_in_h(const Composition& alpha);
const NSymExpr& qprime_in_h(const Composition& alpha);
NSymExpr ribbon_in_h(const Composition& alpha);
// B_{alpha_1} ... B_{alpha_m}(1) by repeated Bernstein operators; an
// independent route to the immaculate functions.
NSymExpr immaculate_via_bernstein(const IntTuple& alpha);

NSymExpr to_h(const NSymExpr& f);
NSymExpr to_basis(const NSymExpr& f, NSymBasis target);

// Right Pieri rules.
NSymExpr pieri_immaculate(const Composition& alpha, int s);   // S_alpha H_s
NSymExpr pieri_elementary(const Composition& alpha, int s);   // S_alpha S_{1^s}
NSymExpr pieri_hl(const Composition& alpha, int s);           // Qp_alpha H_s
// Number of rows of alpha strictly shorter than the same row of beta.
int pieri_hl_exponent(const Composition& alpha, const Composition& beta);

// F_{1^r}^perp and F_r^perp applied to an immaculate function indexed by an
// integer tuple; results in the immaculate basis.
NSymExpr perp_on_immaculate_e(int r, const IntTuple& alpha);
NSymExpr perp_on_immaculate_h(int r, const IntTuple& alpha);

// H_beta = sum over immaculate tableaux T of content beta of
// (1-q)^{n(T)} Qp_{shape(T)}.
NSymExpr h_to_qprime_tableau(const Composition& beta);

// Square matrix over Z[q]; entry (row, col) is the coefficient of
// to_{cols[col]} in from_{rows[row]}.
struct TransitionMatrix {
  std::string from;
  std::string to;
  int n = 0;
  std::vector<Composition> rows;
  std::vector<Composition> cols;
  std::vector<std::vector<QPoly>> entries;

  // "# M(A,B) n=k lex" header then one space separated row per line.
  std::string to_text() const;
  bool is_identity() const;
};

TransitionMatrix transition_matrix(int n, NSymBasis from, NSymBasis to);
TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Checks the Hall-Littlewood expansions of S_{1^n} and S_{k,1^{n-k}} and the
// inverse creation-operator identity on every H_beta with |beta| <= n.
std::vector<IdentityResult> hl_identities_check(int n);

}  // namespace ncsf
