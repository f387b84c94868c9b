#include "nsym.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "errors.hpp"
#include "tableaux.hpp"

namespace ncsf {

const char* basis_tag(NSymBasis b) {
  switch (b) {
    case NSymBasis::H: return "H";
    case NSymBasis::R: return "R";
    case NSymBasis::S: return "S";
    case NSymBasis::Qp: return "Qp";
  }
  return "?";
}

NSymExpr NSymExpr::element(NSymBasis b, const Composition& index, const QPoly& coef) {
  NSymExpr e{b, {}};
  add_term(e.terms, index, coef);
  return e;
}

static void require_same_basis(const NSymExpr& a, const NSymExpr& b) {
  if (a.basis != b.basis)
    throw DomainError(std::string("cannot combine ") + basis_tag(a.basis) + " and " + basis_tag(b.basis) +
                      " expressions without conversion");
}

NSymExpr& NSymExpr::operator+=(const NSymExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis = o.basis;
  require_same_basis(*this, o);
  add_scaled(terms, o.terms, QPoly(1));
  return *this;
}

NSymExpr& NSymExpr::operator-=(const NSymExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis = o.basis;
  require_same_basis(*this, o);
  add_scaled(terms, o.terms, QPoly(-1));
  return *this;
}

NSymExpr& NSymExpr::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

static void require_h(const NSymExpr& f, const char* op) {
  if (f.basis != NSymBasis::H && !f.is_zero())
    throw DomainError(std::string(op) + ": operand must be in the H basis");
}

NSymExpr h_product(const NSymExpr& a, const NSymExpr& b) {
  require_h(a, "h_product");
  require_h(b, "h_product");
  NSymExpr out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) add_term(out.terms, ka.concat(kb), ca * cb);
  return out;
}

NSymExpr product(const NSymExpr& a, const NSymExpr& b) {
  return to_basis(h_product(to_h(a), to_h(b)), a.basis);
}

namespace {

// Signed sum over permutations; entries alpha_i + sigma_i - i that go
// negative prune the branch.
struct JacobiTrudi {
  const std::vector<int>& alpha;
  std::vector<bool> used;
  std::vector<int> parts;
  std::map<std::vector<int>, long> acc;

  void run(std::size_t i, int sign) {
    const std::size_t m = alpha.size();
    if (i == m) {
      std::vector<int> nz;
      for (int p : parts)
        if (p > 0) nz.push_back(p);
      acc[nz] += sign;
      return;
    }
    int greater_used = 0;
    for (std::size_t s = m; s-- > 0;) {
      if (used[s]) {
        ++greater_used;
        continue;
      }
      const int p = alpha[i] + static_cast<int>(s) - static_cast<int>(i);
      if (p >= 0) {
        used[s] = true;
        parts.push_back(p);
        run(i + 1, (greater_used % 2) ? -sign : sign);
        parts.pop_back();
        used[s] = false;
      }
    }
  }
};

}  // namespace

NSymExpr immaculate_jacobi_trudi(const IntTuple& alpha) {
  JacobiTrudi jt{alpha.entries, std::vector<bool>(alpha.length(), false), {}, {}};
  jt.run(0, 1);
  NSymExpr out;
  for (const auto& [parts, c] : jt.acc)
    if (c != 0) add_term(out.terms, Composition(parts), QPoly(c));
  return out;
}

namespace {

template <class Visit>
void choose_rows(const Composition& a, std::size_t row, int k, std::vector<int>& cur, Visit&& visit) {
  if (k == 0) {
    std::vector<int> rest = cur;
    rest.insert(rest.end(), a.begin() + static_cast<long>(row), a.end());
    visit(Composition::from_weak(rest));
    return;
  }
  if (a.length() - row < static_cast<std::size_t>(k)) return;
  cur.push_back(a[row] - 1);
  choose_rows(a, row + 1, k - 1, cur, visit);
  cur.back() = a[row];
  choose_rows(a, row + 1, k, cur, visit);
  cur.pop_back();
}

template <class Visit>
void remove_boxes(const Composition& a, std::size_t row, int k, std::vector<int>& cur, Visit&& visit) {
  if (row == a.length()) {
    if (k == 0) visit(Composition::from_weak(cur));
    return;
  }
  for (int take = 0; take <= std::min(k, a[row]); ++take) {
    cur.push_back(a[row] - take);
    remove_boxes(a, row + 1, k - take, cur, visit);
    cur.pop_back();
  }
}

// Left tensor factor gamma (zero-deleted) must equal alpha; the right factor
// is what remains of beta.
template <class Visit>
void match_left(const Composition& alpha, const Composition& beta, std::size_t p, std::size_t row,
                std::vector<int>& rest, Visit&& visit) {
  if (row == beta.length()) {
    if (p == alpha.length()) visit(Composition::from_weak(rest));
    return;
  }
  if (alpha.length() - p > beta.length() - row) return;
  rest.push_back(beta[row]);
  match_left(alpha, beta, p, row + 1, rest, visit);
  rest.pop_back();
  if (p < alpha.length() && alpha[p] <= beta[row]) {
    rest.push_back(beta[row] - alpha[p]);
    match_left(alpha, beta, p + 1, row + 1, rest, visit);
    rest.pop_back();
  }
}

}  // namespace

NSymExpr perp_e(int k, const NSymExpr& f) {
  require_h(f, "perp_e");
  if (k < 0) throw DomainError("perp_e: negative degree");
  if (k == 0) return f;
  NSymExpr out;
  std::vector<int> cur;
  for (const auto& [a, c] : f.terms)
    choose_rows(a, 0, k, cur, [&](const Composition& g) { add_term(out.terms, g, c); });
  return out;
}

NSymExpr perp_h(int k, const NSymExpr& f) {
  require_h(f, "perp_h");
  if (k < 0) throw DomainError("perp_h: negative degree");
  if (k == 0) return f;
  NSymExpr out;
  std::vector<int> cur;
  for (const auto& [a, c] : f.terms) {
    if (a.size() < k) continue;
    remove_boxes(a, 0, k, cur, [&](const Composition& g) { add_term(out.terms, g, c); });
  }
  return out;
}

NSymExpr perp_m(const Composition& alpha, const NSymExpr& f) {
  require_h(f, "perp_m");
  if (alpha.empty()) return f;
  NSymExpr out;
  std::vector<int> rest;
  for (const auto& [b, c] : f.terms) {
    if (b.size() < alpha.size()) continue;
    match_left(alpha, b, 0, 0, rest, [&](const Composition& g) { add_term(out.terms, g, c); });
  }
  return out;
}

static NSymExpr left_h(int m, const NSymExpr& f) {
  if (m < 0) return NSymExpr{};
  if (m == 0) return f;
  NSymExpr out;
  const Composition head{m};
  for (const auto& [a, c] : f.terms) add_term(out.terms, head.concat(a), c);
  return out;
}

NSymExpr bernstein_apply(int m, const NSymExpr& f) {
  require_h(f, "bernstein_apply");
  NSymExpr out;
  const int top = max_degree(f.terms);
  for (int i = 0; i <= top; ++i) {
    if (m + i < 0) continue;
    NSymExpr g = left_h(m + i, perp_e(i, f));
    add_scaled(out.terms, g.terms, QPoly(i % 2 ? -1 : 1));
  }
  return out;
}

NSymExpr hl_creation_apply(int m, const NSymExpr& f) {
  require_h(f, "hl_creation_apply");
  NSymExpr out;
  const int top = max_degree(f.terms);
  for (int i = 0; i <= top; ++i) {
    NSymExpr g = bernstein_apply(m + i, perp_h(i, f));
    add_scaled(out.terms, g.terms, QPoly::monomial(1, static_cast<unsigned>(i)));
  }
  return out;
}

namespace {

struct Cache {
  std::mutex mu;
  std::map<Composition, NSymExpr> map;

  template <class Make>
  const NSymExpr& get(const Composition& key, Make&& make) {
    {
      std::lock_guard lock(mu);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    NSymExpr value = make();
    std::lock_guard lock(mu);
    return map.try_emplace(key, std::move(value)).first->second;
  }
};

Cache& immaculate_cache() {
  static Cache c;
  return c;
}

Cache& qprime_cache() {
  static Cache c;
  return c;
}

}  // namespace

const NSymExpr& immaculate_in_h(const Composition& alpha) {
  return immaculate_cache().get(alpha, [&] { return immaculate_jacobi_trudi(IntTuple::of(alpha)); });
}

const NSymExpr& qprime_in_h(const Composition& alpha) {
  return qprime_cache().get(alpha, [&] {
    if (alpha.empty()) return NSymExpr::one();
    std::vector<int> tail(alpha.begin() + 1, alpha.end());
    return hl_creation_apply(alpha[0], qprime_in_h(Composition(tail)));
  });
}

NSymExpr ribbon_in_h(const Composition& alpha) {
  NSymExpr out;
  const auto l = static_cast<long>(alpha.length());
  for (const auto& b : coarsenings_of(alpha)) {
    const long d = l - static_cast<long>(b.length());
    add_term(out.terms, b, QPoly(d % 2 ? -1 : 1));
  }
  return out;
}

NSymExpr immaculate_via_bernstein(const IntTuple& alpha) {
  NSymExpr f = NSymExpr::one();
  for (std::size_t i = alpha.length(); i-- > 0;) f = bernstein_apply(alpha.entries[i], f);
  return f;
}

NSymExpr to_h(const NSymExpr& f) {
  if (f.basis == NSymBasis::H) return f;
  NSymExpr out;
  for (const auto& [a, c] : f.terms) {
    switch (f.basis) {
      case NSymBasis::R: add_scaled(out.terms, ribbon_in_h(a).terms, c); break;
      case NSymBasis::S: add_scaled(out.terms, immaculate_in_h(a).terms, c); break;
      case NSymBasis::Qp: add_scaled(out.terms, qprime_in_h(a).terms, c); break;
      case NSymBasis::H: break;
    }
  }
  return out;
}

namespace {

// The image of X_beta in H is H_beta plus terms lex-larger than beta, so the
// lex-smallest remaining H term determines the next X coefficient.
template <class Image>
NSymExpr back_substitute(Terms rem, NSymBasis target, Image&& image) {
  NSymExpr out{target, {}};
  while (!rem.empty()) {
    const Composition beta = rem.begin()->first;
    const QPoly c = rem.begin()->second;
    add_term(out.terms, beta, c);
    add_scaled(rem, image(beta).terms, -c);
    if (!rem.empty() && rem.begin()->first == beta)
      throw std::logic_error("back substitution did not eliminate leading term");
  }
  return out;
}

}  // namespace

NSymExpr to_basis(const NSymExpr& f, NSymBasis target) {
  if (f.basis == target) return f;
  if (target != NSymBasis::H && !is_homogeneous(f.terms))
    throw DomainError(std::string("conversion to ") + basis_tag(target) + " requires a homogeneous expression");
  NSymExpr h = to_h(f);
  switch (target) {
    case NSymBasis::H: return h;
    case NSymBasis::R: {
      NSymExpr out{NSymBasis::R, {}};
      for (const auto& [a, c] : h.terms)
        for (const auto& b : coarsenings_of(a)) add_term(out.terms, b, c);
      return out;
    }
    case NSymBasis::S:
      return back_substitute(std::move(h.terms), NSymBasis::S,
                             [](const Composition& b) -> const NSymExpr& { return immaculate_in_h(b); });
    case NSymBasis::Qp:
      return back_substitute(std::move(h.terms), NSymBasis::Qp,
                             [](const Composition& b) -> const NSymExpr& { return qprime_in_h(b); });
  }
  return h;
}

NSymExpr pieri_immaculate(const Composition& alpha, int s) {
  NSymExpr out{NSymBasis::S, {}};
  for (const auto& b : pieri_successors(alpha, s)) add_term(out.terms, b, QPoly(1));
  return out;
}

NSymExpr pieri_elementary(const Composition& alpha, int s) {
  if (s < 0) throw DomainError("pieri_elementary: negative s");
  NSymExpr out{NSymBasis::S, {}};
  const std::size_t l = alpha.length();
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    std::vector<int> parts = alpha.parts();
    int used = 0;
    for (std::size_t i = 0; i < l; ++i)
      if (mask & (std::size_t{1} << i)) {
        ++parts[i];
        ++used;
      }
    if (used > s) continue;
    parts.insert(parts.end(), static_cast<std::size_t>(s - used), 1);
    add_term(out.terms, Composition(parts), QPoly(1));
  }
  return out;
}

int pieri_hl_exponent(const Composition& alpha, const Composition& beta) {
  int n = 0;
  for (std::size_t i = 0; i < alpha.length() && i < beta.length(); ++i)
    if (alpha[i] < beta[i]) ++n;
  return n;
}

NSymExpr pieri_hl(const Composition& alpha, int s) {
  NSymExpr out{NSymBasis::Qp, {}};
  for (const auto& b : pieri_successors(alpha, s))
    add_term(out.terms, b, QPoly::one_minus_q_power(static_cast<unsigned>(pieri_hl_exponent(alpha, b))));
  return out;
}

NSymExpr perp_on_immaculate_e(int r, const IntTuple& alpha) {
  if (r < 0) throw DomainError("perp_on_immaculate_e: negative degree");
  const std::size_t m = alpha.length();
  NSymExpr h;
  if (static_cast<std::size_t>(r) <= m) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      if (std::popcount(mask) != r) continue;
      IntTuple b = alpha;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t{1} << i)) --b.entries[i];
      h += immaculate_jacobi_trudi(b);
    }
  }
  return to_basis(h, NSymBasis::S);
}

namespace {

void lower_rows(const IntTuple& alpha, std::size_t i, int left, IntTuple& cur, NSymExpr& h) {
  const std::size_t m = alpha.length();
  if (i == m) {
    if (left == 0) h += immaculate_jacobi_trudi(cur);
    return;
  }
  const int floor = static_cast<int>(i + 1) - static_cast<int>(m);
  for (int d = 0; d <= left && alpha.entries[i] - d >= floor; ++d) {
    cur.entries[i] = alpha.entries[i] - d;
    lower_rows(alpha, i + 1, left - d, cur, h);
  }
  cur.entries[i] = alpha.entries[i];
}

}  // namespace

NSymExpr perp_on_immaculate_h(int r, const IntTuple& alpha) {
  if (r < 0) throw DomainError("perp_on_immaculate_h: negative degree");
  const std::size_t m = alpha.length();
  for (std::size_t i = 0; i < m; ++i)
    if (alpha.entries[i] < static_cast<int>(i + 1) - static_cast<int>(m)) return NSymExpr::zero(NSymBasis::S);
  NSymExpr h;
  IntTuple cur = alpha;
  lower_rows(alpha, 0, r, cur, h);
  return to_basis(h, NSymBasis::S);
}

NSymExpr h_to_qprime_tableau(const Composition& beta) {
  NSymExpr out{NSymBasis::Qp, {}};
  for (const auto& shape : compositions_of(beta.size())) {
    if (shape < beta) continue;
    QPoly c;
    for_each_immaculate(shape, beta.parts(), [&](const ImmaculateTableau& t) {
      c += QPoly::one_minus_q_power(static_cast<unsigned>(n_statistic(t)));
    });
    add_term(out.terms, shape, c);
  }
  return out;
}

std::string TransitionMatrix::to_text() const {
  std::string s = "# M(" + from + "," + to + ") n=" + std::to_string(n) + " lex\n";
  for (const auto& row : entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += row[j].to_string();
    }
    s += '\n';
  }
  return s;
}

bool TransitionMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      if (entries[i][j] != QPoly(i == j ? 1 : 0)) return false;
  return true;
}

TransitionMatrix transition_matrix(int n, NSymBasis from, NSymBasis to) {
  if (n < 1) throw DomainError("transition_matrix: n must be positive");
  TransitionMatrix t;
  t.from = basis_tag(from);
  t.to = basis_tag(to);
  t.n = n;
  t.rows = compositions_of(n);
  t.cols = t.rows;
  for (const auto& b : t.rows) {
    NSymExpr img = to_basis(NSymExpr::element(from, b), to);
    std::vector<QPoly> row;
    row.reserve(t.cols.size());
    for (const auto& a : t.cols) row.push_back(img.coefficient(a));
    t.entries.push_back(std::move(row));
  }
  return t;
}

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.cols != b.rows) throw DomainError("multiply: incompatible matrix indices");
  TransitionMatrix t;
  t.from = a.from;
  t.to = b.to;
  t.n = a.n;
  t.rows = a.rows;
  t.cols = b.cols;
  t.entries.assign(a.rows.size(), std::vector<QPoly>(b.cols.size()));
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t k = 0; k < a.cols.size(); ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.cols.size(); ++j)
        if (!b.entries[k][j].is_zero()) t.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return t;
}

namespace {

QPoly neg_q_power(int k) { return QPoly::monomial(k % 2 ? -1 : 1, static_cast<unsigned>(k)); }

IdentityResult compare(std::string name, const NSymExpr& lhs, const NSymExpr& rhs) {
  IdentityResult r{std::move(name), lhs == rhs, {}};
  if (!r.passed) {
    NSymExpr diff = lhs - rhs;
    r.detail = "differs on " + std::to_string(diff.terms.size()) + " H terms, first at H[" +
               diff.terms.begin()->first.to_string() + "]";
  }
  return r;
}

}  // namespace

std::vector<IdentityResult> hl_identities_check(int n) {
  if (n < 1) throw DomainError("hl_identities_check: n must be positive");
  std::vector<IdentityResult> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx{k};
    idx.insert(idx.end(), static_cast<std::size_t>(n - k), 1);
    const Composition lhs_index(idx);
    NSymExpr rhs;
    for (const auto& a : compositions_of(n)) {
      if (a[0] < k) continue;
      add_scaled(rhs.terms, qprime_in_h(a).terms, neg_q_power(n - k + 1 - static_cast<int>(a.length())));
    }
    out.push_back(compare("S[" + lhs_index.to_string() + "] in Qp", immaculate_in_h(lhs_index), rhs));
  }

  // B_m = sum_i (-q)^i Bt_{m+i} F_{1^i}^perp on every H_beta with |beta| <= n.
  IdentityResult op{"B_m via HL creation operators, |beta| <= " + std::to_string(n), true, {}};
  for (int size = 0; size <= n && op.passed; ++size)
    for (const auto& b : compositions_of(size)) {
      const NSymExpr hb = NSymExpr::element(NSymBasis::H, b);
      for (int m = -size - 1; m <= n; ++m) {
        NSymExpr lhs = bernstein_apply(m, hb);
        NSymExpr rhs;
        for (int i = 0; i <= size; ++i)
          add_scaled(rhs.terms, hl_creation_apply(m + i, perp_e(i, hb)).terms, neg_q_power(i));
        if (lhs != rhs) {
          op.passed = false;
          op.detail = "fails at m=" + std::to_string(m) + ", H[" + b.to_string() + "]";
          break;
        }
      }
      if (!op.passed) break;
    }
  out.push_back(op);
  return out;
}

}  // namespace ncsf
