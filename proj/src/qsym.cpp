#include "qsym.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "errors.hpp"
#include "tableaux.hpp"

namespace ncsf {

const char* basis_tag(QSymBasis b) {
  switch (b) {
    case QSymBasis::M: return "M";
    case QSymBasis::F: return "F";
    case QSymBasis::Sd: return "Sd";
    case QSymBasis::P: return "P";
  }
  return "?";
}

QSymExpr QSymExpr::element(QSymBasis b, const Composition& index, const QPoly& coef) {
  QSymExpr e{b, {}};
  add_term(e.terms, index, coef);
  return e;
}

static void require_same_basis(const QSymExpr& a, const QSymExpr& b) {
  if (a.basis != b.basis)
    throw DomainError(std::string("cannot combine ") + basis_tag(a.basis) + " and " + basis_tag(b.basis) +
                      " expressions without conversion");
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis = o.basis;
  require_same_basis(*this, o);
  add_scaled(terms, o.terms, QPoly(1));
  return *this;
}

QSymExpr& QSymExpr::operator-=(const QSymExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) basis = o.basis;
  require_same_basis(*this, o);
  add_scaled(terms, o.terms, QPoly(-1));
  return *this;
}

QSymExpr& QSymExpr::operator*=(const QPoly& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

QSymExpr f_to_m(const QSymExpr& f) {
  if (f.basis != QSymBasis::F && !f.is_zero()) throw DomainError("f_to_m: operand must be in the F basis");
  QSymExpr out;
  for (const auto& [a, c] : f.terms)
    for (const auto& b : refinements_of(a)) add_term(out.terms, b, c);
  return out;
}

namespace {

struct Cache {
  std::mutex mu;
  std::map<Composition, QSymExpr> map;

  template <class Make>
  const QSymExpr& get(const Composition& key, Make&& make) {
    {
      std::lock_guard lock(mu);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    QSymExpr value = make();
    std::lock_guard lock(mu);
    return map.try_emplace(key, std::move(value)).first->second;
  }
};

Composition content_of(const ImmaculateTableau& t) { return Composition::from_weak(t.content()); }

}  // namespace

const QSymExpr& dual_immaculate_in_m(const Composition& alpha) {
  static Cache cache;
  return cache.get(alpha, [&] {
    QSymExpr out;
    for (const auto& b : compositions_of(alpha.size())) {
      if (alpha < b) break;
      add_term(out.terms, b, QPoly(count_immaculate(alpha, b)));
    }
    return out;
  });
}

QSymExpr dual_immaculate_in_f(const Composition& alpha) {
  QSymExpr out{QSymBasis::F, {}};
  if (alpha.empty()) return QSymExpr::element(QSymBasis::F, {});
  for (const auto& s : enumerate_standard(alpha)) add_term(out.terms, descent_composition(s), QPoly(1));
  return out;
}

const QSymExpr& p_basis_in_m(const Composition& alpha) {
  static Cache cache;
  return cache.get(alpha, [&] {
    QSymExpr out;
    for (const auto& b : compositions_of(alpha.size())) {
      if (alpha < b) break;
      for_each_immaculate(alpha, b.parts(), [&](const ImmaculateTableau& t) {
        add_term(out.terms, content_of(t), QPoly::one_minus_q_power(static_cast<unsigned>(n_statistic(t))));
      });
    }
    return out;
  });
}

QSymExpr schur_in_m(const Composition& lambda) {
  if (!lambda.is_partition()) throw DomainError("schur_in_m: index must be a partition");
  QSymExpr out;
  for (const auto& b : compositions_of(lambda.size())) add_term(out.terms, b, QPoly(ssyt_count(lambda, b)));
  return out;
}

QSymExpr to_m(const QSymExpr& g) {
  switch (g.basis) {
    case QSymBasis::M: return g;
    case QSymBasis::F: return f_to_m(g);
    case QSymBasis::Sd: {
      QSymExpr out;
      for (const auto& [a, c] : g.terms) add_scaled(out.terms, dual_immaculate_in_m(a).terms, c);
      return out;
    }
    case QSymBasis::P: {
      QSymExpr out;
      for (const auto& [a, c] : g.terms) add_scaled(out.terms, p_basis_in_m(a).terms, c);
      return out;
    }
  }
  return g;
}

namespace {

// X_alpha in M is M_alpha plus lex-smaller terms: eliminate from the top.
template <class Image>
QSymExpr back_substitute(Terms rem, QSymBasis target, Image&& image) {
  QSymExpr out{target, {}};
  while (!rem.empty()) {
    const Composition beta = rem.rbegin()->first;
    const QPoly c = rem.rbegin()->second;
    add_term(out.terms, beta, c);
    add_scaled(rem, image(beta).terms, -c);
    if (!rem.empty() && rem.rbegin()->first == beta)
      throw std::logic_error("back substitution did not eliminate leading term");
  }
  return out;
}

}  // namespace

QSymExpr to_basis(const QSymExpr& g, QSymBasis target) {
  if (g.basis == target) return g;
  if (!is_homogeneous(g.terms))
    throw DomainError(std::string("conversion to ") + basis_tag(target) + " requires a homogeneous expression");
  QSymExpr m = to_m(g);
  switch (target) {
    case QSymBasis::M: return m;
    case QSymBasis::F: {
      QSymExpr out{QSymBasis::F, {}};
      for (const auto& [a, c] : m.terms) {
        const auto la = static_cast<long>(a.length());
        for (const auto& b : refinements_of(a))
          add_term(out.terms, b, (static_cast<long>(b.length()) - la) % 2 ? -c : c);
      }
      return out;
    }
    case QSymBasis::Sd:
      return back_substitute(std::move(m.terms), QSymBasis::Sd,
                             [](const Composition& b) -> const QSymExpr& { return dual_immaculate_in_m(b); });
    case QSymBasis::P:
      return back_substitute(std::move(m.terms), QSymBasis::P,
                             [](const Composition& b) -> const QSymExpr& { return p_basis_in_m(b); });
  }
  return m;
}

QPoly pairing(const NSymExpr& f, const QSymExpr& g) {
  NSymExpr h = to_h(f);
  QSymExpr m = to_m(g);
  QPoly out;
  for (const auto& [a, c] : h.terms) {
    auto it = m.terms.find(a);
    if (it != m.terms.end()) out += c * it->second;
  }
  return out;
}

QSymExpr schur_to_dual_immaculate(const Composition& lambda) {
  if (!lambda.is_partition()) throw DomainError("schur_to_dual_immaculate: index must be a partition");
  const std::size_t k = lambda.length();
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 1);
  QSymExpr out{QSymBasis::Sd, {}};
  do {
    std::vector<int> idx(k);
    bool positive = true;
    for (std::size_t i = 0; i < k && positive; ++i) {
      idx[i] = lambda[static_cast<std::size_t>(sigma[i] - 1)] + static_cast<int>(i + 1) - sigma[i];
      positive = idx[i] > 0;
    }
    if (!positive) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += sigma[i] > sigma[j];
    add_term(out.terms, Composition(idx), QPoly(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Terms sstar_to_schur_projection(const QSymExpr& g) {
  QSymExpr sd = to_basis(g, QSymBasis::Sd);
  Terms out;
  for (const auto& [a, c] : sd.terms)
    if (a.is_partition()) out.emplace(a, c);
  return out;
}

namespace {

const NSymExpr& cached_perp_h(int i, const Composition& beta) {
  static std::mutex mu;
  static std::map<std::pair<int, Composition>, NSymExpr> cache;
  const auto key = std::make_pair(i, beta);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  NSymExpr value = perp_on_immaculate_h(i, IntTuple::of(beta));
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

QSymExpr f_times_dual_immaculate(int i, const Composition& alpha) {
  if (i < 0) throw DomainError("f_times_dual_immaculate: negative degree");
  QSymExpr out{QSymBasis::Sd, {}};
  if (i == 0) return QSymExpr::element(QSymBasis::Sd, alpha);
  for (const auto& b : compositions_of(alpha.size() + i))
    add_term(out.terms, b, cached_perp_h(i, b).coefficient(alpha));
  return out;
}

TransitionMatrix schur_to_dual_immaculate_matrix(int n) {
  if (n < 1) throw DomainError("schur_to_dual_immaculate_matrix: n must be positive");
  TransitionMatrix t;
  t.from = "s";
  t.to = "Sd";
  t.n = n;
  t.rows = partitions_of(n);
  t.cols = compositions_of(n);
  for (const auto& l : t.rows) {
    QSymExpr e = schur_to_dual_immaculate(l);
    std::vector<QPoly> row;
    for (const auto& a : t.cols) row.push_back(e.coefficient(a));
    t.entries.push_back(std::move(row));
  }
  return t;
}

TransitionMatrix transition_matrix(int n, QSymBasis from, QSymBasis to) {
  if (n < 1) throw DomainError("transition_matrix: n must be positive");
  TransitionMatrix t;
  t.from = basis_tag(from);
  t.to = basis_tag(to);
  t.n = n;
  t.rows = compositions_of(n);
  t.cols = t.rows;
  for (const auto& b : t.rows) {
    QSymExpr img = to_basis(QSymExpr::element(from, b), to);
    std::vector<QPoly> row;
    for (const auto& a : t.cols) row.push_back(img.coefficient(a));
    t.entries.push_back(std::move(row));
  }
  return t;
}

}  // namespace ncsf
