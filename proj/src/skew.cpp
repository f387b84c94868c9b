#include "skew.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"
#include "nsym.hpp"

namespace ncsf {

static std::string bracketed(const Composition& c) {
  return "[" + (c.empty() ? std::string() : c.to_string()) + "]";
}

std::vector<std::pair<int, Composition>> poset_covers(const Composition& alpha) {
  std::vector<std::pair<int, Composition>> out;
  const std::size_t l = alpha.length();
  for (std::size_t m = 0; m < l; ++m) {
    std::vector<int> parts = alpha.parts();
    if (parts[m] >= 2) {
      --parts[m];
    } else if (m + 1 == l) {
      parts.pop_back();
    } else {
      continue;
    }
    out.emplace_back(static_cast<int>(m) + 1, Composition(std::move(parts)));
  }
  return out;
}

std::vector<Composition> PosetPath::chain() const {
  std::vector<Composition> out{start};
  for (int m : steps) {
    const auto covers = poset_covers(out.back());
    auto it = std::find_if(covers.begin(), covers.end(), [&](const auto& c) { return c.first == m; });
    if (it == covers.end()) throw DomainError("path step " + std::to_string(m) + " is not a cover");
    out.push_back(it->second);
  }
  return out;
}

std::string PosetPath::to_string() const {
  const auto c = chain();
  std::string s = bracketed(c[0]);
  for (std::size_t i = 0; i < steps.size(); ++i) s += " -" + std::to_string(steps[i]) + "-> " + bracketed(c[i + 1]);
  return s;
}

namespace {

bool can_reach(const Composition& cur, const Composition& beta) {
  if (cur.length() < beta.length() || cur.size() < beta.size()) return false;
  for (std::size_t j = 0; j < beta.length(); ++j)
    if (cur[j] < beta[j]) return false;
  return true;
}

}  // namespace

std::vector<PosetPath> enumerate_paths(const Composition& alpha, const Composition& beta) {
  std::vector<PosetPath> out;
  std::vector<int> word;
  std::function<void(const Composition&)> dfs = [&](const Composition& cur) {
    if (cur.size() == beta.size()) {
      if (cur == beta) out.push_back(PosetPath{alpha, word, beta});
      return;
    }
    for (const auto& [m, next] : poset_covers(cur)) {
      if (!can_reach(next, beta)) continue;
      word.push_back(m);
      dfs(next);
      word.pop_back();
    }
  };
  if (can_reach(alpha, beta)) dfs(alpha);
  return out;
}

Composition word_descent_composition(const std::vector<int>& word) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) d.insert(static_cast<int>(i) + 1);
  return composition_from_descents(d, static_cast<int>(word.size()));
}

Composition path_descent_composition(const PosetPath& p) { return word_descent_composition(p.steps).reversed(); }

QSymExpr skew_dual_immaculate(const Composition& alpha, const Composition& beta, QSymBasis target) {
  if (beta.size() > alpha.size()) return QSymExpr::zero(target);
  const int k = alpha.size() - beta.size();
  switch (target) {
    case QSymBasis::M:
    case QSymBasis::Sd: {
      // coefficient of S_alpha in S_beta X_gamma, X = H or S
      const NSymExpr sb = NSymExpr::element(NSymBasis::S, beta);
      const NSymBasis factor = target == QSymBasis::M ? NSymBasis::H : NSymBasis::S;
      QSymExpr out{target, {}};
      for (const auto& g : compositions_of(k)) {
        NSymExpr prod = product(sb, NSymExpr::element(factor, g));
        add_term(out.terms, g, prod.coefficient(alpha));
      }
      return out;
    }
    case QSymBasis::F:
    case QSymBasis::P: {
      QSymExpr out{QSymBasis::F, {}};
      for (const auto& p : enumerate_paths(alpha, beta)) add_term(out.terms, path_descent_composition(p), QPoly(1));
      return to_basis(out, target);
    }
  }
  return QSymExpr::zero(target);
}

}  // namespace ncsf
