#pragma once

#include <map>
#include <optional>

#include "composition.hpp"
#include "qpoly.hpp"

namespace ncsf {

// Sparse linear combination indexed by compositions, ordered by (size, lex).
// Zero coefficients are never stored.
using Terms = std::map<Composition, QPoly>;

inline void add_term(Terms& t, const Composition& index, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

inline void add_scaled(Terms& dst, const Terms& src, const QPoly& c) {
  if (c.is_zero()) return;
  const bool unit = c == QPoly(1);
  for (const auto& [k, v] : src) add_term(dst, k, unit ? v : v * c);
}

inline QPoly coefficient_of(const Terms& t, const Composition& index) {
  auto it = t.find(index);
  return it == t.end() ? QPoly() : it->second;
}

// Common size of all indices; nullopt when inhomogeneous. The zero
// combination reports nullopt as well.
inline std::optional<int> homogeneous_degree(const Terms& t) {
  if (t.empty()) return std::nullopt;
  const int d = t.begin()->first.size();
  return t.rbegin()->first.size() == d ? std::optional<int>(d) : std::nullopt;
}

inline bool is_homogeneous(const Terms& t) { return t.empty() || homogeneous_degree(t).has_value(); }

inline int max_degree(const Terms& t) { return t.empty() ? 0 : t.rbegin()->first.size(); }

inline Terms specialize_q(const Terms& t, long v) {
  Terms out;
  for (const auto& [k, c] : t) add_term(out, k, QPoly(c.eval(v)));
  return out;
}

inline bool q_free(const Terms& t) {
  for (const auto& [k, c] : t)
    if (!c.is_constant()) return false;
  return true;
}

}  // namespace ncsf
