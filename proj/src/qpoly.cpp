#include "qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "errors.hpp"

namespace ncsf {

QPoly::QPoly(long c) : QPoly(Integer(c)) {}

QPoly::QPoly(Integer c) {
  if (c != 0) terms_.emplace_back(0u, std::move(c));
}

QPoly QPoly::monomial(Integer c, unsigned exponent) {
  QPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, std::move(c));
  return p;
}

QPoly QPoly::one_minus_q_power(unsigned k) {
  // Binomial row with alternating signs.
  QPoly p;
  Integer b = 1;
  for (unsigned i = 0; i <= k; ++i) {
    p.terms_.emplace_back(i, (i % 2 == 0) ? b : Integer(-b));
    b = b * (k - i) / (i + 1);
  }
  return p;
}

Integer QPoly::constant_term() const { return coefficient(0); }

Integer QPoly::coefficient(unsigned exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, unsigned e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

bool QPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.second) > 0; });
}

Integer QPoly::eval(const Integer& v) const {
  // Horner from the top exponent down.
  Integer acc = 0;
  int e = degree();
  auto it = terms_.rbegin();
  for (; e >= 0; --e) {
    acc *= v;
    if (it != terms_.rend() && static_cast<int>(it->first) == e) {
      acc += it->second;
      ++it;
    }
  }
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void QPoly::add_scaled(const QPoly& o, int sign) {
  if (o.terms_.empty()) return;
  if (terms_.empty()) {
    terms_ = o.terms_;
    if (sign < 0)
      for (auto& t : terms_) t.second = -t.second;
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign < 0 ? Integer(-b->second) : b->second);
      ++b;
    } else {
      Integer c = sign < 0 ? Integer(a->second - b->second) : Integer(a->second + b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  add_scaled(o, 1);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  add_scaled(o, -1);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return QPoly(a) *= b.terms_[0].second;
  if (a.is_constant()) return QPoly(b) *= a.terms_[0].second;
  const int deg = a.degree() + b.degree();
  std::vector<Integer> dense(static_cast<std::size_t>(deg) + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb] += ca * cb;
  QPoly r;
  for (std::size_t e = 0; e < dense.size(); ++e)
    if (dense[e] != 0) r.terms_.emplace_back(static_cast<unsigned>(e), std::move(dense[e]));
  return r;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

struct PolyLexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad polynomial '" + std::string(s) + "': " + what);
  }
};

}  // namespace

QPoly QPoly::parse(std::string_view text) {
  PolyLexer lx{text};
  if (lx.at_end()) lx.fail("empty");
  std::map<unsigned, Integer> acc;
  bool first = true;
  while (!lx.at_end()) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (!lx.accept('+') && !first) {
      lx.fail("expected '+' or '-' at offset " + std::to_string(lx.pos));
    }
    first = false;
    Integer coef = 1;
    bool have_coef = false;
    if (lx.peek_digit()) {
      coef = Integer(lx.digits());
      have_coef = true;
      lx.accept('*');
    }
    unsigned exponent = 0;
    if (lx.accept('q')) {
      exponent = 1;
      if (lx.accept('^')) {
        if (!lx.peek_digit()) lx.fail("missing exponent");
        exponent = static_cast<unsigned>(std::stoul(lx.digits()));
      }
    } else if (!have_coef) {
      lx.fail("expected a term at offset " + std::to_string(lx.pos));
    }
    acc[exponent] += sign * coef;
  }
  QPoly p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) { return a * b; }

Integer qpoly_eval(const QPoly& p, long v) { return p.eval(v); }

QPoly one_minus_q_power(unsigned k) { return QPoly::one_minus_q_power(k); }

}  // namespace ncsf
