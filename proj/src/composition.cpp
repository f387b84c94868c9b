#include "composition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>

#include "errors.hpp"

namespace ncsf {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw DomainError("composition parts must be positive, got " + std::to_string(p));
    size_ += p;
  }
}

Composition Composition::from_weak(const std::vector<int>& entries) {
  std::vector<int> out;
  out.reserve(entries.size());
  for (int e : entries) {
    if (e < 0) throw DomainError("negative entry in weak composition");
    if (e > 0) out.push_back(e);
  }
  return Composition(std::move(out));
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::sorted_descending() const {
  auto v = parts_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Composition(std::move(v));
}

Composition Composition::concat(const Composition& o) const {
  auto v = parts_;
  v.insert(v.end(), o.parts_.begin(), o.parts_.end());
  Composition c;
  c.parts_ = std::move(v);
  c.size_ = size_ + o.size_;
  return c;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

std::string Composition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

std::vector<int> parse_int_list(std::string_view text, bool allow_negative, const char* what) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError(std::string("unbalanced bracket in ") + what);
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  const bool has_sep = text.find(',') != std::string_view::npos;
  if (!has_sep) {
    // Run of single digits ("423"), as compositions are often written.
    bool all_digits = std::all_of(text.begin(), text.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) && c != '0';
    });
    if (all_digits && text.size() > 1) {
      for (char c : text) out.push_back(c - '0');
      return out;
    }
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = trim(text.substr(pos, next - pos));
    if (tok.empty()) throw ParseError(std::string("empty entry in ") + what + " '" + std::string(text) + "'");
    std::size_t i = 0;
    bool neg = false;
    if (tok[0] == '-' || tok[0] == '+') {
      neg = tok[0] == '-';
      i = 1;
    }
    if (i >= tok.size()) throw ParseError(std::string("bad entry in ") + what);
    long v = 0;
    for (; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw ParseError(std::string("bad entry '") + std::string(tok) + "' in " + what);
      v = v * 10 + (tok[i] - '0');
      if (v > 1'000'000) throw ParseError(std::string("entry too large in ") + what);
    }
    if (neg) v = -v;
    if (!allow_negative && v <= 0)
      throw ParseError(std::string("composition parts must be positive: '") + std::string(tok) + "'");
    out.push_back(static_cast<int>(v));
    pos = next + 1;
  }
  return out;
}

}  // namespace

Composition Composition::parse(std::string_view text) {
  return Composition(parse_int_list(text, false, "composition"));
}

int IntTuple::sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

bool IntTuple::is_composition() const {
  return std::all_of(entries.begin(), entries.end(), [](int e) { return e > 0; });
}

Composition IntTuple::to_composition() const { return Composition(entries); }

std::string IntTuple::to_string() const {
  if (entries.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  return s;
}

IntTuple IntTuple::parse(std::string_view text) { return IntTuple{parse_int_list(text, true, "integer tuple")}; }

namespace {

void build_compositions(int n, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    prefix.push_back(first);
    build_compositions(n - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Composition>& compositions_of(int n) {
  if (n < 0) throw DomainError("compositions_of: negative size");
  static std::mutex mu;
  static std::map<int, std::vector<Composition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Composition> out;
    std::vector<int> prefix;
    build_compositions(n, prefix, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

std::vector<Composition> partitions_of(int n) {
  std::vector<Composition> out;
  for (const auto& c : compositions_of(n))
    if (c.is_partition()) out.push_back(c);
  return out;
}

std::set<int> descent_set(const Composition& alpha) {
  std::set<int> d;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    acc += alpha[i];
    d.insert(acc);
  }
  return d;
}

Composition composition_from_descents(const std::set<int>& descents, int n) {
  if (n == 0) {
    if (!descents.empty()) throw DomainError("descents given for n = 0");
    return {};
  }
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n) throw DomainError("descent out of range");
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

bool refines(const Composition& alpha, const Composition& beta) {
  if (alpha.size() != beta.size()) throw DomainError("refines: compositions of different sizes");
  auto da = descent_set(alpha);
  auto db = descent_set(beta);
  return std::includes(da.begin(), da.end(), db.begin(), db.end());
}

namespace {

// Compositions whose descent sets range over all subsets of `base` (when
// shrinking) or all supersets of it within {1..n-1} (when growing).
std::vector<Composition> descent_subsets(const std::vector<int>& free, const std::set<int>& fixed, int n) {
  std::vector<Composition> out;
  const std::size_t k = free.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::set<int> d = fixed;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) d.insert(free[i]);
    out.push_back(composition_from_descents(d, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Composition> refinements_of(const Composition& alpha) {
  auto d = descent_set(alpha);
  std::vector<int> free;
  for (int i = 1; i < alpha.size(); ++i)
    if (!d.count(i)) free.push_back(i);
  return descent_subsets(free, d, alpha.size());
}

std::vector<Composition> coarsenings_of(const Composition& alpha) {
  auto d = descent_set(alpha);
  return descent_subsets(std::vector<int>(d.begin(), d.end()), {}, alpha.size());
}

std::strong_ordering lex_compare(const Composition& alpha, const Composition& beta) {
  if (alpha.size() != beta.size()) throw DomainError("lex_compare: compositions of different sizes");
  return alpha <=> beta;
}

namespace {

void distribute(const Composition& alpha, int remaining, std::size_t row, std::vector<int>& cur,
                std::set<Composition>& out) {
  if (row == alpha.length()) {
    auto parts = cur;
    if (remaining > 0) parts.push_back(remaining);
    out.insert(Composition(std::move(parts)));
    return;
  }
  for (int add = 0; add <= remaining; ++add) {
    cur.push_back(alpha[row] + add);
    distribute(alpha, remaining - add, row + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::set<Composition> pieri_successors(const Composition& alpha, int s) {
  if (s < 0) throw DomainError("pieri_successors: negative s");
  std::set<Composition> out;
  std::vector<int> cur;
  distribute(alpha, s, 0, cur, out);
  return out;
}

bool pieri_contained(const Composition& alpha, const Composition& beta) {
  if (beta.size() < alpha.size()) return false;
  if (beta.length() < alpha.length() || beta.length() > alpha.length() + 1) return false;
  for (std::size_t j = 0; j < alpha.length(); ++j)
    if (alpha[j] > beta[j]) return false;
  return true;
}

std::map<Cell, int> hooks(const Composition& alpha) {
  if (alpha.empty()) throw DomainError("hooks: empty composition");
  std::map<Cell, int> h;
  int suffix = alpha.size();
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    const int row = static_cast<int>(i) + 1;
    h[{row, 1}] = suffix;
    for (int j = 2; j <= alpha[i]; ++j) h[{row, j}] = alpha[i] - j + 1;
    suffix -= alpha[i];
  }
  return h;
}

}  // namespace ncsf
