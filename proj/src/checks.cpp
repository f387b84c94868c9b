#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "nsym.hpp"
#include "qsym.hpp"
#include "sym.hpp"
#include "tableaux.hpp"
#include "text.hpp"

namespace ncsf {

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << name << " (" << range << "): " << (passed ? "PASS" : "FAIL") << ", " << cases << " cases, ";
  os.setf(std::ios::fixed);
  os.precision(3);
  os << seconds << " s\n";
  for (const auto& c : counterexamples) os << "  n=" << c.n << " " << c.index << ": " << c.lhs << " vs " << c.rhs << "\n";
  return os.str();
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j{{"name", name}, {"range", range}, {"passed", passed}, {"cases", cases}, {"seconds", seconds}};
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples)
    j["counterexamples"].push_back({{"n", c.n}, {"index", c.index}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return j;
}

namespace {

std::string idx(const char* letter, const Composition& a) {
  return std::string(letter) + "[" + (a.empty() ? std::string() : a.to_string()) + "]";
}

// Runs body, times it and normalizes the counterexample order.
CheckReport timed(std::string name, std::string range, const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.name = std::move(name);
  r.range = std::move(range);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::sort(r.counterexamples.begin(), r.counterexamples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.index) < std::tie(b.n, b.index);
  });
  r.passed = r.counterexamples.empty();
  return r;
}

void require_positive(int max_n) {
  if (max_n < 1) throw DomainError("max-n must be positive");
}

bool unit_coefficients(const Terms& t) {
  return std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second == QPoly(1) || kv.second == QPoly(-1); });
}

}  // namespace

CheckReport check_hl_positivity(int max_n) {
  require_positive(max_n);
  return timed("hl-positivity", "partitions of n <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& l : partitions_of(n)) {
        ++r.cases;
        NSymExpr e = to_basis(NSymExpr::element(NSymBasis::Qp, l), NSymBasis::S);
        for (const auto& [a, c] : e.terms)
          if (!c.nonnegative()) {
            r.counterexamples.push_back({n, idx("Qp", l), "(" + c.to_string() + ")*" + idx("S", a), "non-negative in q"});
            break;
          }
      }
  });
}

CheckReport check_left_pieri(int max_n) {
  require_positive(max_n);
  return timed("left-pieri", "m + |alpha| <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (int m = 1; m <= n; ++m) {
        const NSymExpr hm = NSymExpr::element(NSymBasis::H, {m});
        for (const auto& a : compositions_of(n - m)) {
          ++r.cases;
          NSymExpr p = to_basis(h_product(hm, immaculate_in_h(a)), NSymBasis::S);
          if (!unit_coefficients(p.terms))
            r.counterexamples.push_back({n, idx("H", {m}) + "*" + idx("S", a), render(p), "coefficients in {-1,0,1}"});
        }
      }
  });
}

CheckReport check_dual_pieri(int max_n) {
  require_positive(max_n);
  return timed("dual-pieri", "i + |alpha| <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (int i = 1; i <= n; ++i)
        for (const auto& a : compositions_of(n - i)) {
          ++r.cases;
          QSymExpr p = f_times_dual_immaculate(i, a);
          if (!unit_coefficients(p.terms))
            r.counterexamples.push_back({n, "F[" + std::to_string(i) + "]*" + idx("Sd", a), render(p),
                                         "coefficients in {-1,0,1}"});
        }
  });
}

CheckReport check_hl_identities(int max_n) {
  require_positive(max_n);
  return timed("hl-identities", "n <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& res : hl_identities_check(n)) {
        ++r.cases;
        if (!res.passed) r.counterexamples.push_back({n, res.name, res.detail, "equal"});
      }
  });
}

CheckReport check_projection(int max_n) {
  require_positive(max_n);
  return timed("projection", "compositions of n <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n) {
      ProjectionReport p = verify_projection(n);
      r.cases += p.checked;
      for (const auto& a : p.failures)
        r.counterexamples.push_back({n, idx("S", a), render(chi(NSymExpr::element(NSymBasis::S, a))),
                                     render(schur_jacobi_trudi(IntTuple::of(a)))});
    }
  });
}

CheckReport check_right_pieri(int max_n) {
  require_positive(max_n);
  return timed("right-pieri", "|alpha| + s <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (int s = 1; s <= n; ++s)
        for (const auto& a : compositions_of(n - s)) {
          ++r.cases;
          NSymExpr rule = pieri_immaculate(a, s);
          NSymExpr alg = to_basis(h_product(immaculate_in_h(a), NSymExpr::element(NSymBasis::H, {s})), NSymBasis::S);
          if (rule != alg) r.counterexamples.push_back({n, idx("S", a) + "*" + idx("H", {s}), render(rule), render(alg)});
        }
  });
}

CheckReport check_hl_pieri(int max_n) {
  require_positive(max_n);
  return timed("hl-pieri", "|alpha| + s <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (int s = 1; s <= n; ++s)
        for (const auto& a : compositions_of(n - s)) {
          ++r.cases;
          NSymExpr rule = pieri_hl(a, s);
          NSymExpr alg = to_basis(h_product(qprime_in_h(a), NSymExpr::element(NSymBasis::H, {s})), NSymBasis::Qp);
          if (rule != alg) r.counterexamples.push_back({n, idx("Qp", a) + "*" + idx("H", {s}), render(rule), render(alg)});
        }
  });
}

CheckReport check_hook_length(int max_n) {
  require_positive(max_n);
  return timed("hook-length", "compositions of n <= " + std::to_string(max_n), [&](CheckReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& a : compositions_of(n)) {
        ++r.cases;
        const Integer formula = count_standard_hook(a);
        const Integer brute = static_cast<unsigned long>(enumerate_standard(a).size());
        if (formula != brute) r.counterexamples.push_back({n, idx("", a), formula.get_str(), brute.get_str()});
      }
  });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"hl-positivity", "left-pieri", "dual-pieri", "hl-identities",
                                              "projection",    "right-pieri", "hl-pieri",  "hook-length"};
  return names;
}

CheckReport run_check(std::string_view name, int max_n) {
  static const std::map<std::string, CheckReport (*)(int), std::less<>> table{
      {"hl-positivity", check_hl_positivity}, {"left-pieri", check_left_pieri},
      {"dual-pieri", check_dual_pieri},       {"hl-identities", check_hl_identities},
      {"projection", check_projection},       {"right-pieri", check_right_pieri},
      {"hl-pieri", check_hl_pieri},           {"hook-length", check_hook_length}};
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown check '" + std::string(name) + "'");
  return it->second(max_n);
}

}  // namespace ncsf
