// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "nsym.hpp"
#include "qsym.hpp"
#include "skew.hpp"
#include "sym.hpp"
#include "tableaux.hpp"
#include "text.hpp"

using namespace ncsf;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

NSymExpr nsym(const char* s) { return std::get<NSymExpr>(parse_expression(s)); }
QSymExpr qsym(const char* s) { return std::get<QSymExpr>(parse_expression(s)); }
SymExpr sym(const char* s) { return std::get<SymExpr>(parse_expression(s)); }
NSymExpr H(const Composition& a) { return NSymExpr::element(NSymBasis::H, a); }
NSymExpr in_s(const NSymExpr& e) { return to_basis(e, NSymBasis::S); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Non-negative integer matrices with row sums rows and column sums cols[c..].
long count_matrices(std::vector<int> rows, const std::vector<int>& cols, std::size_t c) {
  if (c == cols.size()) {
    for (int r : rows)
      if (r) return 0;
    return 1;
  }
  long total = 0;
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int left) {
    if (r == rows.size()) {
      if (left == 0) total += count_matrices(rows, cols, c + 1);
      return;
    }
    for (int take = 0; take <= std::min(left, rows[r]); ++take) {
      rows[r] -= take;
      fill(r + 1, left - take);
      rows[r] += take;
    }
  };
  fill(0, cols[c]);
  return total;
}

Outcome golden(const std::string& dir) {
  Outcome o;
  using B = NSymBasis;
  const std::pair<B, B> pairs[] = {{B::H, B::S},  {B::S, B::H},  {B::R, B::S},  {B::S, B::R},  {B::Qp, B::S},
                                   {B::S, B::Qp}, {B::Qp, B::H}, {B::H, B::Qp}, {B::Qp, B::R}, {B::R, B::Qp}};
  std::vector<TransitionMatrix> ms;
  for (const auto& [a, b] : pairs) ms.push_back(transition_matrix(4, a, b));
  ms.push_back(schur_to_dual_immaculate_matrix(4));
  for (const auto& m : ms) {
    const std::string file = m.from + "_to_" + m.to + "_n4.txt";
    const std::string want = slurp(dir + "/" + file);
    o.expect(!want.empty(), "missing fixture " + file);
    o.expect(m.to_text() == want, file + " differs");
  }
  o.note = o.ok ? "11 matrices byte-identical" : o.note;
  return o;
}

Outcome hook_formula() {
  Outcome o;
  std::size_t cases = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& a : compositions_of(n)) {
      ++cases;
      o.expect(count_standard_hook(a) == static_cast<unsigned long>(enumerate_standard(a).size()),
               "mismatch at " + a.to_string());
    }
  o.expect(count_standard_hook(Composition::parse("4,2,3")) == 224, "[4,2,3] is not 224");
  if (o.ok) o.note = std::to_string(cases) + " compositions, [4,2,3] -> 224";
  return o;
}

Outcome pieri_equivalence() {
  Outcome o;
  for (int total = 1; total <= 8; ++total)
    for (int s = 1; s <= total; ++s)
      for (const auto& a : compositions_of(total - s)) {
        const NSymExpr hs = H({s});
        o.expect(pieri_immaculate(a, s) == in_s(h_product(immaculate_in_h(a), hs)), "S pieri at " + a.to_string());
        o.expect(pieri_hl(a, s) == to_basis(h_product(qprime_in_h(a), hs), NSymBasis::Qp),
                 "Qp pieri at " + a.to_string());
      }
  o.expect(pieri_immaculate({2, 3}, 3) == nsym("S[2,3,3] + S[2,4,2] + S[2,5,1] + S[2,6] + S[3,3,2] + S[3,4,1] + "
                                               "S[3,5] + S[4,3,1] + S[4,4] + S[5,3]"),
           "S[2,3]*H[3]");
  o.expect(pieri_hl({2, 3}, 3) ==
               nsym("Qp[2,3,3] + (1-q)*Qp[2,4,2] + (1-q)*Qp[2,5,1] + (1-q)*Qp[2,6] + (1-q)*Qp[3,3,2] + "
                    "(1-2*q+q^2)*Qp[3,4,1] + (1-2*q+q^2)*Qp[3,5] + (1-q)*Qp[4,3,1] + (1-2*q+q^2)*Qp[4,4] + "
                    "(1-q)*Qp[5,3]"),
           "Qp[2,3]*H[3]");
  if (o.ok) o.note = "|alpha|+s <= 8, both ten-term examples";
  return o;
}

Outcome projection() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) o.expect(verify_projection(n).passed(), "chi(S) != s at n=" + std::to_string(n));
  auto chi_s = [](const char* a) { return to_basis(chi(nsym(a)), SymBasis::s); };
  o.expect(chi_s("S[1,3]") == sym("-s[2,2]"), "chi(S[1,3])");
  o.expect(chi_s("S[1,1,2]").is_zero(), "chi(S[1,1,2])");
  o.expect(chi_s("S[1,3,2,1,3]") == sym("s[2,2,2,2,2]"), "chi(S[1,3,2,1,3])");
  if (o.ok) o.note = "n <= 7 plus three examples";
  return o;
}

Outcome ribbons() {
  Outcome o;
  o.expect(to_basis(nsym("R[2,2,2]"), NSymBasis::S) ==
               nsym("S[2,2,2] + S[2,3,1] + S[3,1,2] + 2*S[3,2,1] + S[3,3] + S[4,1,1] + S[4,2]"),
           "R[2,2,2]");
  for (int n = 1; n <= 7; ++n) {
    const TransitionMatrix m = transition_matrix(n, NSymBasis::R, NSymBasis::S);
    for (const auto& row : m.entries)
      for (const auto& e : row) o.expect(e.nonnegative(), "negative entry in M(R,S) n=" + std::to_string(n));
  }
  if (o.ok) o.note = "R[2,2,2] and M(R,S) n <= 7";
  return o;
}

Outcome dual_side() {
  Outcome o;
  o.expect(schur_to_dual_immaculate({2, 2, 2, 1}) == qsym("Sd[2,2,2,1] - Sd[1,3,2,1] - Sd[2,1,3,1] + Sd[1,1,4,1]"),
           "s[2,2,2,1]");
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      o.expect(to_m(schur_to_dual_immaculate(l)) == schur_in_m(l), "M expansion of s" + l.to_string());
  QSymExpr h22 = QSymExpr::zero();
  for (const auto& b : compositions_of(4))
    h22 += QSymExpr::element(QSymBasis::M, b, QPoly(count_matrices({2, 2}, b.parts(), 0)));
  const QSymExpr h22_sd = to_basis(h22, QSymBasis::Sd);
  o.expect(h22_sd == qsym("Sd[2,2] - Sd[1,3] + Sd[3,1] + Sd[4]"), "h[2,2] in Sd");
  o.expect(SymExpr{SymBasis::s, sstar_to_schur_projection(h22_sd)} == sym("s[2,2] + s[3,1] + s[4]"),
           "h[2,2] Schur recovery");
  if (o.ok) o.note = "s[2,2,2,1], partitions n <= 7, h[2,2]";
  return o;
}

Outcome hall_littlewood() {
  Outcome o;
  auto qp = [](const char* a) { return in_s(nsym(a)); };
  o.expect(qp("Qp[4,2]") == nsym("S[4,2] + q*S[5,1] + q^2*S[6]"), "Qp[4,2]");
  o.expect(qp("Qp[1,1,1,1]") == nsym("S[1,1,1,1] + q*S[1,1,2] + (q+q^2)*S[1,2,1] + q^3*S[1,3] + "
                                     "(q+q^2+q^3)*S[2,1,1] + (q^2+q^3+q^4)*S[2,2] + (q^3+q^4+q^5)*S[3,1] + q^6*S[4]"),
           "Qp[1,1,1,1]");
  o.expect(qp("Qp[3,3,1]") == nsym("S[3,3,1] + q*S[3,4] + q*S[4,2,1] + (q^2+q)*S[4,3] + q^2*S[5,1,1] + "
                                   "(q^3+q^2)*S[5,2] + (q^4+q^3)*S[6,1] + q^5*S[7]"),
           "Qp[3,3,1]");
  // Qp[1,1,3]: S[1,4] and S[3,1,1] are covered by the Schur image.
  const NSymExpr q113 = qp("Qp[1,1,3]");
  const NSymExpr expected = nsym("S[1,1,3] + q*S[1,2,2] + q^2*S[1,3,1] + q^2*S[2,1,2] + (q^3+q^2-q)*S[2,2,1] + "
                                "(q^4+q^3)*S[2,3] + (q^5+q^4+q^3-q^2)*S[3,2] + (q^6+q^5)*S[4,1] + q^7*S[5]");
  for (const auto& [a, c] : expected.terms) o.expect(q113.coefficient(a) == c, "Qp[1,1,3] at " + a.to_string());
  o.expect(q113.terms.size() == 11, "Qp[1,1,3] term count");
  o.expect(to_basis(chi(q113), SymBasis::s) ==
               sym("(q^3-q)*s[2,2,1] + q^4*s[3,1,1] + (q^5+q^4-q^2)*s[3,2] + (q^6+q^5)*s[4,1] + q^7*s[5]"),
           "chi(Qp[1,1,3])");
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      const NSymExpr& h = qprime_in_h(a);
      o.expect(NSymExpr{NSymBasis::H, specialize_q(h.terms, 0)} == immaculate_in_h(a), "q=0 at " + a.to_string());
      o.expect(NSymExpr{NSymBasis::H, specialize_q(h.terms, 1)} == H(a), "q=1 at " + a.to_string());
    }
  for (int n = 1; n <= 7; ++n)
    for (const auto& r : hl_identities_check(n)) o.expect(r.passed, r.name);
  const QPoly x = QPoly::parse("1-q");
  o.expect(to_basis(H({3, 1, 2, 3}), NSymBasis::Qp).coefficient({4, 2, 3}) == x + x * x + QPoly(3) * x * x * x,
           "H[3,1,2,3] coefficient of Qp[4,2,3]");
  if (o.ok) o.note = "four expansions, q=0/1 n <= 6, identities n <= 7, H[3,1,2,3]";
  return o;
}

Outcome conjectures() {
  Outcome o;
  const CheckReport pos = check_hl_positivity(8);
  const CheckReport left = check_left_pieri(7);
  const CheckReport dual = check_dual_pieri(7);
  o.expect(pos.passed, "hl-positivity has counterexamples");
  o.expect(pos.seconds < 300, "hl-positivity slower than 5 min");
  o.expect(left.passed, "left-pieri has counterexamples");
  o.expect(dual.passed, "dual-pieri has counterexamples");
  o.expect(in_s(h_product(H({1}), immaculate_in_h({1, 3}))) == nsym("S[1,1,3] - S[2,2,1] - S[3,2]"), "H[1]*S[1,3]");
  o.expect(f_times_dual_immaculate(2, {2, 1, 2}) ==
               qsym("-Sd[1,3,1,2] - Sd[1,4,2] + Sd[2,2,1,2] + Sd[3,1,1,2] + Sd[3,2,2] + Sd[4,1,2]"),
           "F[2]*Sd[2,1,2]");
  if (o.ok)
    o.note = "hl-positivity n <= 8 (" + std::to_string(pos.cases) + "), left-pieri and dual-pieri n <= 7 (" +
             std::to_string(left.cases) + ", " + std::to_string(dual.cases) + ")";
  return o;
}

Outcome skew() {
  Outcome o;
  const Composition a{1, 3, 2}, b{1, 1};
  o.expect(enumerate_paths(a, b).size() == 6, "path count");
  o.expect(skew_dual_immaculate(a, b, QSymBasis::F) == qsym("F[1,2,1] + F[1,3] + 2*F[2,2] + F[3,1] + F[4]"),
           "F expansion");
  o.expect(skew_dual_immaculate(a, b, QSymBasis::Sd) == qsym("-Sd[1,3] + Sd[2,2] + Sd[3,1] + Sd[4]"),
           "Sd expansion");
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : compositions_of(n))
      o.expect(count_standard_hook(c) == static_cast<unsigned long>(enumerate_paths(c, {}).size()),
               "paths to empty at " + c.to_string());
  if (o.ok) o.note = "[1,3,2]/[1,1] and path counts n <= 7";
  return o;
}

Outcome products() {
  Outcome o;
  const NSymExpr p = product(nsym("S[1,2]"), nsym("S[3,1]"));
  o.expect(p == nsym("S[1,2,3,1] + S[1,3,2,1] + S[1,3,3] + S[1,4,1,1] + S[1,4,2] + S[1,5,1] + S[2,2,2,1] + "
                     "S[2,2,3] + S[2,3,1,1] + 2*S[2,3,2] + 2*S[2,4,1] + S[2,5] + S[3,2,1,1] + S[3,2,2] + "
                     "2*S[3,3,1] + S[3,4] + S[4,2,1] + S[4,3]"),
           "S[1,2]*S[3,1]");
  o.expect(product(nsym("S[1,1]"), nsym("S[1,3,1,3]")).coefficient({1, 3, 2, 1, 3}) == QPoly(-1),
           "S[1,1]*S[1,3,1,3] at S[1,3,2,1,3]");
  if (o.ok) o.note = "18-term expansion and coefficient -1";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s GOLDEN_DIR\n", argv[0]);
    return 2;
  }
  const std::string dir = argv[1];
  struct Criterion {
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden matrices", 1, [&] { return golden(dir); }},
      {"hook formula", 30, hook_formula},
      {"pieri equivalence", 120, pieri_equivalence},
      {"projection", 0, projection},
      {"ribbon positivity", 0, ribbons},
      {"dual side", 0, dual_side},
      {"hall-littlewood structure", 0, hall_littlewood},
      {"conjecture suites", 0, conjectures},
      {"skew", 0, skew},
      {"product ledger", 0, products},
  };
  int failed = 0;
  int k = 0;
  for (const auto& c : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.ok = false;
      o.note = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s";
    }
    failed += !o.ok;
    std::printf("%s %2d %-26s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", k, c.name, secs, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", k - failed, k);
  return failed ? 1 : 0;
}
