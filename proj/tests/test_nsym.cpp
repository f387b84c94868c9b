#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "nsym.hpp"
#include "tableaux.hpp"

using namespace ncsf;

namespace {

NSymExpr H(const Composition& a, long c = 1) { return NSymExpr::element(NSymBasis::H, a, QPoly(c)); }
NSymExpr S(const Composition& a, const QPoly& c = QPoly(1)) { return NSymExpr::element(NSymBasis::S, a, c); }
NSymExpr Qp(const Composition& a, const QPoly& c = QPoly(1)) { return NSymExpr::element(NSymBasis::Qp, a, c); }
QPoly P(const char* s) { return QPoly::parse(s); }

constexpr NSymBasis kBases[] = {NSymBasis::H, NSymBasis::R, NSymBasis::S, NSymBasis::Qp};

}  // namespace

TEST_CASE("h product is concatenation") {
  CHECK(h_product(H({2}), H({1, 1})) == H({2, 1, 1}));
  CHECK(h_product(NSymExpr::one(), H({3, 1})) == H({3, 1}));
  CHECK(h_product(H({1}) - H({2}), H({1})) == H({1, 1}) - H({2, 1}));
}

TEST_CASE("Jacobi-Trudi") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      NSymExpr expect = H({a, b});
      if (b > 1) expect -= H({a + 1, b - 1});
      else expect -= H({a + 1});
      CHECK(immaculate_jacobi_trudi(IntTuple{{a, b}}) == expect);
    }
  CHECK(immaculate_jacobi_trudi(IntTuple{{-1}}).is_zero());
  CHECK(immaculate_jacobi_trudi(IntTuple{{0}}) == NSymExpr::one());
  for (int n = 1; n <= 8; ++n) {
    NSymExpr expect;
    for (const auto& a : compositions_of(n)) expect += H(a, (n - static_cast<long>(a.length())) % 2 ? -1 : 1);
    CHECK(immaculate_jacobi_trudi(IntTuple{std::vector<int>(n, 1)}) == expect);
  }
}

TEST_CASE("Jacobi-Trudi agrees with Bernstein operators") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 4), entry(-2, 5);
  for (int trial = 0; trial < 300; ++trial) {
    IntTuple t;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) t.entries.push_back(entry(rng));
    CHECK(immaculate_jacobi_trudi(t) == immaculate_via_bernstein(t));
  }
}

TEST_CASE("Bernstein operators") {
  CHECK(bernstein_apply(2, H({3})) == H({2, 3}) - H({3, 2}));
  CHECK(bernstein_apply(4, NSymExpr::one()) == H({4}));
  CHECK(bernstein_apply(1, bernstein_apply(1, NSymExpr::one())) == H({1, 1}) - H({2}));
}

TEST_CASE("perp operators") {
  CHECK(perp_e(2, H({2, 1, 1, 2})) == H({2, 2}) + H({2, 1, 1}, 2) + H({1, 1, 2}, 2) + H({1, 1, 1, 1}));
  CHECK(perp_e(1, H({5})) == H({4}));
  CHECK(perp_e(2, H({3})).is_zero());
  CHECK(perp_h(2, H({2, 1, 1, 2})) == H({1, 1, 1, 1}) + H({1, 1, 2}, 3) + H({2, 1, 1}, 3) + H({2, 2}));
  CHECK(perp_h(0, H({2, 1})) == H({2, 1}));
  CHECK(perp_h(3, H({2})).is_zero());
  CHECK(perp_m({}, H({2, 1})) == H({2, 1}));
  CHECK(perp_m({1, 1}, H({1, 1})) == NSymExpr::one());
  CHECK(perp_m({2}, H({1, 1})).is_zero());
  // F_k^perp = sum over compositions gamma of k of M_gamma^perp, F_{1^k}^perp = M_{1^k}^perp
  for (int n = 1; n <= 6; ++n)
    for (const auto& b : compositions_of(n))
      for (int k = 0; k <= n; ++k) {
        NSymExpr sum;
        for (const auto& g : compositions_of(k)) sum += perp_m(g, H(b));
        CHECK(perp_h(k, H(b)) == sum);
        CHECK(perp_e(k, H(b)) == perp_m(Composition(std::vector<int>(k, 1)), H(b)));
      }
  CHECK_THROWS_AS(perp_e(1, S({1})), DomainError);
}

TEST_CASE("conversion examples") {
  CHECK(to_basis(H({3, 1, 2, 3}), NSymBasis::S).coefficient({4, 2, 3}) == QPoly(5));
  NSymExpr r = to_basis(NSymExpr::element(NSymBasis::R, {2, 2, 2}), NSymBasis::S);
  CHECK(r == S({2, 2, 2}) + S({2, 3, 1}) + S({3, 1, 2}) + S({3, 2, 1}, 2) + S({3, 3}) + S({4, 1, 1}) + S({4, 2}));
  NSymExpr q113 = to_basis(Qp({1, 1, 3}), NSymBasis::S);
  // The coefficients of S[1,4] and S[3,1,1] are pinned by the Schur image test.
  CHECK(q113.terms.size() == 11);
  CHECK(q113.coefficient({1, 1, 3}) == P("1"));
  CHECK(q113.coefficient({1, 2, 2}) == P("q"));
  CHECK(q113.coefficient({1, 3, 1}) == P("q^2"));
  CHECK(q113.coefficient({2, 1, 2}) == P("q^2"));
  CHECK(q113.coefficient({2, 2, 1}) == P("q^3+q^2-q"));
  CHECK(q113.coefficient({2, 3}) == P("q^4+q^3"));
  CHECK(q113.coefficient({3, 2}) == P("q^5+q^4+q^3-q^2"));
  CHECK(q113.coefficient({4, 1}) == P("q^6+q^5"));
  CHECK(q113.coefficient({5}) == P("q^7"));
  CHECK(to_basis(Qp({1, 1, 1, 1}), NSymBasis::S) ==
        S({1, 1, 1, 1}) + S({1, 1, 2}, P("q")) + S({1, 2, 1}, P("q+q^2")) + S({1, 3}, P("q^3")) +
            S({2, 1, 1}, P("q+q^2+q^3")) + S({2, 2}, P("q^2+q^3+q^4")) + S({3, 1}, P("q^3+q^4+q^5")) +
            S({4}, P("q^6")));
  CHECK(to_basis(Qp({3, 3, 1}), NSymBasis::S) ==
        S({3, 3, 1}) + S({3, 4}, P("q")) + S({4, 2, 1}, P("q")) + S({4, 3}, P("q^2+q")) + S({5, 1, 1}, P("q^2")) +
            S({5, 2}, P("q^3+q^2")) + S({6, 1}, P("q^4+q^3")) + S({7}, P("q^5")));
  CHECK(to_basis(Qp({4, 2}), NSymBasis::S) == S({4, 2}) + S({5, 1}, P("q")) + S({6}, P("q^2")));
  CHECK(qprime_in_h({2}) == H({2}));
  CHECK(to_basis(H({1}) + H({1, 1}), NSymBasis::H) == H({1}) + H({1, 1}));
  CHECK_THROWS_AS(to_basis(H({1}) + H({1, 1}), NSymBasis::S), DomainError);
}

TEST_CASE("H to immaculate is the K matrix, R to immaculate is the L matrix") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& b : compositions_of(n)) {
      NSymExpr h = to_basis(H(b), NSymBasis::S);
      NSymExpr r = to_basis(NSymExpr::element(NSymBasis::R, b), NSymBasis::S);
      for (const auto& a : compositions_of(n)) {
        CHECK(h.coefficient(a) == QPoly(count_immaculate(a, b)));
        CHECK(r.coefficient(a) == QPoly(count_L(a, b)));
      }
    }
}

TEST_CASE("round trips between every pair of bases") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& a : compositions_of(n))
      for (NSymBasis x : kBases)
        for (NSymBasis y : kBases) {
          NSymExpr e = NSymExpr::element(x, a);
          CHECK(to_basis(to_basis(e, y), x) == e);
        }
}

TEST_CASE("transition matrices are mutually inverse") {
  for (int n = 1; n <= 6; ++n)
    for (NSymBasis x : kBases) {
      CHECK(transition_matrix(n, x, x).is_identity());
      for (NSymBasis y : kBases)
        if (x != y) CHECK(multiply(transition_matrix(n, x, y), transition_matrix(n, y, x)).is_identity());
    }
  auto m = transition_matrix(4, NSymBasis::H, NSymBasis::S);
  std::vector<QPoly> top{1, 1, 2, 1, 3, 3, 3, 1};
  CHECK(m.entries[0] == top);
  auto mq = transition_matrix(4, NSymBasis::Qp, NSymBasis::S);
  CHECK(mq.entries[0][1] == P("q"));
  CHECK(mq.entries[0][7] == P("q^6"));
  CHECK(m.to_text().rfind("# M(H,S) n=4 lex\n1 1 2 1 3 3 3 1\n", 0) == 0);
}

TEST_CASE("right Pieri rule matches multiplication") {
  CHECK(pieri_immaculate({2, 3}, 3).terms.size() == 10);
  CHECK(pieri_immaculate({2}, 2) == S({2, 2}) + S({3, 1}) + S({4}));
  CHECK(pieri_immaculate({3, 1}, 0) == S({3, 1}));
  for (int total = 1; total <= 8; ++total)
    for (int s = 0; s <= total; ++s)
      for (const auto& a : compositions_of(total - s))
        CHECK(pieri_immaculate(a, s) ==
              to_basis(h_product(immaculate_in_h(a), s ? H({s}) : NSymExpr::one()), NSymBasis::S));
}

TEST_CASE("elementary Pieri rule") {
  CHECK(pieri_elementary({2}, 2) == S({3, 1}) + S({2, 1, 1}));
  CHECK(pieri_elementary({1}, 1) == S({2}) + S({1, 1}));
  CHECK(pieri_elementary({2, 2}, 0) == S({2, 2}));
  for (int total = 1; total <= 7; ++total)
    for (int s = 0; s <= total; ++s)
      for (const auto& a : compositions_of(total - s))
        CHECK(pieri_elementary(a, s) == product(S(a), S(Composition(std::vector<int>(s, 1)))));
}

TEST_CASE("Hall-Littlewood Pieri rule") {
  const QPoly u = P("1-q"), u2 = u * u;
  NSymExpr expect = Qp({2, 3, 3}) + Qp({2, 4, 2}, u) + Qp({2, 5, 1}, u) + Qp({2, 6}, u) + Qp({3, 3, 2}, u) +
                    Qp({3, 4, 1}, u2) + Qp({3, 5}, u2) + Qp({4, 3, 1}, u) + Qp({4, 4}, u2) + Qp({5, 3}, u);
  CHECK(pieri_hl({2, 3}, 3) == expect);
  CHECK(pieri_hl({2, 1}, 0) == Qp({2, 1}));
  for (int total = 1; total <= 7; ++total)
    for (int s = 0; s <= total; ++s)
      for (const auto& a : compositions_of(total - s)) {
        NSymExpr rule = pieri_hl(a, s);
        NSymExpr hs = s ? H({s}) : NSymExpr::one();
        CHECK(rule == product(Qp(a), to_basis(hs, NSymBasis::Qp)));
        NSymExpr at0{NSymBasis::S, specialize_q(rule.terms, 0)};
        CHECK(at0 == pieri_immaculate(a, s));
      }
}

TEST_CASE("left multiplication and products with signs") {
  CHECK(product(to_basis(H({1}), NSymBasis::S), S({1, 3})) == S({1, 1, 3}) - S({2, 2, 1}) - S({3, 2}));
  CHECK(product(S({1, 1}), S({1, 3, 1, 3})).coefficient({1, 3, 2, 1, 3}) == QPoly(-1));
  NSymExpr p = product(S({1, 2}), S({3, 1}));
  for (const auto& [k, c] : p.terms) CHECK(c.nonnegative());
  CHECK(p.coefficient({2, 3, 2}) == QPoly(2));
  CHECK(p.coefficient({2, 4, 1}) == QPoly(2));
  CHECK(p.coefficient({3, 3, 1}) == QPoly(2));
  CHECK(p.terms.size() == 18);
}

TEST_CASE("perp actions on immaculate functions") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      IntTuple ones{std::vector<int>(n, 1)};
      CHECK(perp_on_immaculate_e(r, ones) == S(Composition(std::vector<int>(n - r, 1))));
      if (r > 1) CHECK(perp_on_immaculate_h(r, ones).is_zero());
    }
  CHECK(perp_on_immaculate_e(1, IntTuple{{2, 2}}) == S({1, 2}) + S({2, 1}));
  CHECK(perp_on_immaculate_e(3, IntTuple{{2, 2}}).is_zero());
  CHECK(perp_on_immaculate_h(0, IntTuple{{3, 1}}) == S({3, 1}));
  CHECK(perp_on_immaculate_h(1, IntTuple{{3}}) == S({2}));
  // compare against the perp operators applied in H
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 4), entry(-1, 4), deg(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntTuple t;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) t.entries.push_back(entry(rng));
    const int r = deg(rng);
    NSymExpr jt = immaculate_jacobi_trudi(t);
    CHECK(perp_on_immaculate_e(r, t) == to_basis(perp_e(r, jt), NSymBasis::S));
    CHECK(perp_on_immaculate_h(r, t) == to_basis(perp_h(r, jt), NSymBasis::S));
  }
}

TEST_CASE("H to Qp through tableaux") {
  const QPoly u = P("1-q");
  NSymExpr e = h_to_qprime_tableau({3, 1, 2, 3});
  CHECK(e.coefficient({4, 2, 3}) == u + u * u + QPoly(3) * u * u * u);
  CHECK(h_to_qprime_tableau({5}) == Qp({5}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& b : compositions_of(n)) {
      NSymExpr t = h_to_qprime_tableau(b);
      CHECK(t == to_basis(H(b), NSymBasis::Qp));
      CHECK(specialize_q(t.terms, 1) == H(b).terms);
    }
}

TEST_CASE("Qp at q = 0 is the immaculate basis") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      NSymExpr s = to_basis(Qp(a), NSymBasis::S);
      CHECK(specialize_q(s.terms, 0) == S(a).terms);
    }
}

TEST_CASE("Hall-Littlewood identities") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& r : hl_identities_check(n)) {
      INFO(r.name << " " << r.detail);
      CHECK(r.passed);
    }
  CHECK(qprime_in_h({1}) == immaculate_in_h({1}));
}
