#include <doctest.h>

#include <algorithm>

#include "nsym.hpp"
#include "qsym.hpp"
#include "skew.hpp"
#include "tableaux.hpp"

using namespace ncsf;

namespace {

QSymExpr F(const Composition& a, long c = 1) { return QSymExpr::element(QSymBasis::F, a, QPoly(c)); }
QSymExpr Sd(const Composition& a, long c = 1) { return QSymExpr::element(QSymBasis::Sd, a, QPoly(c)); }

}  // namespace

TEST_CASE("paths from 132 to 11") {
  auto paths = enumerate_paths({1, 3, 2}, {1, 1});
  REQUIRE(paths.size() == 6);
  std::vector<Composition> got;
  for (const auto& p : paths) got.push_back(path_descent_composition(p));
  std::vector<Composition> expect{{4}, {2, 2}, {3, 1}, {1, 3}, {1, 2, 1}, {2, 2}};
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
  CHECK(paths[0].to_string().rfind("[1,3,2] -", 0) == 0);
  CHECK(paths[0].to_string().size() > 20);
  CHECK(paths[0].chain().back() == Composition{1, 1});
}

TEST_CASE("degenerate paths") {
  auto same = enumerate_paths({2, 1}, {2, 1});
  REQUIRE(same.size() == 1);
  CHECK(same[0].steps.empty());
  CHECK(same[0].to_string() == "[2,1]");
  CHECK(enumerate_paths({2}, {1, 1}).empty());
  CHECK(enumerate_paths({1, 1}, {2}).empty());
  auto to_empty = enumerate_paths({1}, {});
  REQUIRE(to_empty.size() == 1);
  CHECK(to_empty[0].to_string() == "[1] -1-> []");
}

TEST_CASE("word descent compositions") {
  CHECK(word_descent_composition({3, 2, 1, 1, 4, 1}) == Composition{1, 1, 3, 1});
  CHECK(word_descent_composition({1, 1, 2, 3}) == Composition{4});
  PosetPath p{{2, 2}, {2, 1}, {1, 1}};
  CHECK(p.chain().size() == 3);
  CHECK(path_descent_composition(p) == Composition{1, 1});
}

TEST_CASE("covers never drop an interior row") {
  auto c = poset_covers({2, 1, 1});
  std::vector<Composition> got;
  for (const auto& [m, g] : c) got.push_back(g);
  CHECK(got == std::vector<Composition>{{1, 1, 1}, {2, 1}});
  CHECK(c[0].first == 1);
  CHECK(c[1].first == 3);
}

TEST_CASE("chains to the empty composition are standard tableaux") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n))
      CHECK(enumerate_paths(a, {}).size() == static_cast<std::size_t>(count_standard_hook(a).get_ui()));
}

TEST_CASE("skew dual immaculate expansions") {
  CHECK(skew_dual_immaculate({1, 3, 2}, {1, 1}, QSymBasis::F) ==
        F({1, 2, 1}) + F({1, 3}) + F({2, 2}, 2) + F({3, 1}) + F({4}));
  CHECK(skew_dual_immaculate({1, 3, 2}, {1, 1}, QSymBasis::Sd) == Sd({2, 2}) - Sd({1, 3}) + Sd({3, 1}) + Sd({4}));
  for (QSymBasis b : {QSymBasis::M, QSymBasis::F, QSymBasis::Sd, QSymBasis::P})
    CHECK(skew_dual_immaculate({2, 1, 2}, {}, b) == to_basis(Sd({2, 1, 2}), b));
}

TEST_CASE("monomial and fundamental skew expansions agree") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (int k = 0; k < n; ++k)
        for (const auto& b : compositions_of(k)) {
          QSymExpr m = skew_dual_immaculate(a, b, QSymBasis::M);
          QSymExpr f = skew_dual_immaculate(a, b, QSymBasis::F);
          CHECK(m == to_m(f));
          if (n <= 5) CHECK(to_basis(m, QSymBasis::Sd) == skew_dual_immaculate(a, b, QSymBasis::Sd));
        }
}

TEST_CASE("horizontal strips") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (int k = 1; k <= n; ++k)
        for (const auto& b : compositions_of(n - k)) {
          bool strip = false;
          for (const auto& p : enumerate_paths(a, b)) strip |= path_descent_composition(p) == Composition{k};
          const bool pieri = pieri_immaculate(b, k).coefficient(a) == QPoly(1);
          CHECK(strip == pieri);
        }
}
