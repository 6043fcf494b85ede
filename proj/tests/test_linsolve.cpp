#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dharm/linsolve.hpp"

using namespace dharm;

static MPoly Q(int e = 1) { return MPoly::var("q", e); }
static MPoly T(int e = 1) { return MPoly::var("t", e); }

TEST_CASE("polynomial solve with residual check") {
  // [[1, q], [t, 1]] x = [1+q^2, t+q] -> x = (1, q) when 1 - qt != 0
  std::vector<std::vector<MPoly>> a{{MPoly(1L), Q()}, {T(), MPoly(1L)}};
  std::vector<MPoly> b{MPoly(1L) + Q(2), T() + Q()};
  auto x = solve_poly(a, b);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == RatFun(1L));
  CHECK(x[1] == RatFun(Q()));
  for (size_t i = 0; i < a.size(); ++i) {
    RatFun r = RatFun(b[i]);
    for (size_t j = 0; j < x.size(); ++j) r -= RatFun(a[i][j]) * x[j];
    CHECK(r.is_zero());
  }
}

TEST_CASE("rational function answers") {
  // x + q y = 1, x - y = 0  ->  x = y = 1/(1+q)
  std::vector<std::vector<MPoly>> a{{MPoly(1L), Q()}, {MPoly(1L), MPoly(-1L)}};
  std::vector<MPoly> b{MPoly(1L), MPoly(0L)};
  auto x = solve_poly(a, b);
  CHECK(x[0] == RatFun(MPoly(1L), MPoly(1L) + Q()));
  CHECK(x[1] == x[0]);
}

TEST_CASE("overdetermined consistent and inconsistent") {
  std::vector<std::vector<MPoly>> a{{MPoly(1L)}, {Q()}};
  CHECK(solve_poly(a, {T(), Q() * T()})[0] == RatFun(T()));
  CHECK_THROWS_AS(solve_poly(a, {T(), T()}), SingularSystem);
}

TEST_CASE("singular matrix") {
  std::vector<std::vector<MPoly>> a{{Q(), T()}, {Q() * Q(), Q() * T()}};
  CHECK_THROWS_AS(solve_poly(a, {MPoly(1L), MPoly(1L)}), SingularSystem);
}

TEST_CASE("ratfun_solve clears denominators") {
  RatFun half(Rat(1, 2));
  std::vector<std::vector<RatFun>> a{{RatFun(MPoly(1L), Q()), half}};
  std::vector<RatFun> b{RatFun(1L)};
  // underdetermined rows < cols must throw
  CHECK_THROWS_AS(ratfun_solve(a, b), SingularSystem);
  std::vector<std::vector<RatFun>> a2{{RatFun(MPoly(1L), Q())}};
  auto x = ratfun_solve(a2, {RatFun(1L)});
  CHECK(x[0] == RatFun(Q()));
}

TEST_CASE("rational inverse and solve") {
  QMatrix m{{1, 2}, {3, 4}};
  QMatrix inv = q_invert(m);
  CHECK(inv[0][0] == -2);
  CHECK(inv[0][1] == 1);
  CHECK(inv[1][0] == Rat(3, 2));
  CHECK(inv[1][1] == Rat(-1, 2));
  CHECK_THROWS_AS(q_invert(QMatrix{{1, 2}, {2, 4}}), SingularSystem);

  auto r = q_solve(QMatrix{{1, 1}, {1, -1}, {2, 0}}, {3, 1, 4});
  REQUIRE(r.status == SolveStatus::kUnique);
  CHECK(r.x == std::vector<Rat>({2, 1}));
  CHECK(q_solve(QMatrix{{1, 1}}, {1}).status == SolveStatus::kUnderdetermined);
  CHECK(q_solve(QMatrix{{1}, {1}}, {1, 2}).status == SolveStatus::kInconsistent);
}
