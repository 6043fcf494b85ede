#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dharm/qstats.hpp"
#include "dharm/tensor.hpp"

using namespace dharm;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

// 1 (x) s_2 + s_1 (x) s_11 (the n=2 diagonal-harmonics character).
TensorExp e2_tensor() {
  TensorExp t(2);
  t.add_term(Partition(), P("2"), 1);
  t.add_term(P("1"), P("1,1"), 1);
  return t;
}

}  // namespace

TEST_CASE("add_term merges and validates degree") {
  TensorExp t(3);
  t.add_term(P("1"), P("2,1"), 2);
  t.add_term(P("1"), P("2,1"), -2);
  CHECK(t.is_zero());
  CHECK_THROWS_AS(t.add_term(P("1"), P("2"), 1), std::invalid_argument);
}

TEST_CASE("coefficient_of extracts the GL character") {
  TensorExp t = e2_tensor();
  GLCoefficient c = coefficient_of(t, P("1,1"));
  CHECK(c == SymFun<Rat>::unit(Basis::s, P("1")));
  CHECK(coefficient_of(t, P("2")) == SymFun<Rat>::one());
  // Reassembly: sum_mu coefficient_of(t, mu) (x) s_mu == t.
  TensorExp back(2);
  for (const Partition& mu : t.right_support()) {
    GLCoefficient c_mu = coefficient_of(t, mu);
    for (const auto& [la, w] : c_mu.terms()) back.add_term(la, mu, w.get_num());
  }
  CHECK(back == t);
}

TEST_CASE("evaluate at 1^k") {
  TensorExp t = e2_tensor();
  // E_2(k;z) = k s_11 + s_2
  SymFun<MPoly> f = evaluate_ones_poly(t);
  CHECK(f.coeff(P("1,1")) == MPoly::var("k"));
  CHECK(f.coeff(P("2")) == MPoly(1L));
  // numeric k agrees with the polynomial for several k
  for (long k = 0; k <= 4; ++k) {
    SymFun<Rat> num = evaluate_ones(t, k);
    std::map<int, MPoly> sub{{Vars::id("k"), MPoly(Rat(k))}};
    for (const Partition& mu : t.right_support()) {
      MPoly v = f.coeff(mu).substituted(sub);
      CHECK(v.is_constant());
      CHECK(v.constant() == num.coeff(mu));
    }
  }
  // k = 0 keeps only the empty left factor
  SymFun<Rat> zero = evaluate_ones(t, 0);
  CHECK(zero == SymFun<Rat>::unit(Basis::s, P("2")));
}

TEST_CASE("evaluate at finite parameter lists") {
  TensorExp t(3);
  t.add_term(P("2,1"), P("3"), 1);
  t.add_term(P("1,1,1"), P("2,1"), 1);
  // one parameter: any lambda with >1 part vanishes
  SymFun<MPoly> one = evaluate_params(t, {MPoly::var("q")});
  CHECK(one.is_zero());
  // two parameters: s_{21}(q,t) = qt(q+t); three-part lambda vanishes
  SymFun<MPoly> qt = evaluate_qt(t);
  MPoly q = MPoly::var("q"), tt = MPoly::var("t");
  CHECK(qt.coeff(P("3")) == q * tt * (q + tt));
  CHECK(qt.coeff(P("2,1")).is_zero());
  // two-row lambda at (q,t) matches the closed two-row form
  TensorExp u(1);
  u.add_term(P("4,2"), P("1"), 1);
  CHECK(evaluate_qt(u).coeff(P("1")) == schur_two_rows(4, 2, "q", "t"));
  // three parameters: s_{111}(x,y,z) = xyz
  SymFun<MPoly> three =
      evaluate_params(t, {MPoly::var("q"), MPoly::var("t"), MPoly::var("u")});
  CHECK(three.coeff(P("2,1")) == q * tt * MPoly::var("u"));
}

TEST_CASE("skew_left applies perp to left factors") {
  TensorExp t(2);
  t.add_term(P("2,1"), P("2"), 1);
  SymFun<Rat> e1 = SymFun<Rat>::unit(Basis::e, P("1"));
  TensorExp skewed = skew_left(t, e1);
  TensorExp expect(2);
  expect.add_term(P("2"), P("2"), 1);
  expect.add_term(P("1,1"), P("2"), 1);
  CHECK(skewed == expect);
}

TEST_CASE("length components partition the expression") {
  TensorExp t(2);
  t.add_term(Partition(), P("2"), 1);
  t.add_term(P("1"), P("1,1"), 3);
  t.add_term(P("2,2"), P("1,1"), -2);
  TensorExp sum(2);
  for (int d = 0; d <= 2; ++d) sum += length_component(t, d);
  CHECK(sum == t);
  CHECK(length_component(t, 0).mult(Partition(), P("2")) == 1);
  CHECK(length_component(t, 2).mult(P("2,2"), P("1,1")) == -2);
}

TEST_CASE("reduced_length") {
  // epsilon^(0) keeps the length-0 layer unchanged
  TensorExp t = e2_tensor();
  TensorExp eps0 = reduced_length(t, 0);
  TensorExp expect0(2);
  expect0.add_term(Partition(), P("2"), 1);
  CHECK(eps0 == expect0);
  // e_1-perp of the length-1 layer: s_1 -> 1
  TensorExp eps1 = reduced_length(t, 1);
  TensorExp expect1(2);
  expect1.add_term(Partition(), P("1,1"), 1);
  CHECK(eps1 == expect1);
}

TEST_CASE("to_e_format inverts the e-to-s conversion") {
  TensorExp t(2);
  t.add_term(P("1"), P("2"), 2);
  t.add_term(Partition(), P("1,1"), 1);
  auto d = to_e_format(t);
  // s_2 = e_11 - e_2, s_11 = e_2
  CHECK(d.at(P("1,1")) == SymFun<Rat>::unit(Basis::s, P("1"), Rat(2)));
  GLCoefficient d2 = d.at(P("2"));
  CHECK(d2.coeff(P("1")) == Rat(-2));
  CHECK(d2.coeff(Partition()) == Rat(1));
  // Reassembly: sum_nu d_nu (x) (e_nu in the s basis) == t.
  std::map<Partition, GLCoefficient, PartitionOrder> back;
  for (const auto& [nu, dnu] : d) {
    SymFun<Rat> enu = convert(SymFun<Rat>::unit(Basis::e, nu), Basis::s);
    for (const auto& [mu, w] : enu.terms()) {
      auto it = back.find(mu);
      if (it == back.end()) it = back.emplace(mu, GLCoefficient(Basis::s)).first;
      it->second += dnu.scaled_rat(w);
    }
  }
  for (const Partition& mu : t.right_support())
    CHECK(back.at(mu) == coefficient_of(t, mu));
}

TEST_CASE("canonical text form") {
  TensorExp t(4);
  t.add_term(Partition(), P("4"), 1);
  t.add_term(P("1"), P("3,1"), 1);
  t.add_term(P("2"), P("3,1"), 1);
  t.add_term(P("3"), P("3,1"), 1);
  t.add_term(P("1,1,1"), P("1,1,1,1"), 1);
  CHECK(t.str() ==
        "1 (x) s[4] + (s[1]+s[2]+s[3]) (x) s[3,1] + s[1,1,1] (x) s[1,1,1,1]");
  CHECK(TensorExp(1).str() == "0");
  TensorExp neg(1);
  neg.add_term(P("1"), P("1"), -1);
  neg.add_term(Partition(), P("1"), 2);
  CHECK(neg.str() == "(2-s[1]) (x) s[1]");
}

TEST_CASE("json export") {
  TensorExp t = e2_tensor();
  std::string j = t.to_json();
  CHECK(j.find("\"right_degree\": 2") != std::string::npos);
  CHECK(j.find("\"lambda\"") != std::string::npos);
  CHECK(j.find("\"mult\": 1") != std::string::npos);
}
