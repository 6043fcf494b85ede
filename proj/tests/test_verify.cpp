#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cache_bootstrap.h"

#include "json.hpp"

#include "dharm/corpus.hpp"
#include "dharm/macdonald.hpp"
#include "dharm/qstats.hpp"
#include "dharm/verify.hpp"

using namespace dharm;

namespace {
bool passed(const CheckResult& r) {
  INFO(r.id, " [", r.scope, "]: ", r.witness);
  return r.status == CheckStatus::kPass;
}
}  // namespace

TEST_CASE("left substitution at 1 + q") {
  TensorExp t(2);
  t.add_term(Partition::row(2), Partition::row(2), 1);
  TensorExp got = left_one_plus_q(t);
  TensorExp want(2);
  want.add_term(Partition(), Partition::row(2), 1);
  want.add_term(Partition::row(1), Partition::row(2), 1);
  want.add_term(Partition::row(2), Partition::row(2), 1);
  CHECK(got == want);

  // s_{21}[1 + X] = s_21 + s_2 + s_11 + s_1 (mu interleaved with (2,1)).
  TensorExp t2(3);
  t2.add_term(Partition({2, 1}), Partition::row(3), 1);
  TensorExp got2 = left_one_plus_q(t2);
  CHECK(got2.mult(Partition({2, 1}), Partition::row(3)) == 1);
  CHECK(got2.mult(Partition({2}), Partition::row(3)) == 1);
  CHECK(got2.mult(Partition({1, 1}), Partition::row(3)) == 1);
  CHECK(got2.mult(Partition({1}), Partition::row(3)) == 1);
  CHECK(got2.mult(Partition(), Partition::row(3)) == 0);
  CHECK(got2.terms().size() == 4);
}

TEST_CASE("e-expansion of F_4 matches the worked display") {
  CorpusTable ct = load_table("E4");
  auto d = to_e_format(left_one_plus_q(*ct.tensor));
  GLCoefficient d22(Basis::s);
  d22.add_term(Partition({1, 1}), Rat(1));
  d22.add_term(Partition({2}), Rat(1));
  d22.add_term(Partition({2, 1}), Rat(1));
  d22.add_term(Partition({4}), Rat(1));
  CHECK(d.at(Partition({2, 2})) == d22);
  GLCoefficient d211(Basis::s);
  d211.add_term(Partition({1}), Rat(3));
  d211.add_term(Partition({2}), Rat(2));
  d211.add_term(Partition({3}), Rat(1));
  CHECK(d.at(Partition({2, 1, 1})) == d211);
  CHECK(d.at(Partition::column(4)) == GLCoefficient::one(Basis::s));
}

TEST_CASE("brute-force harmonics, one row") {
  SymFun<MPoly> f2 = brute_force_harmonics(2, 1);
  SymFun<MPoly> want(Basis::s);
  want.add_term(Partition({2}), MPoly(1));
  want.add_term(Partition({1, 1}), MPoly::var("q"));
  CHECK(f2 == want);
  CHECK(brute_force_harmonics(3, 1) == macdonald_basis(3).at(Partition::row(3)));
}

TEST_CASE("brute-force harmonics, two rows") {
  SymFun<MPoly> f2 = brute_force_harmonics(2, 2);
  SymFun<MPoly> want(Basis::s);
  want.add_term(Partition({2}), MPoly(1));
  want.add_term(Partition({1, 1}), MPoly::var("q") + MPoly::var("t"));
  CHECK(f2 == want);
  CHECK(brute_force_harmonics(3, 2) == nabla_e(3));
}

TEST_CASE("alternant reconstruction at small degrees") {
  std::string log;
  CHECK(reconstruct_alternant(4, &log) == alternant(4));
  CHECK(log.find("top layer") != std::string::npos);
  CHECK(reconstruct_alternant(5) == alternant(5));
  CHECK_THROWS(reconstruct_alternant(9));
}

TEST_CASE("hook checks") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(passed(check_hook_components(n)));
    CHECK(passed(check_hook_product(n)));
  }
  CHECK(passed(check_hook_generating(5)));  // includes the worked (1|3) example
}

TEST_CASE("delta, length, and reconstruction checks") {
  CHECK(passed(check_delta_by_skewing(4)));
  CheckResult d = check_delta_by_skewing(5);
  CHECK(passed(d));
  CHECK(d.witness.find("orientation") != std::string::npos);
  CHECK(passed(check_length(5)));
  CHECK(passed(check_reconstruction(4)));
  CHECK(passed(check_reconstruction(5)));
}

TEST_CASE("reduced-length and two-column checks") {
  CHECK(passed(check_reduced_length(4)));
  CHECK(passed(check_reduced_length(5)));
  CHECK(passed(check_two_column(4)));
  CHECK(passed(check_two_column(5)));
}

TEST_CASE("e-positivity checks") {
  for (int n = 1; n <= 5; ++n) CHECK(passed(check_e_positivity(n)));
}

TEST_CASE("specialization battery") {
  for (int n = 2; n <= 5; ++n) {
    CheckResult r = check_specializations(n);
    CHECK(passed(r));
    CHECK(r.witness.find("forgotten") != std::string::npos);
  }
}

TEST_CASE("qt-inverse and Catalan refinement") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(passed(check_qt_inverse(n)));
    CheckResult c = check_catalan_refinement(n);
    CHECK(passed(c));
    CHECK(c.witness.find("forgotten") != std::string::npos);
  }
}

TEST_CASE("Macdonald sanity and harmonics oracle") {
  for (int n = 1; n <= 5; ++n) CHECK(passed(check_macdonald_sanity(n)));
  CHECK(passed(check_harmonics_oracle(3, 1)));
  CHECK(passed(check_harmonics_oracle(3, 2)));
}

TEST_CASE("suite runner and reports") {
  std::vector<CheckResult> results = run_suite(3, 2);
  CHECK(!results.empty());
  for (const CheckResult& r : results) CHECK(passed(r));
  std::string text = render_text(results);
  CHECK(text.find("verified-at-scale") != std::string::npos);
  CHECK(text.find(" 0 refuted") != std::string::npos);
  auto parsed = nlohmann::json::parse(render_json(results));
  CHECK(parsed.is_array());
  CHECK(parsed.size() == results.size());
  CHECK(parsed[0].contains("id"));
  CHECK(parsed[0].contains("status"));
  CHECK(parsed[0].contains("seconds"));
}
