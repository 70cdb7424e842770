#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fig_fixtures.hpp"
#include "sfcfa/cfa_sf.hpp"
#include "sfcfa/cfa_sk.hpp"
#include "sfcfa/coherence.hpp"
#include "sfcfa/generate.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/reduction.hpp"
#include "sfcfa/translate.hpp"

using namespace sfcfa;
using namespace fixtures;

TEST_CASE("a lone K becomes F F with fresh leaf labels") {
  auto [t, mapping] = sk_to_sf(parse_labelled("K", Calculus::SK));
  REQUIRE(to_string(t) == "F^1 @^0 F^2");
  REQUIRE(mapping.entries.size() == 1);
  const KEntry& e = mapping.entries.at(0);
  REQUIRE(e.app_label == 0);
  REQUIRE(e.left_f == 1);
  REQUIRE(e.right_f == 2);
}

TEST_CASE("translation is homomorphic elsewhere and keeps labels") {
  auto [t, mapping] = sk_to_sf(parse_labelled("S^2 @^3 K^1 @^4 K^0", Calculus::SK));
  // Labels 2, 3, 4 unchanged; K labels stay on the replacement applications.
  REQUIRE(t->label == Label(4));
  REQUIRE(t->left->label == Label(3));
  REQUIRE(t->left->left->label == Label(2));
  REQUIRE(t->left->right->label == Label(1));
  REQUIRE(t->right->label == Label(0));
  REQUIRE(to_string(strip_labels(t)) == "S (F F) (F F)");
  // Fresh labels start past the maximum of the source, scanned left first.
  REQUIRE(mapping.entries.at(1).left_f == 5);
  REQUIRE(mapping.entries.at(1).right_f == 6);
  REQUIRE(mapping.entries.at(0).left_f == 7);
  REQUIRE(mapping.entries.at(0).right_f == 8);
}

TEST_CASE("the translated identity-of-identity has the worked example's shape") {
  LTermPtr id2 = parse_labelled("(S K K) (S K K)", Calculus::SK);
  auto [t, mapping] = sk_to_sf(id2);
  LTermPtr expected = parse_labelled("(S (F F) (F F)) (S (F F) (F F))", Calculus::SF);
  REQUIRE(equal(strip_labels(t), strip_labels(expected)));
}

TEST_CASE("the value correspondence maps K arities onto the leading F") {
  KMapping m;
  m.entries[5] = KEntry{5, 11, 12};
  REQUIRE(correspond(S2(2), m) == S2(2));
  REQUIRE(correspond(K0(5), m) == F1(11));
  REQUIRE(correspond(K1(5), m) == F2(11));
  REQUIRE_THROWS_AS(correspond(app_pair(Label(1), Label(2)), m), std::invalid_argument);
}

TEST_CASE("precision is invariant on the identity example") {
  LTermPtr t = parse_labelled(kSkIdentityTerm, Calculus::SK);
  CombAnalysis sk = analyze_sk(t);
  auto [tf, mapping] = sk_to_sf(t);
  CombAnalysis sf = analyze_sf(tf);

  // Spot-check the published rows through the correspondence.
  auto sk_table = sk_identity_table();
  for (const auto& [label, vals] : sk_table) {
    Label sf_label = label;
    if (label.sub && *label.sub == SubName::K_0)
      sf_label = Label(mapping.entries.at(label.base).left_f, SubName::F_1);
    std::set<AbsVal> expected;
    for (const AbsVal& v : vals) expected.insert(correspond(v, mapping));
    std::set<AbsVal> actual;
    for (const AbsVal& v : sf.solution.at(sf_label))
      if (!is_pair(v)) actual.insert(v);
    CAPTURE(to_string(label), to_string(sf_label));
    REQUIRE(actual == expected);
  }
}

TEST_CASE("precision invariance holds on random terms") {
  InvarianceReport report = check_invariance(60, 10, 12345);
  for (const std::string& f : report.failures) UNSCOPED_INFO(f);
  REQUIRE(report.failures.empty());
  REQUIRE(report.trials == 60);
}

TEST_CASE("evaluation commutes with the translation on normalizing terms") {
  std::mt19937_64 rng(211);
  int compared = 0;
  for (int i = 0; i < 120; ++i) {
    LTermPtr t = random_term(Calculus::SK, 8, rng);
    Trace sk_tr = eval(t, Calculus::SK, 200);
    if (sk_tr.outcome != Outcome::NormalForm) continue;
    auto [tf, mapping] = sk_to_sf(t);
    Trace sf_tr = eval(tf, Calculus::SF, 2000);
    if (sf_tr.outcome != Outcome::NormalForm) continue;
    ++compared;
    CAPTURE(to_string(t));
    REQUIRE(equal(replace_k_with_ff(strip_labels(sk_tr.result)), strip_labels(sf_tr.result)));
  }
  REQUIRE(compared > 80);
}
