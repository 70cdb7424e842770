#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fig_fixtures.hpp"
#include "sfcfa/cfa_sf.hpp"
#include "sfcfa/generate.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/reduction.hpp"

using namespace sfcfa;
using namespace fixtures;

TEST_CASE("the SF identity-of-identity analysis reproduces the published table") {
  LTermPtr t = parse_labelled(kSfIdentityTerm, Calculus::SF);
  CombAnalysis a = analyze_sf(t);
  auto expected = sf_identity_table();

  for (const auto& [label, vals] : expected) {
    CAPTURE(to_string(label));
    REQUIRE(a.solution.at(label) == vals);
  }
  for (const auto& [label, vals] : a.solution.gamma) {
    if (vals.empty()) continue;
    CAPTURE(to_string(label));
    REQUIRE(expected.count(label) == 1);
  }
  REQUIRE(a.solution.phi == sf_identity_phi());
}

TEST_CASE("the published SF table satisfies the constraints verbatim") {
  LTermPtr t = parse_labelled(kSfIdentityTerm, Calculus::SF);
  CombSolution table = table_solution(sf_identity_table(), sf_identity_phi());
  REQUIRE(models_sf(table, t));
}

TEST_CASE("non-canonical application witnesses satisfy the existential") {
  // Gamma(15.S.3) holds both the canonical witness of the template node
  // and the inherited pair from label 8; the check must accept the entry
  // as published.
  auto table = sf_identity_table();
  const auto& entry = table[Label(15, SubName::S_3)];
  REQUIRE(entry.count(app_pair(Label(15, SubName::S_L), Label(15, SubName::S_R))) == 1);
  REQUIRE(entry.count(app_pair(Label(7), Label(2))) == 1);
}

TEST_CASE("the published SF table stops satisfying under perturbation") {
  LTermPtr t = parse_labelled(kSfIdentityTerm, Calculus::SF);

  CombSolution missing = table_solution(sf_identity_table(), sf_identity_phi());
  missing.gamma[Label(18)].erase(S2(6));
  std::vector<std::string> violations;
  REQUIRE_FALSE(models_sf(missing, t, &violations));
  bool mentions_app18 = false;
  for (const std::string& v : violations)
    if (v.find("app @^18") != std::string::npos) mentions_app18 = true;
  REQUIRE(mentions_app18);

  CombSolution no_phi = table_solution(sf_identity_table(), {13});
  REQUIRE_FALSE(models_sf(no_phi, t));
}

TEST_CASE("the F atom case waits for its arguments before firing") {
  LTermPtr t = parse_labelled("F^3 @^4 F^2 @^5 S^1 @^6 S^0", Calculus::SF);
  CombAnalysis a = analyze_sf(t);
  REQUIRE(a.solution.contains(Label(3, SubName::F_0), F0(2)));
  REQUIRE(a.solution.contains(Label(6), S0(1)));
  REQUIRE(a.solution.activated(3));
  // Reduction agrees.
  auto step = top_step_sf(t);
  REQUIRE(step);
  REQUIRE(to_string(step->term) == "S^1");
}

TEST_CASE("a lone F generates only its own abstraction") {
  CombAnalysis a = analyze_sf(parse_labelled("F", Calculus::SF));
  REQUIRE(a.solution.at(Label(0)) == std::set<AbsVal>{F0(0)});
  REQUIRE(a.solution.phi.empty());
}

TEST_CASE("gen_sf rejects SK atoms") {
  LTermPtr t = parse_labelled("S K K", Calculus::SK);
  REQUIRE_THROWS_AS(gen_sf(t), CalculusError);
}

TEST_CASE("abstract factorisation covers concrete factorisation") {
  // F (S S) x y factorises; the analysis must route the factors through
  // the F.L / F.M / F.3 plumbing so the reduct still checks out.
  LTermPtr t = parse_labelled("F (S S) F (F F)", Calculus::SF);
  CombAnalysis a = analyze_sf(t);
  REQUIRE(models_sf(a.solution, t));
  auto step = top_step_sf(t);
  REQUIRE(step);
  REQUIRE(step->rule == Rule::FFactor);
  REQUIRE(models_sf(a.solution, step->term));
  REQUIRE(a.solution.includes(step->term->label, t->label));
}

TEST_CASE("satisfaction of reducts needs the existential witness form") {
  // The substitution lemma's hinge: under the weakened canonical-only
  // check the very same reducts stop satisfying.
  std::mt19937_64 rng(79);
  CombCS::CheckOptions weakened;
  weakened.weaken_exists = true;
  int instances = 0, weakened_failures = 0;
  for (int i = 0; i < 500 && instances < 300; ++i) {
    LTermPtr t = random_term(Calculus::SF, 10, rng);
    CombAnalysis a = analyze_sf(t);
    for (const auto& [redex, reduct] : all_one_step(t, Calculus::SF)) {
      ++instances;
      CAPTURE(to_string(t), to_string(reduct));
      REQUIRE(models_sf(a.solution, reduct));
      if (!models_sf(a.solution, reduct, nullptr, weakened)) ++weakened_failures;
    }
  }
  REQUIRE(instances > 50);
  REQUIRE(weakened_failures > 0);
}

TEST_CASE("SF reduction coherence at the root, both F cases and S") {
  std::mt19937_64 rng(83);
  int s_hits = 0, atom_hits = 0, factor_hits = 0;
  for (int i = 0; i < 400; ++i) {
    LTermPtr t = random_term(Calculus::SF, 10, rng);
    auto step = top_step_sf(t);
    if (!step) continue;
    switch (step->rule) {
      case Rule::S: ++s_hits; break;
      case Rule::FAtom: ++atom_hits; break;
      case Rule::FFactor: ++factor_hits; break;
      default: break;
    }
    CombAnalysis a = analyze_sf(t);
    CAPTURE(to_string(t));
    REQUIRE(models_sf(a.solution, step->term));
    REQUIRE(a.solution.includes(step->term->label, t->label));
  }
  REQUIRE(s_hits > 0);
  REQUIRE(atom_hits > 0);
  REQUIRE(factor_hits > 0);
}

TEST_CASE("SF evaluation coherence along full reduction sequences") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 60; ++i) {
    LTermPtr t = random_term(Calculus::SF, 10, rng);
    CombAnalysis a = analyze_sf(t);
    Trace tr = eval(t, Calculus::SF, 60);
    for (const Step& s : tr.steps) {
      REQUIRE(models_sf(a.solution, s.after));
      REQUIRE(a.solution.includes(s.after->label, t->label));
    }
  }
}

TEST_CASE("normalizing SF spines show up in the abstraction of the root") {
  std::mt19937_64 rng(97);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    LTermPtr t = random_term(Calculus::SF, 7, rng);
    Trace tr = eval(t, Calculus::SF, 100);
    if (tr.outcome != Outcome::NormalForm) continue;
    const LTerm* spine = tr.result.get();
    int args = 0;
    while (spine->is_app()) {
      ++args;
      spine = spine->left.get();
    }
    if (!spine->is_atom() || args > 2) continue;
    ++checked;
    CombAnalysis a = analyze_sf(t);
    REQUIRE(a.solution.contains(t->label,
                                comb(spine->atom, static_cast<std::uint8_t>(args), spine->label.base)));
  }
  REQUIRE(checked > 100);
}
