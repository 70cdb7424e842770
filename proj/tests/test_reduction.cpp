#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>

#include "sfcfa/generate.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/reduction.hpp"

using namespace sfcfa;

namespace {

LTermPtr sk(const std::string& s) { return parse_labelled(s, Calculus::SK); }
LTermPtr sf(const std::string& s) { return parse_labelled(s, Calculus::SF); }

// Labels introduced by a contraction must be sublabels of a combinator
// that was present in the redex.
void collect_labels(const LTermPtr& t, std::set<Label>& out) {
  out.insert(t->label);
  if (t->is_app()) {
    collect_labels(t->left, out);
    collect_labels(t->right, out);
  }
}

}  // namespace

TEST_CASE("factorable forms are S and F with at most two arguments") {
  REQUIRE(is_factorable_form(sf("S")));
  REQUIRE(is_factorable_form(sf("S F")));
  REQUIRE(is_factorable_form(sf("F (F F) S")));
  REQUIRE(is_factorable_form(sf("F F")));
  REQUIRE_FALSE(is_factorable_form(sf("S F F F")));
  REQUIRE_FALSE(is_factorable_form(sf("F S S S")));
}

TEST_CASE("K contracts at the root to its first argument") {
  LTermPtr t = sk("K^2 @^3 S^1 @^4 S^0");
  auto step = top_step_sk(t);
  REQUIRE(step);
  REQUIRE(step->rule == Rule::K);
  REQUIRE(to_string(step->term) == "S^1");
}

TEST_CASE("S contracts at the root with sublabels of the S's base label") {
  // S^7 @^8 K^6 @^9 K^5 @^10 t with t = K^4.
  LTermPtr t = sk("S^7 @^8 K^6 @^9 K^5 @^10 K^4");
  auto step = top_step_sk(t);
  REQUIRE(step);
  REQUIRE(step->rule == Rule::S);
  REQUIRE(equal(step->term,
                parse_labelled("(K^6 @^7.S.L K^4) @^7.S.3 (K^5 @^7.S.R K^4)", Calculus::SK)));
}

TEST_CASE("underapplied spines are not redexes") {
  REQUIRE_FALSE(top_step_sk(sk("S^0 @^1 K^2")));
  REQUIRE_FALSE(top_step_sk(sk("K")));
  REQUIRE_FALSE(top_step_sf(sf("F F")));
}

TEST_CASE("F on an atom first argument returns the second argument") {
  LTermPtr t = sf("F^3 @^4 F^2 @^5 S^1 @^6 S^0");
  auto step = top_step_sf(t);
  REQUIRE(step);
  REQUIRE(step->rule == Rule::FAtom);
  REQUIRE(to_string(step->term) == "S^1");
}

TEST_CASE("F factorises a compound factorable first argument") {
  LTermPtr t = sf("F^3 @^4 (S^7 @^2 S^8) @^5 S^1 @^6 F^0");
  auto step = top_step_sf(t);
  REQUIRE(step);
  REQUIRE(step->rule == Rule::FFactor);
  REQUIRE(equal(step->term, parse_labelled("(F^0 @^3.F.M S^7) @^3.F.3 S^8", Calculus::SF)));
}

TEST_CASE("F does not fire while its first argument is itself a redex") {
  LTermPtr t = sf("F^4 @^5 (S^0 @^1 S^2 @^6 S^7 @^8 S^9) @^10 S^11 @^12 S^13");
  REQUIRE_FALSE(top_step_sf(t));
  // But the argument itself reduces, so evaluation still proceeds.
  Trace tr = eval(t, Calculus::SF, 100);
  REQUIRE(tr.outcome == Outcome::NormalForm);
}

TEST_CASE("all_one_step enumerates redex positions in pre-order") {
  REQUIRE(all_one_step(sk("K^2 @^3 S^1 @^4 S^0"), Calculus::SK).size() == 1);
  REQUIRE(all_one_step(sk("S^0 @^1 K^2"), Calculus::SK).empty());

  LTermPtr two = sk("(K S S) (K S S)");
  auto steps = all_one_step(two, Calculus::SK);
  REQUIRE(steps.size() == 2);
  REQUIRE(steps[0].first.path == std::vector<Dir>{Dir::Left});
  REQUIRE(steps[1].first.path == std::vector<Dir>{Dir::Right});
  // Context labels survive untouched.
  REQUIRE(steps[0].second->label == two->label);
  REQUIRE(equal(steps[0].second->right, two->right));
}

TEST_CASE("over-applied spines reduce on the leftmost spine") {
  // K a b c steps to a c.
  Trace tr = eval(sk("K S K S"), Calculus::SK, 10);
  REQUIRE(tr.steps.size() == 1);
  REQUIRE(to_string(strip_labels(tr.result)) == "S S");
}

TEST_CASE("the identity function evaluates in two steps") {
  LTermPtr t = sk("S K K K");
  Trace tr = eval(t, Calculus::SK, 100);
  REQUIRE(tr.outcome == Outcome::NormalForm);
  REQUIRE(tr.steps.size() == 2);
  REQUIRE(tr.steps[0].redex.rule == Rule::S);
  REQUIRE(tr.steps[1].redex.rule == Rule::K);
  REQUIRE(to_string(strip_labels(tr.result)) == "K");
}

TEST_CASE("the SF identity evaluates through the worked chain") {
  // S (F F) (F F) x -> (F F x) (F F x) -> x: the second step consumes the
  // duplicated spine in one F contraction.
  LTermPtr t = sf("S (F F) (F F) F");
  Trace tr = eval(t, Calculus::SF, 100);
  REQUIRE(tr.outcome == Outcome::NormalForm);
  REQUIRE(tr.steps.size() == 2);
  REQUIRE(tr.steps[0].redex.rule == Rule::S);
  REQUIRE(to_string(strip_labels(tr.steps[0].after)) == "(F F F) (F F F)");
  REQUIRE(tr.steps[1].redex.rule == Rule::FAtom);
  REQUIRE(to_string(strip_labels(tr.result)) == "F");
}

TEST_CASE("F F S u discards u and yields S") {
  Trace tr = eval(sf("F F S (F F)"), Calculus::SF, 100);
  REQUIRE(tr.outcome == Outcome::NormalForm);
  REQUIRE(to_string(strip_labels(tr.result)) == "S");
}

TEST_CASE("fuel exhaustion is an outcome, not an error") {
  // S I I (S I I)-style loop built from S S S self-application:
  // (S S S) (S S S) (S S S) does not normalize quickly; just check fuel
  // accounting on a small budget.
  LTermPtr t = sk("S K K K");
  Trace tr = eval(t, Calculus::SK, 1);
  REQUIRE(tr.outcome == Outcome::FuelExhausted);
  REQUIRE(tr.fuel_used == 1);
}

TEST_CASE("trace serialization lists path, rule, and result") {
  Trace tr = eval(sk("S K K K"), Calculus::SK, 10);
  std::string text = to_text(tr, false);
  REQUIRE(text == ". S-rule K K (K K)\n. K-rule K\n");
}

TEST_CASE("contraction labels are either old or sublabels of the contracted combinator") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    Calculus c = (i % 2 == 0) ? Calculus::SK : Calculus::SF;
    LTermPtr t = random_term(c, 10, rng);
    std::set<Label> before;
    collect_labels(t, before);
    for (const auto& [redex, reduct] : all_one_step(t, c)) {
      std::set<Label> after;
      collect_labels(reduct, after);
      for (const Label& l : after) {
        if (before.count(l)) continue;
        REQUIRE_FALSE(l.is_base());
        REQUIRE(before.count(Label(l.base)) == 1);
      }
    }
  }
}

TEST_CASE("normal forms admit no one-step reducts") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Calculus c = (i % 2 == 0) ? Calculus::SK : Calculus::SF;
    LTermPtr t = random_term(c, 8, rng);
    Trace tr = eval(t, c, 200);
    if (tr.outcome == Outcome::NormalForm)
      REQUIRE(all_one_step(tr.result, c).empty());
  }
}

TEST_CASE("SF reduction is locally confluent on random terms") {
  std::mt19937_64 rng(31);
  int checked_pairs = 0;
  for (int i = 0; i < 1500; ++i) {
    LTermPtr t = random_term(Calculus::SF, 12, rng);
    auto steps = all_one_step(t, Calculus::SF);
    for (std::size_t a = 0; a < steps.size(); ++a)
      for (std::size_t b = a + 1; b < steps.size(); ++b) {
        Trace ta = eval(steps[a].second, Calculus::SF, 20);
        Trace tb = eval(steps[b].second, Calculus::SF, 20);
        if (ta.outcome == Outcome::NormalForm && tb.outcome == Outcome::NormalForm) {
          CAPTURE(to_string(t));
          REQUIRE(equal(strip_labels(ta.result), strip_labels(tb.result)));
          ++checked_pairs;
        }
      }
  }
  REQUIRE(checked_pairs > 50);
}
