#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sfcfa/generate.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/term.hpp"

using namespace sfcfa;

TEST_CASE("parsing juxtaposition associates left") {
  TermPtr t = parse("S K K", Calculus::SK);
  REQUIRE(t->kind == Term::Kind::App);
  REQUIRE(t->left->kind == Term::Kind::App);
  REQUIRE(t->left->left->atom == AtomKind::S);
  REQUIRE(t->left->right->atom == AtomKind::K);
  REQUIRE(t->right->atom == AtomKind::K);
}

TEST_CASE("parsing groups parenthesized subterms") {
  TermPtr t = parse("S (F F) (F F)", Calculus::SF);
  REQUIRE(t->left->kind == Term::Kind::App);
  REQUIRE(t->left->left->atom == AtomKind::S);
  REQUIRE(t->left->right->kind == Term::Kind::App);
  REQUIRE(t->right->kind == Term::Kind::App);
  REQUIRE(to_string(t) == "S (F F) (F F)");
}

TEST_CASE("parse errors carry positions and atom checks") {
  REQUIRE_THROWS_AS(parse("K x", Calculus::SK), ParseError);
  REQUIRE_THROWS_AS(parse("K", Calculus::SF), ParseError);
  REQUIRE_THROWS_AS(parse("F", Calculus::SK), ParseError);
  REQUIRE_THROWS_AS(parse("(S K", Calculus::SK), ParseError);
  REQUIRE_THROWS_AS(parse("", Calculus::SK), ParseError);
  REQUIRE_THROWS_AS(parse("S ) K", Calculus::SK), ParseError);
}

TEST_CASE("labelling follows the rightmost-deepest-first scheme") {
  // The right operand of Fig 5's term fixes the numbering.
  Labelled l = assign_labels(parse("S K K", Calculus::SK));
  REQUIRE(to_string(l.term) == "S^2 @^3 K^1 @^4 K^0");
  REQUIRE(l.next == 5);

  Labelled id2 = assign_labels(parse("(S K K) (S K K)", Calculus::SK));
  REQUIRE(to_string(id2.term) == "(S^7 @^8 K^6 @^9 K^5) @^10 (S^2 @^3 K^1 @^4 K^0)");

  Labelled single = assign_labels(parse("S", Calculus::SK));
  REQUIRE(to_string(single.term) == "S^0");
  REQUIRE(single.next == 1);
}

TEST_CASE("labelling the SF identity applied to itself matches the worked example") {
  Labelled l = assign_labels(parse("(S (F F) (F F)) (S (F F) (F F))", Calculus::SF));
  REQUIRE(to_string(l.term) ==
          "(S^15 @^16 (F^13 @^14 F^12) @^17 (F^10 @^11 F^9)) @^18 "
          "(S^6 @^7 (F^4 @^5 F^3) @^8 (F^1 @^2 F^0))");
}

TEST_CASE("explicit labels are taken verbatim and are all-or-nothing") {
  LTermPtr t = parse_labelled("S^7 @^8 K^6 @^9 K^5", Calculus::SK);
  REQUIRE(to_string(t) == "S^7 @^8 K^6 @^9 K^5");
  REQUIRE_THROWS_AS(parse_labelled("S^7 K", Calculus::SK), std::invalid_argument);
}

TEST_CASE("printing without labels parenthesizes right children") {
  LTermPtr t = parse_labelled("S (K K)", Calculus::SK);
  REQUIRE(to_string(t, false) == "S (K K)");
  REQUIRE(to_string(strip_labels(t)) == "S (K K)");
}

TEST_CASE("print then parse is the identity on labelled terms") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Calculus c = (i % 2 == 0) ? Calculus::SK : Calculus::SF;
    LTermPtr t = random_term(c, 10, rng);
    LTermPtr back = parse_labelled(to_string(t), c);
    CAPTURE(to_string(t));
    REQUIRE(equal(t, back));
  }
}

TEST_CASE("assigned base labels are pairwise distinct") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    LTermPtr t = random_term(Calculus::SK, 12, rng);
    std::set<BaseLabel> seen;
    std::vector<const LTerm*> stack{t.get()};
    std::size_t nodes = 0;
    while (!stack.empty()) {
      const LTerm* n = stack.back();
      stack.pop_back();
      ++nodes;
      REQUIRE(seen.insert(n->label.base).second);
      if (n->is_app()) {
        stack.push_back(n->left.get());
        stack.push_back(n->right.get());
      }
    }
    REQUIRE(nodes == node_count(t));
  }
}

TEST_CASE("label universe closes over atom sublabels") {
  LTermPtr s = parse_labelled("S", Calculus::SK);
  std::set<Label> su = labels_of(s);
  REQUIRE(su == std::set<Label>{Label(0), Label(0, SubName::S_0), Label(0, SubName::S_1),
                                Label(0, SubName::S_2), Label(0, SubName::S_3),
                                Label(0, SubName::S_L), Label(0, SubName::S_R)});

  LTermPtr k = parse_labelled("K", Calculus::SK);
  REQUIRE(labels_of(k) == std::set<Label>{Label(0), Label(0, SubName::K_0)});

  LTermPtr f = parse_labelled("F", Calculus::SF);
  REQUIRE(labels_of(f) ==
          std::set<Label>{Label(0), Label(0, SubName::F_0), Label(0, SubName::F_1),
                          Label(0, SubName::F_2), Label(0, SubName::F_3), Label(0, SubName::F_L),
                          Label(0, SubName::F_R), Label(0, SubName::F_M)});
}

TEST_CASE("label universe is monotone under subterm inclusion") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    LTermPtr t = random_term(Calculus::SF, 8, rng);
    std::set<Label> whole = labels_of(t);
    if (t->is_app()) {
      for (const LTermPtr& sub : {t->left, t->right})
        for (const Label& l : labels_of(sub)) REQUIRE(whole.count(l) == 1);
    }
  }
}

TEST_CASE("label strings round-trip") {
  for (Label l : {Label(0), Label(42), Label(7, SubName::S_L), Label(3, SubName::F_M),
                  Label(9, SubName::K_0), Label(5, SubName::S_LF), Label(1, SubName::K_LX)}) {
    REQUIRE(parse_label(to_string(l)) == l);
  }
  REQUIRE_THROWS_AS(parse_label("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_label("7.Q.0"), std::invalid_argument);
}
