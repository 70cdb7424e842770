#include <catch2/catch_amalgamated.hpp>

#include "fig_fixtures.hpp"
#include "sfcfa/cfa_sf.hpp"
#include "sfcfa/cfa_sk.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/solution_doc.hpp"

using namespace sfcfa;
using namespace fixtures;

TEST_CASE("documents round-trip through their JSON form") {
  LTermPtr t = parse_labelled(kSkIdentityTerm, Calculus::SK);
  SolutionDocument doc = document_of(analyze_sk(t));
  std::string dumped = doc.to_json().dump(2);
  SolutionDocument back = SolutionDocument::from_json(nlohmann::ordered_json::parse(dumped));
  REQUIRE(doc == back);
  // Byte-identical on a second run.
  SolutionDocument again = document_of(analyze_sk(t));
  REQUIRE(again.to_json().dump(2) == dumped);
}

TEST_CASE("the text rendering mirrors the published table layout") {
  LTermPtr t = parse_labelled(kSkIdentityTerm, Calculus::SK);
  SolutionDocument doc = document_of(analyze_sk(t));
  std::string text = doc.text();
  REQUIRE(text.find("Gamma(0) = { K_0^0 }") != std::string::npos);
  REQUIRE(text.find("Gamma(7.S.L) = { K_1^6 }") != std::string::npos);
  REQUIRE(text.find("Gamma(10) = { S_2^2 }") != std::string::npos);
  REQUIRE(text.find("phi(7) = true") != std::string::npos);
  REQUIRE(text.find(kSkIdentityTerm) != std::string::npos);
}

TEST_CASE("SF documents use the pair lexicon") {
  LTermPtr t = parse_labelled(kSfIdentityTerm, Calculus::SF);
  SolutionDocument doc = document_of(analyze_sf(t));
  std::string text = doc.text();
  REQUIRE(text.find("Gamma(15.S.3) = { S_2^6, @^(7,2), @^(15.S.L,15.S.R) }") !=
          std::string::npos);
  REQUIRE(text.find("phi(13) = true") != std::string::npos);
  REQUIRE(text.find("phi(15) = true") != std::string::npos);
}

TEST_CASE("abstract value strings parse back") {
  for (const char* s : {"S_0^7", "K_1^6", "F_2^13", "@^(15.S.L,15.S.R)", "@^(7,2)"}) {
    REQUIRE(to_display_string(parse_absval(s)) == s);
  }
  REQUIRE_THROWS_AS(parse_absval("S_3^1"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_absval("Q_0^1"), std::invalid_argument);
}

TEST_CASE("lambda documents list labels then variables") {
  LamPtr e = parse_lambda("(\\x.x) (\\y.y)");
  SolutionDocument doc = document_of_lambda(e, analyze_lambda(e));
  REQUIRE(doc.calculus == "lambda");
  std::string text = doc.text();
  REQUIRE(text.find("Gamma(4) = { FUN(y,2) }") != std::string::npos);
  REQUIRE(text.find("Gamma(x) = { FUN(y,2) }") != std::string::npos);
  REQUIRE(text.find("Gamma(y)") == std::string::npos);
}
