#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sfcfa/cfa.hpp"
#include "sfcfa/lambda.hpp"

namespace sfcfa {

/// A solved analysis in presentation form: the labelled term, the nonempty
/// Gamma rows with their values rendered in the fixed lexicon, and the
/// activated base labels. Lays out like the worked solution tables.
struct SolutionDocument {
  std::string calculus;  // "sk", "sf" or "lambda"
  std::string term;
  std::uint64_t iterations = 0;
  // Rows sorted: labels first in label order, then variables by name.
  std::vector<std::pair<std::string, std::vector<std::string>>> gamma;
  std::vector<BaseLabel> phi;

  std::string text() const {
    std::string out;
    out += term;
    out += "\n\n";
    for (const auto& [key, vals] : gamma) {
      out += "Gamma(" + key + ") = { ";
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ", ";
        out += vals[i];
      }
      out += " }\n";
    }
    for (BaseLabel n : phi) out += "phi(" + std::to_string(n) + ") = true\n";
    out += "calculus: " + calculus + ", iterations: " + std::to_string(iterations) + "\n";
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["calculus"] = calculus;
    j["term"] = term;
    j["iterations"] = iterations;
    nlohmann::ordered_json g = nlohmann::ordered_json::object();
    for (const auto& [key, vals] : gamma) g[key] = vals;
    j["gamma"] = std::move(g);
    j["phi"] = phi;
    return j;
  }

  static SolutionDocument from_json(const nlohmann::ordered_json& j) {
    SolutionDocument doc;
    doc.calculus = j.at("calculus").get<std::string>();
    doc.term = j.at("term").get<std::string>();
    doc.iterations = j.at("iterations").get<std::uint64_t>();
    for (const auto& [key, vals] : j.at("gamma").items())
      doc.gamma.emplace_back(key, vals.get<std::vector<std::string>>());
    doc.phi = j.at("phi").get<std::vector<BaseLabel>>();
    return doc;
  }

  bool operator==(const SolutionDocument&) const = default;
};

inline SolutionDocument document_of(const CombAnalysis& a) {
  SolutionDocument doc;
  doc.calculus = std::string(to_string(a.calculus));
  doc.term = to_string(a.term);
  doc.iterations = a.solution.iterations;
  std::vector<Label> keys;
  for (const auto& [label, vals] : a.solution.gamma)
    if (!vals.empty()) keys.push_back(label);
  std::sort(keys.begin(), keys.end());
  for (const Label& l : keys) {
    std::vector<std::string> vals;
    for (const AbsVal& v : a.solution.at(l)) vals.push_back(to_display_string(v));
    doc.gamma.emplace_back(to_string(l), std::move(vals));
  }
  doc.phi.assign(a.solution.phi.begin(), a.solution.phi.end());
  return doc;
}

inline SolutionDocument document_of_lambda(const LamPtr& e, const LamSolution& sol) {
  SolutionDocument doc;
  doc.calculus = "lambda";
  doc.term = to_string(e, true);
  doc.iterations = sol.iterations;
  std::vector<Label> labels;
  std::vector<std::string> vars;
  for (const auto& [key, vals] : sol.gamma) {
    if (vals.empty()) continue;
    if (const auto* l = std::get_if<Label>(&key))
      labels.push_back(*l);
    else
      vars.push_back(std::get<std::string>(key));
  }
  std::sort(labels.begin(), labels.end());
  std::sort(vars.begin(), vars.end());
  auto add = [&](const LamKey& key, const std::string& shown) {
    std::vector<std::string> vals;
    for (const AbsLam& v : sol.at(key)) vals.push_back(to_display_string(v));
    doc.gamma.emplace_back(shown, std::move(vals));
  };
  for (const Label& l : labels) add(LamKey(l), to_string(l));
  for (const std::string& x : vars) add(LamKey(x), x);
  return doc;
}

}  // namespace sfcfa
