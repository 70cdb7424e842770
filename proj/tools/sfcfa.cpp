// Command-line front end: parse, evaluate, analyse and translate terms of
// the SK and SF combinatory calculi (plus 0CFA for plain lambda terms),
// and run the randomized coherence harness.
//
// Exit codes: 0 success, 1 usage/parse error, 2 property failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sfcfa/cfa_sf.hpp"
#include "sfcfa/cfa_sk.hpp"
#include "sfcfa/coherence.hpp"
#include "sfcfa/lambda.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/reduction.hpp"
#include "sfcfa/solution_doc.hpp"
#include "sfcfa/translate.hpp"

namespace {

using namespace sfcfa;

std::string read_source(const std::string& inline_term, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return inline_term;
}

Calculus comb_calculus(const std::string& name) {
  if (name == "sk") return Calculus::SK;
  if (name == "sf") return Calculus::SF;
  throw CLI::ValidationError("--calculus", "expected sk or sf");
}

int cmd_analyze(const std::string& source, const std::string& calculus,
                const std::string& format) {
  SolutionDocument doc;
  if (calculus == "lambda") {
    LamPtr e = parse_lambda(source);
    doc = document_of_lambda(e, analyze_lambda(e));
  } else {
    LTermPtr t = parse_labelled(source, comb_calculus(calculus));
    doc = document_of(analyze(t, comb_calculus(calculus)));
  }
  if (format == "text")
    std::cout << doc.text();
  else
    std::cout << doc.to_json().dump(2) << "\n";
  return 0;
}

int cmd_eval(const std::string& source, const std::string& calculus, std::uint64_t fuel,
             bool trace) {
  Calculus calc = comb_calculus(calculus);
  LTermPtr t = parse_labelled(source, calc);
  Trace tr = eval(t, calc, fuel);
  if (trace) std::cout << to_text(tr);
  std::cout << to_string(tr.result) << "\n";
  std::cout << "steps: " << tr.fuel_used
            << (tr.outcome == Outcome::NormalForm ? " (normal form)" : " (fuel exhausted)")
            << "\n";
  return 0;
}

int cmd_translate(const std::string& source, const std::string& direction) {
  if (direction == "sk-to-sf") {
    auto [t, mapping] = sk_to_sf(parse_labelled(source, Calculus::SK));
    std::cout << to_string(t) << "\n";
    for (const auto& [n, entry] : mapping.entries)
      std::cout << "K^" << n << " -> F^" << entry.left_f << " @^" << entry.app_label << " F^"
                << entry.right_f << "\n";
    return 0;
  }
  if (direction == "lambda-to-sk") {
    std::cout << to_string(unlambda_of(parse_lambda(source))) << "\n";
    return 0;
  }
  if (direction == "sk-to-lambda") {
    LTermPtr t = parse_labelled(source, Calculus::SK);
    std::cout << to_string(lambda_of(t, VarNaming::Plain), false) << "\n";
    return 0;
  }
  throw CLI::ValidationError("--direction",
                             "expected sk-to-sf, lambda-to-sk or sk-to-lambda");
}

Mutation parse_mutation(const std::string& name) {
  if (name == "none") return Mutation::None;
  if (name == "drop-k1-flow") return Mutation::DropK1Flow;
  if (name == "drop-s2-flow") return Mutation::DropS2Flow;
  if (name == "drop-f2-flow") return Mutation::DropF2Flow;
  if (name == "drop-f-atom-branch") return Mutation::DropFAtomBranch;
  throw CLI::ValidationError("--mutate", "unknown clause family");
}

int cmd_check_coherence(const std::string& calculus, int trials, int max_size, int depth,
                        std::uint64_t seed, const std::string& mutate, bool weaken_exists) {
  CoherenceReport r = check_coherence(comb_calculus(calculus), trials, max_size, depth, seed,
                                      parse_mutation(mutate), weaken_exists);
  std::cout << "trials: " << r.trials << "\n";
  std::cout << "checked steps: " << r.checked_steps << "\n";
  std::cout << "seed: " << r.seed << "\n";
  std::cout << "failures: " << r.failures.size() << "\n";
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (++shown > 10) {
      std::cout << "  ...\n";
      break;
    }
    std::cout << "  " << f.term << " | " << f.step << " | " << f.what << "\n";
  }
  return r.failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"0CFA and labelled reduction for SK- and SF-calculus"};
  app.require_subcommand(1);

  std::string term, file, calculus = "sk", format = "text", direction, mutate = "none";
  std::uint64_t fuel = 10000, seed = 42;
  bool trace = false, weaken_exists = false;
  int trials = 500, max_size = 12, depth = 5;

  auto* analyze_cmd = app.add_subcommand("analyze", "solve the analysis and print the table");
  analyze_cmd->add_option("term", term, "term source");
  analyze_cmd->add_option("--file", file, "read the term from a file");
  analyze_cmd->add_option("--calculus", calculus, "lambda, sk or sf")->capture_default_str();
  analyze_cmd->add_option("--format", format, "text or structured")->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "reduce a term to normal form");
  eval_cmd->add_option("term", term, "term source");
  eval_cmd->add_option("--file", file, "read the term from a file");
  eval_cmd->add_option("--calculus", calculus, "sk or sf")->capture_default_str();
  eval_cmd->add_option("--fuel", fuel, "step budget")->capture_default_str();
  eval_cmd->add_flag("--trace", trace, "print one line per step");

  auto* tr_cmd = app.add_subcommand("translate", "translate between calculi");
  tr_cmd->add_option("term", term, "term source");
  tr_cmd->add_option("--file", file, "read the term from a file");
  tr_cmd->add_option("--direction", direction, "sk-to-sf, lambda-to-sk or sk-to-lambda")
      ->required();

  auto* coh_cmd = app.add_subcommand("check-coherence",
                                     "randomized satisfaction-preservation harness");
  coh_cmd->add_option("--calculus", calculus, "sk or sf")->capture_default_str();
  coh_cmd->add_option("--trials", trials, "number of random terms")->capture_default_str();
  coh_cmd->add_option("--max-size", max_size, "maximum atoms per term")->capture_default_str();
  coh_cmd->add_option("--depth", depth, "reduction depth to explore")->capture_default_str();
  coh_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  coh_cmd->add_option("--mutate", mutate,
                      "drop a clause family: none, drop-k1-flow, drop-s2-flow, drop-f2-flow, "
                      "drop-f-atom-branch")
      ->capture_default_str();
  coh_cmd->add_flag("--weaken-exists", weaken_exists,
                    "check application witnesses in canonical-only form");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(read_source(term, file), calculus, format);
    if (eval_cmd->parsed()) return cmd_eval(read_source(term, file), calculus, fuel, trace);
    if (tr_cmd->parsed()) return cmd_translate(read_source(term, file), direction);
    if (coh_cmd->parsed())
      return cmd_check_coherence(calculus, trials, max_size, depth, seed, mutate, weaken_exists);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CalculusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
