#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sfcfa/cfa_sf.hpp"
#include "sfcfa/cfa_sk.hpp"
#include "sfcfa/generate.hpp"
#include "sfcfa/reduction.hpp"
#include "sfcfa/translate.hpp"

namespace sfcfa {

/// Outcome of a randomized coherence run: every reduct of every trial term,
/// up to the requested depth, must stay satisfied by the least solution of
/// the original term, with the root abstraction only shrinking.
struct CoherenceReport {
  std::uint64_t trials = 0;
  std::uint64_t checked_steps = 0;
  std::uint64_t seed = 0;
  struct Failure {
    std::string term;
    std::string step;
    std::string what;
  };
  std::vector<Failure> failures;
};

namespace detail {

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  // Distinct, order-independent stream per trial.
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
  rng.discard(8);
  return rng;
}

}  // namespace detail

inline CoherenceReport check_coherence(Calculus calc, int trials, int max_size, int depth,
                                       std::uint64_t seed, Mutation mut = Mutation::None,
                                       bool weaken_exists = false) {
  CoherenceReport report;
  report.seed = seed;
  CombCS::CheckOptions opts;
  opts.weaken_exists = weaken_exists;
  for (int trial = 0; trial < trials; ++trial) {
    ++report.trials;
    std::mt19937_64 rng = detail::trial_rng(seed, static_cast<std::uint64_t>(trial));
    LTermPtr t = random_term(calc, max_size, rng);
    CombAnalysis a = analyze(t, calc, mut);
    std::string term_text = to_string(t);

    auto fail = [&](const std::string& step, const std::string& what) {
      report.failures.push_back({term_text, step, what});
    };
    auto first_of = [](const std::vector<std::string>& whats) {
      return whats.empty() ? std::string("unsatisfied") : whats.front();
    };

    std::vector<std::string> violations;
    if (!models(a.solution, t, calc, &violations, opts, mut))
      fail("<initial>", first_of(violations));

    std::set<std::string> seen{term_text};
    std::vector<LTermPtr> frontier{t};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
      std::vector<LTermPtr> next;
      for (const LTermPtr& u : frontier) {
        for (const auto& [redex, v] : all_one_step(u, calc)) {
          ++report.checked_steps;
          std::string step_text = to_string(redex.path) + " " + std::string(to_string(redex.rule));
          violations.clear();
          if (!models(a.solution, v, calc, &violations, opts, mut))
            fail(step_text + " -> " + to_string(v), first_of(violations));
          if (!a.solution.includes(v->label, u->label))
            fail(step_text, "Gamma(" + to_string(v->label) + ") escapes Gamma(" +
                                to_string(u->label) + ")");
          std::string key = to_string(v);
          if (seen.insert(key).second) next.push_back(v);
        }
      }
      frontier = std::move(next);
    }
  }
  return report;
}

/// The substitution-lemma regression: reducts of analysed terms are
/// satisfaction-preserving under the real existential witness check, and
/// stop being so when the witness check is weakened to the canonical form.
struct SubstLemmaReport {
  int instances = 0;
  int failures_full = 0;
  int failures_weakened = 0;
};

inline SubstLemmaReport substitution_instances_sf(int instances_wanted, int max_size,
                                                  std::uint64_t seed) {
  SubstLemmaReport report;
  CombCS::CheckOptions weakened;
  weakened.weaken_exists = true;
  for (std::uint64_t trial = 0; report.instances < instances_wanted; ++trial) {
    std::mt19937_64 rng = detail::trial_rng(seed, trial);
    LTermPtr t = random_term(Calculus::SF, max_size, rng);
    CombAnalysis a = analyze_sf(t);
    for (const auto& [redex, reduct] : all_one_step(t, Calculus::SF)) {
      if (report.instances >= instances_wanted) break;
      ++report.instances;
      if (!models_sf(a.solution, reduct)) ++report.failures_full;
      if (!models_sf(a.solution, reduct, nullptr, weakened)) ++report.failures_weakened;
    }
  }
  return report;
}

/// The precision-invariance suite: at every label of the original SK term
/// (with a K's argument record read at its replacement's F.1 slot), the SK
/// and SF solutions agree exactly under the value correspondence, and the
/// factorisation branch of the emulated K never becomes reachable.
struct InvarianceReport {
  int trials = 0;
  std::vector<std::string> failures;
};

inline InvarianceReport check_invariance(int trials, int max_size, std::uint64_t seed) {
  InvarianceReport report;
  for (int trial = 0; trial < trials; ++trial) {
    ++report.trials;
    std::mt19937_64 rng = detail::trial_rng(seed, static_cast<std::uint64_t>(trial));
    LTermPtr t = random_term(Calculus::SK, max_size, rng);
    CombAnalysis sk = analyze_sk(t);
    auto [tf, mapping] = sk_to_sf(t);
    CombAnalysis sf = analyze_sf(tf);

    auto compare_at = [&](const Label& sk_label, const Label& sf_label) {
      std::set<AbsVal> expected;
      for (const AbsVal& v : sk.solution.at(sk_label)) expected.insert(correspond(v, mapping));
      std::set<AbsVal> actual;
      for (const AbsVal& v : sf.solution.at(sf_label))
        if (!is_pair(v)) actual.insert(v);
      if (expected != actual)
        report.failures.push_back("term " + to_string(t) + ": Gamma(" + to_string(sk_label) +
                                  ") does not correspond to Gamma(" + to_string(sf_label) + ")");
    };

    std::vector<const LTerm*> stack{t.get()};
    while (!stack.empty()) {
      const LTerm* n = stack.back();
      stack.pop_back();
      if (n->is_app()) {
        compare_at(n->label, n->label);
        stack.push_back(n->left.get());
        stack.push_back(n->right.get());
      } else if (n->atom == AtomKind::S) {
        BaseLabel b = n->label.base;
        compare_at(Label(b), Label(b));
        for (SubName s : {SubName::S_0, SubName::S_1, SubName::S_2, SubName::S_3, SubName::S_L,
                          SubName::S_R})
          compare_at(Label(b, s), Label(b, s));
      } else {
        BaseLabel b = n->label.base;
        compare_at(Label(b), Label(b));
        const KEntry& entry = mapping.entries.at(b);
        compare_at(Label(b, SubName::K_0), Label(entry.left_f, SubName::F_1));
      }
    }

    for (const auto& [n, entry] : mapping.entries) {
      for (const AbsVal& v : sf.solution.at(Label(entry.left_f, SubName::F_0)))
        if (detail::is_partial_application_abstraction(v))
          report.failures.push_back("term " + to_string(t) + ": factor branch of K^" +
                                    std::to_string(n) + "'s F is reachable");
    }
  }
  return report;
}

}  // namespace sfcfa
