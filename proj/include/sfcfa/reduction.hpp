#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfcfa/term.hpp"

namespace sfcfa {

enum class Rule : std::uint8_t { S, K, FAtom, FFactor };

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::S: return "S-rule";
    case Rule::K: return "K-rule";
    case Rule::FAtom: return "F-atom-rule";
    case Rule::FFactor: return "F-factor-rule";
  }
  return "?";
}

enum class Dir : std::uint8_t { Left, Right };

/// Position of a contracted redex: path from the root plus the rule used.
struct Redex {
  std::vector<Dir> path;
  Rule rule;
};

inline std::string to_string(const std::vector<Dir>& path) {
  if (path.empty()) return ".";
  std::string out;
  for (Dir d : path) out += d == Dir::Left ? 'L' : 'R';
  return out;
}

struct Step {
  LTermPtr before;
  Redex redex;
  LTermPtr after;
};

enum class Outcome : std::uint8_t { NormalForm, FuelExhausted };

struct Trace {
  std::vector<Step> steps;
  LTermPtr result;
  std::uint64_t fuel_used = 0;
  Outcome outcome = Outcome::NormalForm;
};

/// One line per step: "<path> <rule> <term-after>".
inline std::string to_text(const Trace& tr, bool with_labels = true) {
  std::string out;
  for (const Step& s : tr.steps) {
    out += to_string(s.redex.path);
    out += ' ';
    out += to_string(s.redex.rule);
    out += ' ';
    out += to_string(s.after, with_labels);
    out += '\n';
  }
  return out;
}

/// A factorable form has S or F at the head of its spine with at most two
/// arguments applied, so it cannot be reduced at the outermost level.
inline bool is_factorable_form(const LTermPtr& t) {
  const LTerm* n = t.get();
  int args = 0;
  while (n->is_app()) {
    ++args;
    n = n->left.get();
  }
  if (!n->is_atom()) return false;
  return (n->atom == AtomKind::S || n->atom == AtomKind::F) && args <= 2;
}

struct TopStep {
  LTermPtr term;
  Rule rule;
};

/// Contracts the root redex of an SK term, if the root completes a rule:
///   K^{l2} @^{l3} x @^{l4} y            -> x
///   S^{l3} @^{l4} f @^{l5} g @^{l6} x   -> (f @^{l3.S.L} x) @^{l3.S.3} (g @^{l3.S.R} x)
inline std::optional<TopStep> top_step_sk(const LTermPtr& t) {
  if (!t->is_app()) return std::nullopt;
  const LTermPtr& l1 = t->left;
  // K with exactly two arguments at the root.
  if (l1->is_app() && l1->left->is_atom() && l1->left->atom == AtomKind::K)
    return TopStep{l1->right, Rule::K};
  // S with exactly three arguments at the root.
  if (l1->is_app() && l1->left->is_app() && l1->left->left->is_atom() &&
      l1->left->left->atom == AtomKind::S) {
    BaseLabel n = l1->left->left->label.base;
    const LTermPtr& f = l1->left->right;
    const LTermPtr& g = l1->right;
    const LTermPtr& x = t->right;
    return TopStep{app(app(f, x, Label(n, SubName::S_L)), app(g, x, Label(n, SubName::S_R)),
                       Label(n, SubName::S_3)),
                   Rule::S};
  }
  return std::nullopt;
}

/// Contracts the root redex of an SF term, if the root completes a rule:
///   S as above;
///   F^{l3} @^{l4} f @^{l5} x @^{l6} y -> x                      if f is the atom S or F
///   F^{l3} @^{l4} (u @^{l2} v) @^{l5} x @^{l6} y
///       -> (y @^{l3.F.M} u) @^{l3.F.3} v                        if u v is a factorable form
/// An F whose first argument is neither yields no redex; the argument has
/// to be reduced first.
inline std::optional<TopStep> top_step_sf(const LTermPtr& t) {
  if (!t->is_app()) return std::nullopt;
  const LTermPtr& l1 = t->left;
  if (l1->is_app() && l1->left->is_app() && l1->left->left->is_atom()) {
    AtomKind head = l1->left->left->atom;
    BaseLabel n = l1->left->left->label.base;
    const LTermPtr& a = l1->left->right;  // first argument
    const LTermPtr& b = l1->right;        // second
    const LTermPtr& c = t->right;         // third
    if (head == AtomKind::S)
      return TopStep{app(app(a, c, Label(n, SubName::S_L)), app(b, c, Label(n, SubName::S_R)),
                         Label(n, SubName::S_3)),
                     Rule::S};
    if (head == AtomKind::F) {
      if (a->is_atom() && (a->atom == AtomKind::S || a->atom == AtomKind::F))
        return TopStep{b, Rule::FAtom};
      if (a->is_app() && is_factorable_form(a))
        return TopStep{app(app(c, a->left, Label(n, SubName::F_M)), a->right,
                           Label(n, SubName::F_3)),
                       Rule::FFactor};
    }
  }
  return std::nullopt;
}

inline std::optional<TopStep> top_step(const LTermPtr& t, Calculus calc) {
  return calc == Calculus::SK ? top_step_sk(t) : top_step_sf(t);
}

/// Every one-step reduct of t, in pre-order on redex positions. The
/// surrounding context keeps its labels.
inline std::vector<std::pair<Redex, LTermPtr>> all_one_step(const LTermPtr& t, Calculus calc) {
  std::vector<std::pair<Redex, LTermPtr>> out;
  if (auto top = top_step(t, calc))
    out.push_back({Redex{{}, top->rule}, top->term});
  if (t->is_app()) {
    for (auto& [rx, sub] : all_one_step(t->left, calc)) {
      rx.path.insert(rx.path.begin(), Dir::Left);
      out.push_back({std::move(rx), app(sub, t->right, t->label)});
    }
    for (auto& [rx, sub] : all_one_step(t->right, calc)) {
      rx.path.insert(rx.path.begin(), Dir::Right);
      out.push_back({std::move(rx), app(t->left, sub, t->label)});
    }
  }
  return out;
}

namespace detail {

// First redex in pre-order: the root before either subtree, left before
// right. On closed terms this subsumes the head-first refinement for F,
// since a non-factorable first argument sits inside the left subtree.
inline std::optional<std::pair<LTermPtr, Redex>> first_step(const LTermPtr& t, Calculus calc) {
  if (auto top = top_step(t, calc)) return {{top->term, Redex{{}, top->rule}}};
  if (t->is_app()) {
    if (auto l = first_step(t->left, calc)) {
      l->second.path.insert(l->second.path.begin(), Dir::Left);
      return {{app(l->first, t->right, t->label), std::move(l->second)}};
    }
    if (auto r = first_step(t->right, calc)) {
      r->second.path.insert(r->second.path.begin(), Dir::Right);
      return {{app(t->left, r->first, t->label), std::move(r->second)}};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Deterministic leftmost-outermost evaluation, stopping at normal form or
/// when fuel runs out.
inline Trace eval(LTermPtr t, Calculus calc, std::uint64_t fuel = 10000) {
  Trace tr;
  while (tr.fuel_used < fuel) {
    auto next = detail::first_step(t, calc);
    if (!next) {
      tr.result = t;
      tr.outcome = Outcome::NormalForm;
      return tr;
    }
    ++tr.fuel_used;
    tr.steps.push_back(Step{t, std::move(next->second), next->first});
    t = next->first;
  }
  tr.result = t;
  tr.outcome = detail::first_step(t, calc) ? Outcome::FuelExhausted : Outcome::NormalForm;
  return tr;
}

}  // namespace sfcfa
