#pragma once

#include <string>
#include <vector>

#include "sfcfa/cfa.hpp"

namespace sfcfa {

namespace detail {

// The per-application clause of the SK analysis: for every combinator
// value that may occur in operator position, record the argument at the
// matching sublabel and either bump the arity seen at the application or
// route the contractum's result, activating the operator's template when
// it can fire.
inline CombConstraint sk_app_clause(Label l1, Label l2, Label l3, Mutation mut) {
  return CombCS::forall_in(
      l1, match_any_comb,
      [l2, l3, mut](const AbsVal& v) -> std::vector<CombConstraint> {
        const CombVal& c = std::get<CombVal>(v);
        BaseLabel n = c.n;
        if (c.kind == AtomKind::S) {
          switch (c.arity) {
            case 0:
              return {CombCS::subset(l2, Label(n, SubName::S_0)),
                      CombCS::member(comb(AtomKind::S, 1, n), l3)};
            case 1:
              return {CombCS::subset(l2, Label(n, SubName::S_1)),
                      CombCS::member(comb(AtomKind::S, 2, n), l3)};
            case 2: {
              std::vector<CombConstraint> out{CombCS::subset(l2, Label(n, SubName::S_2))};
              if (mut != Mutation::DropS2Flow)
                out.push_back(CombCS::subset(Label(n, SubName::S_3), l3));
              out.push_back(CombCS::activate(n));
              return out;
            }
          }
        } else if (c.kind == AtomKind::K) {
          switch (c.arity) {
            case 0:
              return {CombCS::subset(l2, Label(n, SubName::K_0)),
                      CombCS::member(comb(AtomKind::K, 1, n), l3)};
            case 1:
              if (mut == Mutation::DropK1Flow) return {};
              return {CombCS::subset(Label(n, SubName::K_0), l3)};
          }
        }
        return {};
      },
      "app @^" + to_string(l3));
}

inline void gen_sk_rec(const LTermPtr& t, Mutation mut, std::vector<CombConstraint>& out) {
  switch (t->kind) {
    case LTerm::Kind::Dummy:
      return;
    case LTerm::Kind::Atom: {
      BaseLabel n = t->label.base;
      if (t->atom == AtomKind::S) {
        out.push_back(CombCS::member(comb(AtomKind::S, 0, n), n));
        // Contractum constraints, gated on the S actually receiving all
        // three arguments somewhere.
        LTermPtr tmpl = s_template(n);
        std::vector<CombConstraint> body;
        body.push_back(sk_app_clause(tmpl->left->left->label, tmpl->left->right->label,
                                     tmpl->left->label, mut));
        body.push_back(sk_app_clause(tmpl->right->left->label, tmpl->right->right->label,
                                     tmpl->right->label, mut));
        body.push_back(sk_app_clause(tmpl->left->label, tmpl->right->label, tmpl->label, mut));
        CombCS::Guard g;
        g.atoms.push_back(CombCS::ActivationOf{n});
        out.push_back(CombCS::guarded(std::move(g), std::move(body)));
      } else {
        out.push_back(CombCS::member(comb(AtomKind::K, 0, n), n));
      }
      return;
    }
    case LTerm::Kind::App:
      gen_sk_rec(t->left, mut, out);
      gen_sk_rec(t->right, mut, out);
      out.push_back(sk_app_clause(t->left->label, t->right->label, t->label, mut));
      return;
  }
}

}  // namespace detail

/// Constraints of the SK analysis over a labelled term.
inline std::vector<CombConstraint> gen_sk(const LTermPtr& t, Mutation mut = Mutation::None) {
  check_calculus(t, Calculus::SK);
  std::vector<CombConstraint> out;
  detail::gen_sk_rec(t, mut, out);
  return out;
}

/// Direct satisfaction check, independent of the solver.
inline bool models_sk(const CombSolution& env, const LTermPtr& t,
                      std::vector<std::string>* violations = nullptr,
                      Mutation mut = Mutation::None) {
  return CombCS::check(gen_sk(t, mut), env, violations);
}

inline CombAnalysis analyze_sk(const LTermPtr& t, Mutation mut = Mutation::None) {
  return CombAnalysis{t, Calculus::SK, CombCS::solve(gen_sk(t, mut))};
}

}  // namespace sfcfa
