#pragma once

#include <string>
#include <vector>

#include "sfcfa/cfa.hpp"
#include "sfcfa/cfa_sk.hpp"

namespace sfcfa {

namespace detail {

// The SF application clause: the quantified families for S and F, plus the
// application-witness constraint that lets the analysis factorise terms
// abstractly.
inline void sf_app_clause(Label l1, Label l2, Label l3, Mutation mut,
                          std::vector<CombConstraint>& out) {
  out.push_back(CombConstraint{CombCS::ExistsPair{l3, l1, l2, app_pair(l1, l2), pair_of}});
  out.push_back(CombCS::forall_in(
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
              std::vector<CombConstraint> cs{CombCS::subset(l2, Label(n, SubName::S_2))};
              if (mut != Mutation::DropS2Flow)
                cs.push_back(CombCS::subset(Label(n, SubName::S_3), l3));
              cs.push_back(CombCS::activate(n));
              return cs;
            }
          }
        } else if (c.kind == AtomKind::F) {
          switch (c.arity) {
            case 0:
              return {CombCS::subset(l2, Label(n, SubName::F_0)),
                      CombCS::member(comb(AtomKind::F, 1, n), l3)};
            case 1:
              return {CombCS::subset(l2, Label(n, SubName::F_1)),
                      CombCS::member(comb(AtomKind::F, 2, n), l3)};
            case 2: {
              std::vector<CombConstraint> cs{CombCS::subset(l2, Label(n, SubName::F_2))};
              if (mut != Mutation::DropF2Flow)
                cs.push_back(CombCS::subset(Label(n, SubName::F_3), l3));
              cs.push_back(CombCS::activate(n));
              return cs;
            }
          }
        }
        return {};
      },
      "app @^" + to_string(l3)));
}

inline void sf_template_clauses(const LTermPtr& tmpl, Mutation mut,
                                std::vector<CombConstraint>& out) {
  if (!tmpl->is_app()) return;
  sf_template_clauses(tmpl->left, mut, out);
  sf_template_clauses(tmpl->right, mut, out);
  sf_app_clause(tmpl->left->label, tmpl->right->label, tmpl->label, mut, out);
}

inline bool is_head_atom_abstraction(const AbsVal& v) {
  return is_comb(v, AtomKind::S, 0) || is_comb(v, AtomKind::F, 0);
}

inline bool is_partial_application_abstraction(const AbsVal& v) {
  return is_comb(v, AtomKind::S, 1) || is_comb(v, AtomKind::S, 2) ||
         is_comb(v, AtomKind::F, 1) || is_comb(v, AtomKind::F, 2);
}

inline void gen_sf_rec(const LTermPtr& t, Mutation mut, std::vector<CombConstraint>& out) {
  switch (t->kind) {
    case LTerm::Kind::Dummy:
      return;
    case LTerm::Kind::Atom: {
      BaseLabel n = t->label.base;
      if (t->atom == AtomKind::S) {
        out.push_back(CombCS::member(comb(AtomKind::S, 0, n), n));
        std::vector<CombConstraint> body;
        sf_template_clauses(s_template(n), mut, body);
        CombCS::Guard g;
        g.atoms.push_back(CombCS::ActivationOf{n});
        out.push_back(CombCS::guarded(std::move(g), std::move(body)));
      } else {
        out.push_back(CombCS::member(comb(AtomKind::F, 0, n), n));
        Label f0(n, SubName::F_0);
        // Atom case: the first argument may evaluate to a bare S or F, so
        // the result may be the second argument.
        if (mut != Mutation::DropFAtomBranch) {
          CombCS::Guard atom_guard;
          atom_guard.atoms.push_back(CombCS::ActivationOf{n});
          atom_guard.atoms.push_back(
              CombCS::AnyIn{f0, is_head_atom_abstraction, "some S_0/F_0 in Gamma(" + to_string(f0) + ")"});
          out.push_back(CombCS::guarded(
              std::move(atom_guard),
              {CombCS::subset(Label(n, SubName::F_1), Label(n, SubName::F_3))}));
        }
        // Factorisation case: the first argument may evaluate to a partial
        // application, so the factors recorded in its application
        // witnesses flow into the template's leaves.
        CombCS::Guard factor_guard;
        factor_guard.atoms.push_back(CombCS::ActivationOf{n});
        factor_guard.atoms.push_back(CombCS::AnyIn{
            f0, is_partial_application_abstraction,
            "some S_1/S_2/F_1/F_2 in Gamma(" + to_string(f0) + ")"});
        std::vector<CombConstraint> body;
        sf_template_clauses(f_template(n), mut, body);
        body.push_back(CombCS::forall_in(
            f0, is_pair,
            [n](const AbsVal& v) -> std::vector<CombConstraint> {
              auto p = pair_of(v);
              return {CombCS::subset(p->first, Label(n, SubName::F_L)),
                      CombCS::subset(p->second, Label(n, SubName::F_R))};
            },
            "factorisation of Gamma(" + to_string(f0) + ")"));
        out.push_back(CombCS::guarded(std::move(factor_guard), std::move(body)));
      }
      return;
    }
    case LTerm::Kind::App:
      gen_sf_rec(t->left, mut, out);
      gen_sf_rec(t->right, mut, out);
      sf_app_clause(t->left->label, t->right->label, t->label, mut, out);
      return;
  }
}

}  // namespace detail

/// Constraints of the SF analysis over a labelled term.
inline std::vector<CombConstraint> gen_sf(const LTermPtr& t, Mutation mut = Mutation::None) {
  check_calculus(t, Calculus::SF);
  std::vector<CombConstraint> out;
  detail::gen_sf_rec(t, mut, out);
  return out;
}

/// Direct satisfaction check; the application witness is evaluated as the
/// existential unless opts.weaken_exists asks for the deliberately broken
/// canonical-only form.
inline bool models_sf(const CombSolution& env, const LTermPtr& t,
                      std::vector<std::string>* violations = nullptr,
                      const CombCS::CheckOptions& opts = {}, Mutation mut = Mutation::None) {
  return CombCS::check(gen_sf(t, mut), env, violations, opts);
}

inline CombAnalysis analyze_sf(const LTermPtr& t, Mutation mut = Mutation::None) {
  return CombAnalysis{t, Calculus::SF, CombCS::solve(gen_sf(t, mut))};
}

/// Dispatch on the calculus.
inline CombAnalysis analyze(const LTermPtr& t, Calculus c, Mutation mut = Mutation::None) {
  return c == Calculus::SK ? analyze_sk(t, mut) : analyze_sf(t, mut);
}

inline bool models(const CombSolution& env, const LTermPtr& t, Calculus c,
                   std::vector<std::string>* violations = nullptr,
                   const CombCS::CheckOptions& opts = {}, Mutation mut = Mutation::None) {
  return c == Calculus::SK ? models_sk(env, t, violations, mut)
                           : models_sf(env, t, violations, opts, mut);
}

}  // namespace sfcfa
