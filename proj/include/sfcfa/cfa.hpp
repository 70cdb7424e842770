#pragma once

#include <string>
#include <vector>

#include "sfcfa/absval.hpp"
#include "sfcfa/constraints.hpp"
#include "sfcfa/term.hpp"

namespace sfcfa {

using CombCS = ConstraintSystem<Label, AbsVal>;
using CombConstraint = CombCS::Constraint;
using CombSolution = CombCS::Solution;

/// t_{S^n}: the applicative shape an S^n contractum takes, with dummy
/// leaves standing in for the recorded arguments.
inline LTermPtr s_template(BaseLabel n) {
  return app(app(dummy("f", Label(n, SubName::S_0)), dummy("x", Label(n, SubName::S_2)),
                 Label(n, SubName::S_L)),
             app(dummy("g", Label(n, SubName::S_1)), dummy("x", Label(n, SubName::S_2)),
                 Label(n, SubName::S_R)),
             Label(n, SubName::S_3));
}

/// t_{F^n}: the applicative shape of an F^n factorisation contractum.
inline LTermPtr f_template(BaseLabel n) {
  return app(app(dummy("y", Label(n, SubName::F_2)), dummy("u", Label(n, SubName::F_L)),
                 Label(n, SubName::F_M)),
             dummy("v", Label(n, SubName::F_R)), Label(n, SubName::F_3));
}

/// Clause families a corrupted solver can drop; used by the mutation
/// harness to demonstrate the coherence checks have teeth.
enum class Mutation {
  None,
  DropK1Flow,   // omit the K_1 result flow Gamma(n.K.0) <= Gamma(l3)
  DropS2Flow,   // omit the S_2 result flow Gamma(n.S.3) <= Gamma(l3)
  DropF2Flow,   // omit the F_2 result flow Gamma(n.F.3) <= Gamma(l3)
  DropFAtomBranch,  // omit the F atom-case constraint entirely
};

/// One solved analysis, kept with the term it came from.
struct CombAnalysis {
  LTermPtr term;
  Calculus calculus;
  CombSolution solution;
};

namespace detail {

inline bool match_any_comb(const AbsVal& v) { return std::holds_alternative<CombVal>(v); }

}  // namespace detail

}  // namespace sfcfa
