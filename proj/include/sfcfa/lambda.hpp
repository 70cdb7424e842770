#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sfcfa/constraints.hpp"
#include "sfcfa/labels.hpp"
#include "sfcfa/parse.hpp"
#include "sfcfa/term.hpp"

namespace sfcfa {

struct LamExpr;
using LamPtr = std::shared_ptr<const LamExpr>;

/// Labelled lambda expression: x^l | e1 @^l e2 | \^l x. e
///
/// A variable has an operational name and an analysis family. They differ
/// only after a capture-avoiding rename: the fresh name keeps substitution
/// honest while the family keeps the renamed binder inside the abstract
/// variable the analysis already tracks (the analysis conflates bindings
/// per name, so an alpha-variant must not leave its family).
struct LamExpr {
  enum class Kind : std::uint8_t { Var, App, Lam };
  Kind kind;
  Label label;
  std::string name;    // Var, Lam: operational name
  std::string family;  // Var, Lam: analysis name (defaults to name)
  LamPtr e1, e2;       // App: both; Lam: e1 is the body
};

inline LamPtr lvar(std::string x, Label l, std::string family = {}) {
  auto e = std::make_shared<LamExpr>();
  e->kind = LamExpr::Kind::Var;
  e->family = family.empty() ? x : std::move(family);
  e->name = std::move(x);
  e->label = l;
  return e;
}

inline LamPtr lapp(LamPtr f, LamPtr a, Label l) {
  auto e = std::make_shared<LamExpr>();
  e->kind = LamExpr::Kind::App;
  e->e1 = std::move(f);
  e->e2 = std::move(a);
  e->label = l;
  return e;
}

inline LamPtr lam(std::string x, LamPtr body, Label l, std::string family = {}) {
  auto e = std::make_shared<LamExpr>();
  e->kind = LamExpr::Kind::Lam;
  e->family = family.empty() ? x : std::move(family);
  e->name = std::move(x);
  e->e1 = std::move(body);
  e->label = l;
  return e;
}

inline bool equal(const LamPtr& a, const LamPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->label != b->label) return false;
  switch (a->kind) {
    case LamExpr::Kind::Var: return a->name == b->name;
    case LamExpr::Kind::Lam: return a->name == b->name && equal(a->e1, b->e1);
    case LamExpr::Kind::App: return equal(a->e1, b->e1) && equal(a->e2, b->e2);
  }
  return false;
}

inline void free_vars(const LamPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (e->kind) {
    case LamExpr::Kind::Var:
      if (!bound.count(e->name)) out.insert(e->name);
      return;
    case LamExpr::Kind::App:
      free_vars(e->e1, bound, out);
      free_vars(e->e2, bound, out);
      return;
    case LamExpr::Kind::Lam: {
      bool added = bound.insert(e->name).second;
      free_vars(e->e1, bound, out);
      if (added) bound.erase(e->name);
      return;
    }
  }
}

inline std::set<std::string> free_vars(const LamPtr& e) {
  std::set<std::string> bound, out;
  free_vars(e, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing and parsing. Surface: `\x. e`, juxtaposition, optional labels
// as `x^0`, `\x^1. e`, `e1 @^4 e2`.

namespace detail {

inline void lam_print(const LamExpr& e, bool labels, bool app_left, bool app_right,
                      std::string& out) {
  switch (e.kind) {
    case LamExpr::Kind::Var:
      out += e.name;
      if (labels) out += "^" + to_string(e.label);
      return;
    case LamExpr::Kind::Lam: {
      // A lambda directly inside an application needs parentheses.
      bool wrap = app_left || app_right;
      if (wrap) out += '(';
      out += '\\';
      out += e.name;
      if (labels) out += "^" + to_string(e.label);
      out += '.';
      lam_print(*e.e1, labels, false, false, out);
      if (wrap) out += ')';
      return;
    }
    case LamExpr::Kind::App: {
      bool wrap = app_right;  // application as an argument needs parentheses
      if (wrap) out += '(';
      lam_print(*e.e1, labels, true, false, out);
      out += labels ? " @^" + to_string(e.label) + " " : " ";
      lam_print(*e.e2, labels, false, true, out);
      if (wrap) out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string to_string(const LamPtr& e, bool with_labels = true) {
  std::string out;
  detail::lam_print(*e, with_labels, false, false, out);
  return out;
}

namespace detail {

struct ParsedLam {
  enum class Kind : std::uint8_t { Var, App, Lam };
  Kind kind;
  std::string name;
  std::shared_ptr<ParsedLam> e1, e2;
  std::optional<Label> label;
};
using ParsedLamPtr = std::shared_ptr<ParsedLam>;

class LamParser {
 public:
  explicit LamParser(std::string_view src) : src_(src) {}

  ParsedLamPtr parse() {
    ParsedLamPtr e = parse_app();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::optional<Label> maybe_label() {
    if (pos_ >= src_.size() || src_[pos_] != '^') return std::nullopt;
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a label");
    // Optional ".A.tag" sublabel; a binder's own dot must stay untouched.
    if (pos_ + 2 < src_.size() && src_[pos_] == '.' &&
        std::isalpha(static_cast<unsigned char>(src_[pos_ + 1])) && src_[pos_ + 2] == '.') {
      std::size_t probe = pos_ + 3;
      std::size_t tag_start = probe;
      while (probe < src_.size() && std::isalnum(static_cast<unsigned char>(src_[probe])))
        ++probe;
      if (probe > tag_start) {
        try {
          Label l = parse_label(src_.substr(start, probe - start));
          pos_ = probe;
          return l;
        } catch (const std::invalid_argument&) {
          fail("malformed label");
        }
      }
    }
    try {
      return parse_label(src_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      fail("malformed label");
    }
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
      fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
            src_[pos_] == '\''))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return c == '(' || c == '\\' || std::isalpha(static_cast<unsigned char>(c));
  }

  ParsedLamPtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected an expression");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ParsedLamPtr e = parse_app();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '\\') {
      ++pos_;
      auto e = std::make_shared<ParsedLam>();
      e->kind = ParsedLam::Kind::Lam;
      e->name = ident();
      e->label = maybe_label();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != '.') fail("expected '.' after binder");
      ++pos_;
      e->e1 = parse_app();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<ParsedLam>();
      e->kind = ParsedLam::Kind::Var;
      e->name = ident();
      e->label = maybe_label();
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ParsedLamPtr parse_app() {
    ParsedLamPtr e = parse_primary();
    for (;;) {
      skip_ws();
      std::optional<Label> lab;
      if (pos_ < src_.size() && src_[pos_] == '@') {
        ++pos_;
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '^') fail("expected '^' after '@'");
        lab = maybe_label();
        auto n = std::make_shared<ParsedLam>();
        n->kind = ParsedLam::Kind::App;
        n->e1 = e;
        n->e2 = parse_primary();
        n->label = lab;
        e = n;
        continue;
      }
      if (!starts_primary()) return e;
      auto n = std::make_shared<ParsedLam>();
      n->kind = ParsedLam::Kind::App;
      n->e1 = e;
      n->e2 = parse_primary();
      e = n;
    }
  }
};

inline bool lam_any_label(const ParsedLamPtr& e) {
  if (e->label) return true;
  if (e->e1 && lam_any_label(e->e1)) return true;
  return e->e2 && lam_any_label(e->e2);
}

inline bool lam_all_labels(const ParsedLamPtr& e) {
  if (!e->label) return false;
  if (e->e1 && !lam_all_labels(e->e1)) return false;
  return !e->e2 || lam_all_labels(e->e2);
}

// Left-first post-order, matching the worked example's 1,0,3,2,4 numbering
// of (\x.x) (\y.y).
inline LamPtr lam_label_fresh(const ParsedLamPtr& e, BaseLabel& next) {
  switch (e->kind) {
    case ParsedLam::Kind::Var: return lvar(e->name, Label(next++));
    case ParsedLam::Kind::Lam: {
      LamPtr body = lam_label_fresh(e->e1, next);
      return lam(e->name, std::move(body), Label(next++));
    }
    case ParsedLam::Kind::App: {
      LamPtr f = lam_label_fresh(e->e1, next);
      LamPtr a = lam_label_fresh(e->e2, next);
      return lapp(std::move(f), std::move(a), Label(next++));
    }
  }
  return nullptr;
}

inline LamPtr lam_label_explicit(const ParsedLamPtr& e) {
  switch (e->kind) {
    case ParsedLam::Kind::Var: return lvar(e->name, *e->label);
    case ParsedLam::Kind::Lam: return lam(e->name, lam_label_explicit(e->e1), *e->label);
    case ParsedLam::Kind::App:
      return lapp(lam_label_explicit(e->e1), lam_label_explicit(e->e2), *e->label);
  }
  return nullptr;
}

}  // namespace detail

inline LamPtr parse_lambda(std::string_view source, BaseLabel start = 0) {
  detail::ParsedLamPtr p = detail::LamParser(source).parse();
  if (detail::lam_any_label(p)) {
    if (!detail::lam_all_labels(p))
      throw std::invalid_argument("explicit labels must cover every node");
    return detail::lam_label_explicit(p);
  }
  BaseLabel next = start;
  return detail::lam_label_fresh(p, next);
}

// ---------------------------------------------------------------------------
// Labelled beta reduction. Each substituted copy of the argument takes the
// label of the occurrence it replaces, and the contractum keeps the redex
// position's label; inner labels are untouched. This is the discipline
// under which satisfaction is preserved by reduction: every relabelled
// node's clauses follow from the flows Gamma(arg) <= Gamma(x) <=
// Gamma(occurrence) and Gamma(body) <= Gamma(redex), and no label visible
// to an enclosing abstraction ever changes.

namespace detail {

inline LamPtr relabel_root(const LamPtr& e, Label l) {
  if (e->label == l) return e;
  switch (e->kind) {
    case LamExpr::Kind::Var: return lvar(e->name, l, e->family);
    case LamExpr::Kind::App: return lapp(e->e1, e->e2, l);
    case LamExpr::Kind::Lam: return lam(e->name, e->e1, l, e->family);
  }
  return e;
}

inline LamPtr substitute(const LamPtr& e, const std::string& x, const LamPtr& arg,
                         const std::set<std::string>& arg_fv, unsigned& fresh_counter) {
  switch (e->kind) {
    case LamExpr::Kind::Var:
      return e->name == x ? relabel_root(arg, e->label) : e;
    case LamExpr::Kind::App: {
      LamPtr f = substitute(e->e1, x, arg, arg_fv, fresh_counter);
      LamPtr a = substitute(e->e2, x, arg, arg_fv, fresh_counter);
      return (f == e->e1 && a == e->e2) ? e : lapp(std::move(f), std::move(a), e->label);
    }
    case LamExpr::Kind::Lam: {
      if (e->name == x) return e;  // x shadowed; nothing to do below
      if (arg_fv.count(e->name)) {
        // Capture: rename this binder before descending. The renamed
        // binder keeps its analysis family.
        std::set<std::string> body_fv = free_vars(e->e1);
        std::string renamed;
        do {
          renamed = e->name + std::to_string(++fresh_counter);
        } while (arg_fv.count(renamed) || body_fv.count(renamed) || renamed == x);
        struct Renamer {
          static LamPtr go(const LamPtr& t, const std::string& from, const std::string& to) {
            switch (t->kind) {
              case LamExpr::Kind::Var:
                return t->name == from ? lvar(to, t->label, t->family) : t;
              case LamExpr::Kind::App: {
                LamPtr f = go(t->e1, from, to);
                LamPtr a = go(t->e2, from, to);
                return (f == t->e1 && a == t->e2) ? t : lapp(std::move(f), std::move(a), t->label);
              }
              case LamExpr::Kind::Lam:
                if (t->name == from) return t;
                {
                  LamPtr b = go(t->e1, from, to);
                  return b == t->e1 ? t : lam(t->name, std::move(b), t->label, t->family);
                }
            }
            return t;
          }
        };
        LamPtr body = Renamer::go(e->e1, e->name, renamed);
        return lam(renamed, substitute(body, x, arg, arg_fv, fresh_counter), e->label,
                   e->family);
      }
      LamPtr body = substitute(e->e1, x, arg, arg_fv, fresh_counter);
      return body == e->e1 ? e : lam(e->name, std::move(body), e->label, e->family);
    }
  }
  return e;
}

inline std::optional<LamPtr> beta_first(const LamPtr& e, unsigned& fresh_counter) {
  if (e->kind == LamExpr::Kind::App && e->e1->kind == LamExpr::Kind::Lam) {
    const LamPtr& body = e->e1->e1;
    std::set<std::string> arg_fv = free_vars(e->e2);
    return relabel_root(substitute(body, e->e1->name, e->e2, arg_fv, fresh_counter), e->label);
  }
  if (e->kind == LamExpr::Kind::App) {
    if (auto f = beta_first(e->e1, fresh_counter)) return lapp(*f, e->e2, e->label);
    if (auto a = beta_first(e->e2, fresh_counter)) return lapp(e->e1, *a, e->label);
  }
  if (e->kind == LamExpr::Kind::Lam) {
    if (auto b = beta_first(e->e1, fresh_counter)) return lam(e->name, *b, e->label);
  }
  return std::nullopt;
}

}  // namespace detail

/// Leftmost-outermost beta step with capture-avoiding substitution, or
/// nothing on a normal form.
inline std::optional<LamPtr> beta_step(const LamPtr& e) {
  unsigned fresh = 0;
  return detail::beta_first(e, fresh);
}

// ---------------------------------------------------------------------------
// 0CFA for lambda calculus.

/// FUN(x, l): any abstraction binding x whose body has label l.
struct AbsLam {
  std::string var;
  Label body;
  auto operator<=>(const AbsLam&) const = default;
};

inline std::string to_display_string(const AbsLam& v) {
  return "FUN(" + v.var + "," + to_string(v.body) + ")";
}

/// Analysis key: a program point label or a variable.
using LamKey = std::variant<Label, std::string>;

inline std::string to_display_string(const LamKey& k) {
  if (const auto* l = std::get_if<Label>(&k)) return to_string(*l);
  return std::get<std::string>(k);
}

using LamCS = ConstraintSystem<LamKey, AbsLam>;
using LamSolution = LamCS::Solution;

namespace detail {

inline void lam_constraints_rec(const LamPtr& e, std::vector<LamCS::Constraint>& out) {
  switch (e->kind) {
    case LamExpr::Kind::Var:
      out.push_back(LamCS::subset(LamKey(e->family), LamKey(e->label)));
      return;
    case LamExpr::Kind::Lam:
      out.push_back(LamCS::member(AbsLam{e->family, e->e1->label}, LamKey(e->label)));
      lam_constraints_rec(e->e1, out);
      return;
    case LamExpr::Kind::App: {
      lam_constraints_rec(e->e1, out);
      lam_constraints_rec(e->e2, out);
      Label l1 = e->e1->label, l2 = e->e2->label, l = e->label;
      out.push_back(LamCS::forall_in(
          LamKey(l1), [](const AbsLam&) { return true; },
          [l2, l](const AbsLam& f) -> std::vector<LamCS::Constraint> {
            return {LamCS::subset(LamKey(l2), LamKey(f.var)),
                    LamCS::subset(LamKey(f.body), LamKey(l))};
          },
          "app @^" + to_string(l)));
      return;
    }
  }
}

}  // namespace detail

inline std::vector<LamCS::Constraint> lam_constraints(const LamPtr& e) {
  std::vector<LamCS::Constraint> out;
  detail::lam_constraints_rec(e, out);
  return out;
}

inline LamSolution analyze_lambda(const LamPtr& e) { return LamCS::solve(lam_constraints(e)); }

/// Direct evaluation of the satisfaction relation, clause by clause.
/// Deliberately bypasses the constraint machinery so it can cross-check
/// the solver.
inline bool lam_models(const LamSolution& env, const LamPtr& e,
                       std::vector<std::string>* violations = nullptr) {
  bool ok = true;
  auto violate = [&](std::string msg) {
    ok = false;
    if (violations) violations->push_back(std::move(msg));
  };
  switch (e->kind) {
    case LamExpr::Kind::Var:
      for (const AbsLam& v : env.at(LamKey(e->family)))
        if (!env.contains(LamKey(e->label), v))
          violate("Gamma(" + e->family + ") is not within Gamma(" + to_string(e->label) + ")");
      return ok;
    case LamExpr::Kind::Lam:
      if (!env.contains(LamKey(e->label), AbsLam{e->family, e->e1->label}))
        violate("FUN(" + e->family + "," + to_string(e->e1->label) + ") not in Gamma(" +
                to_string(e->label) + ")");
      return lam_models(env, e->e1, violations) && ok;
    case LamExpr::Kind::App: {
      bool sub = lam_models(env, e->e1, violations);
      sub = lam_models(env, e->e2, violations) && sub;
      for (const AbsLam& f : env.at(LamKey(e->e1->label))) {
        for (const AbsLam& v : env.at(LamKey(e->e2->label)))
          if (!env.contains(LamKey(f.var), v))
            violate("Gamma(" + to_string(e->e2->label) + ") is not within Gamma(" + f.var + ")");
        for (const AbsLam& v : env.at(LamKey(f.body)))
          if (!env.contains(LamKey(e->label), v))
            violate("Gamma(" + to_string(f.body) + ") is not within Gamma(" +
                    to_string(e->label) + ")");
      }
      return sub && ok;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// The lambda translation of SK terms, with the sublabel scheme that keeps
// every label distinct.

enum class VarNaming {
  Subscripted,  // f7, g7, x7: one family per atom occurrence
  Plain,        // f, g, x / x, y: for display
};

inline LamPtr lambda_of(const LTermPtr& t, VarNaming naming = VarNaming::Subscripted) {
  switch (t->kind) {
    case LTerm::Kind::Dummy:
      throw std::invalid_argument("template dummies have no lambda translation");
    case LTerm::Kind::App:
      return lapp(lambda_of(t->left, naming), lambda_of(t->right, naming), t->label);
    case LTerm::Kind::Atom: {
      BaseLabel l = t->label.base;
      std::string suffix = naming == VarNaming::Subscripted ? std::to_string(l) : "";
      if (t->atom == AtomKind::S) {
        std::string f = "f" + suffix, g = "g" + suffix, x = "x" + suffix;
        LamPtr body = lapp(lapp(lvar(f, Label(l, SubName::S_F)), lvar(x, Label(l, SubName::S_X1)),
                                Label(l, SubName::S_L)),
                           lapp(lvar(g, Label(l, SubName::S_G)), lvar(x, Label(l, SubName::S_X2)),
                                Label(l, SubName::S_R)),
                           Label(l, SubName::S_3));
        return lam(f, lam(g, lam(x, std::move(body), Label(l, SubName::S_LX)),
                          Label(l, SubName::S_LG)),
                   Label(l, SubName::S_LF));
      }
      if (t->atom == AtomKind::K) {
        std::string x = "x" + suffix, y = "y" + suffix;
        return lam(x, lam(y, lvar(x, Label(l, SubName::K_X)), Label(l, SubName::K_LY)),
                   Label(l, SubName::K_LX));
      }
      throw CalculusError("F cannot be translated into lambda calculus");
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// unlambda: the bracket-abstraction translation back into SK terms.

namespace detail {

// Applicative terms over S, K and variables; the intermediate form the
// translation works on.
struct Applicative;
using ApplPtr = std::shared_ptr<const Applicative>;
struct Applicative {
  enum class Kind : std::uint8_t { S, K, Var, App };
  Kind kind;
  std::string name;
  ApplPtr left, right;
};

inline ApplPtr appl_s() {
  auto a = std::make_shared<Applicative>();
  a->kind = Applicative::Kind::S;
  return a;
}
inline ApplPtr appl_k() {
  auto a = std::make_shared<Applicative>();
  a->kind = Applicative::Kind::K;
  return a;
}
inline ApplPtr appl_var(std::string x) {
  auto a = std::make_shared<Applicative>();
  a->kind = Applicative::Kind::Var;
  a->name = std::move(x);
  return a;
}
inline ApplPtr appl_app(ApplPtr l, ApplPtr r) {
  auto a = std::make_shared<Applicative>();
  a->kind = Applicative::Kind::App;
  a->left = std::move(l);
  a->right = std::move(r);
  return a;
}

inline bool appl_has_free(const ApplPtr& t, const std::string& x) {
  switch (t->kind) {
    case Applicative::Kind::Var: return t->name == x;
    case Applicative::Kind::App: return appl_has_free(t->left, x) || appl_has_free(t->right, x);
    default: return false;
  }
}

// The clauses for unlambda_x, tried in order:
//   unlambda_x(x)      = S K K
//   unlambda_x(t)      = K t            if x not free in t
//   unlambda_x(t x)    = t              if x not free in t
//   unlambda_x(t1 t2)  = S unlambda_x(t1) unlambda_x(t2)
inline ApplPtr abstract_var(const std::string& x, const ApplPtr& t) {
  if (t->kind == Applicative::Kind::Var && t->name == x)
    return appl_app(appl_app(appl_s(), appl_k()), appl_k());
  if (!appl_has_free(t, x)) return appl_app(appl_k(), t);
  if (t->kind == Applicative::Kind::App && t->right->kind == Applicative::Kind::Var &&
      t->right->name == x && !appl_has_free(t->left, x))
    return t->left;
  return appl_app(appl_app(appl_s(), abstract_var(x, t->left)), abstract_var(x, t->right));
}

inline ApplPtr unlambda_rec(const LamPtr& e) {
  switch (e->kind) {
    case LamExpr::Kind::Var: return appl_var(e->name);
    case LamExpr::Kind::App: return appl_app(unlambda_rec(e->e1), unlambda_rec(e->e2));
    case LamExpr::Kind::Lam: return abstract_var(e->name, unlambda_rec(e->e1));
  }
  return nullptr;
}

inline TermPtr appl_to_term(const ApplPtr& t) {
  switch (t->kind) {
    case Applicative::Kind::S: return uatom(AtomKind::S);
    case Applicative::Kind::K: return uatom(AtomKind::K);
    case Applicative::Kind::App: return uapp(appl_to_term(t->left), appl_to_term(t->right));
    case Applicative::Kind::Var:
      throw std::invalid_argument("unlambda of an open expression: free variable `" + t->name +
                                  "`");
  }
  return nullptr;
}

}  // namespace detail

/// Bracket abstraction into an unlabelled SK term; the input must be
/// closed.
inline TermPtr unlambda_of(const LamPtr& e) {
  return detail::appl_to_term(detail::unlambda_rec(e));
}

/// Structural equality up to labels.
inline bool equal_modulo_labels(const LamPtr& a, const LamPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case LamExpr::Kind::Var: return a->name == b->name;
    case LamExpr::Kind::Lam:
      return a->name == b->name && equal_modulo_labels(a->e1, b->e1);
    case LamExpr::Kind::App:
      return equal_modulo_labels(a->e1, b->e1) && equal_modulo_labels(a->e2, b->e2);
  }
  return false;
}

}  // namespace sfcfa
