#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfcfa/labels.hpp"

namespace sfcfa {

enum class Calculus { SK, SF };

inline std::string_view to_string(Calculus c) { return c == Calculus::SK ? "sk" : "sf"; }

enum class AtomKind : std::uint8_t { S, K, F };

inline char atom_char(AtomKind k) {
  switch (k) {
    case AtomKind::S: return 'S';
    case AtomKind::K: return 'K';
    case AtomKind::F: return 'F';
  }
  return '?';
}

inline bool atom_allowed(AtomKind k, Calculus c) {
  if (k == AtomKind::S) return true;
  return c == Calculus::SK ? k == AtomKind::K : k == AtomKind::F;
}

/// Raised when a term mentions an atom outside its calculus.
struct CalculusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LTerm;
using LTermPtr = std::shared_ptr<const LTerm>;

/// A labelled combinatory term. Atoms carry base labels; applications may
/// carry sublabel-form labels once reduction has introduced them. Dummy
/// leaves only occur inside the analysis templates.
struct LTerm {
  enum class Kind : std::uint8_t { Atom, App, Dummy };

  Kind kind;
  Label label;
  AtomKind atom = AtomKind::S;   // Atom only
  std::string dummy_name;        // Dummy only
  LTermPtr left, right;          // App only

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_app() const { return kind == Kind::App; }
  bool is_dummy() const { return kind == Kind::Dummy; }
};

inline LTermPtr atom(AtomKind k, BaseLabel n) {
  auto t = std::make_shared<LTerm>();
  t->kind = LTerm::Kind::Atom;
  t->atom = k;
  t->label = Label(n);
  return t;
}

inline LTermPtr app(LTermPtr l, LTermPtr r, Label lab) {
  auto t = std::make_shared<LTerm>();
  t->kind = LTerm::Kind::App;
  t->left = std::move(l);
  t->right = std::move(r);
  t->label = lab;
  return t;
}

inline LTermPtr dummy(std::string name, Label lab) {
  auto t = std::make_shared<LTerm>();
  t->kind = LTerm::Kind::Dummy;
  t->dummy_name = std::move(name);
  t->label = lab;
  return t;
}

inline bool equal(const LTermPtr& a, const LTermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->label != b->label) return false;
  switch (a->kind) {
    case LTerm::Kind::Atom: return a->atom == b->atom;
    case LTerm::Kind::Dummy: return a->dummy_name == b->dummy_name;
    case LTerm::Kind::App: return equal(a->left, b->left) && equal(a->right, b->right);
  }
  return false;
}

inline std::size_t node_count(const LTermPtr& t) {
  return t->is_app() ? 1 + node_count(t->left) + node_count(t->right) : 1;
}

inline void check_calculus(const LTermPtr& t, Calculus c) {
  if (t->is_atom()) {
    if (!atom_allowed(t->atom, c))
      throw CalculusError(std::string("atom ") + atom_char(t->atom) + " not allowed in " +
                          std::string(to_string(c)) + "-calculus");
  } else if (t->is_app()) {
    check_calculus(t->left, c);
    check_calculus(t->right, c);
  }
}

// ---------------------------------------------------------------------------
// Unlabelled terms (parser output; also the unlambda target).

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Parse tree before labelling. Explicit labels are carried through from
/// fixture syntax such as "S^7 @^8 K^6"; they are all-or-nothing.
struct Term {
  enum class Kind : std::uint8_t { Atom, App };
  Kind kind;
  AtomKind atom = AtomKind::S;
  TermPtr left, right;
  std::optional<BaseLabel> atom_label;  // explicit ^n on an atom
  std::optional<Label> app_label;       // explicit @^l on an application
};

inline TermPtr uatom(AtomKind k, std::optional<BaseLabel> lab = std::nullopt) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Atom;
  t->atom = k;
  t->atom_label = lab;
  return t;
}

inline TermPtr uapp(TermPtr l, TermPtr r, std::optional<Label> lab = std::nullopt) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->left = std::move(l);
  t->right = std::move(r);
  t->app_label = lab;
  return t;
}

inline bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Atom) return a->atom == b->atom;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

inline TermPtr strip_labels(const LTermPtr& t) {
  switch (t->kind) {
    case LTerm::Kind::Atom: return uatom(t->atom);
    case LTerm::Kind::App: return uapp(strip_labels(t->left), strip_labels(t->right));
    case LTerm::Kind::Dummy:
      throw std::logic_error("cannot strip labels from a template dummy");
  }
  return nullptr;
}

namespace detail {

inline bool any_explicit(const TermPtr& t) {
  if (t->kind == Term::Kind::Atom) return t->atom_label.has_value();
  return t->app_label.has_value() || any_explicit(t->left) || any_explicit(t->right);
}

inline bool all_explicit(const TermPtr& t) {
  if (t->kind == Term::Kind::Atom) return t->atom_label.has_value();
  return t->app_label.has_value() && all_explicit(t->left) && all_explicit(t->right);
}

inline LTermPtr label_explicit(const TermPtr& t) {
  if (t->kind == Term::Kind::Atom) return atom(t->atom, *t->atom_label);
  return app(label_explicit(t->left), label_explicit(t->right), *t->app_label);
}

// Post-order with the right subtree first, so the rightmost-deepest leaf
// receives the lowest label. This reproduces the numbering of the worked
// identity-to-identity examples for both calculi.
inline LTermPtr label_fresh(const TermPtr& t, BaseLabel& next) {
  if (t->kind == Term::Kind::Atom) return atom(t->atom, next++);
  LTermPtr r = label_fresh(t->right, next);
  LTermPtr l = label_fresh(t->left, next);
  return app(std::move(l), std::move(r), Label(next++));
}

}  // namespace detail

struct Labelled {
  LTermPtr term;
  BaseLabel next;  // first unused base label
};

/// Labels every node with a distinct base label. A term whose nodes all
/// carry explicit labels is taken verbatim; mixing explicit and implicit
/// labels is rejected.
inline Labelled assign_labels(const TermPtr& t, BaseLabel start = 0) {
  if (detail::any_explicit(t)) {
    if (!detail::all_explicit(t))
      throw std::invalid_argument("explicit labels must cover every node");
    LTermPtr lt = detail::label_explicit(t);
    BaseLabel next = start;
    // Next unused = one past the largest explicit base label.
    std::vector<const LTerm*> stack{lt.get()};
    while (!stack.empty()) {
      const LTerm* n = stack.back();
      stack.pop_back();
      if (n->label.base + 1 > next) next = n->label.base + 1;
      if (n->is_app()) {
        stack.push_back(n->left.get());
        stack.push_back(n->right.get());
      }
    }
    return {lt, next};
  }
  BaseLabel next = start;
  LTermPtr lt = detail::label_fresh(t, next);
  return {lt, next};
}

// ---------------------------------------------------------------------------
// Printing. With labels on, output round-trips through the parser.

namespace detail {

inline void print_rec(const LTerm& t, bool labels, bool top, std::string& out) {
  switch (t.kind) {
    case LTerm::Kind::Atom:
      out += atom_char(t.atom);
      if (labels) {
        out += '^';
        out += std::to_string(t.label.base);
      }
      return;
    case LTerm::Kind::Dummy:
      out += '<';
      out += t.dummy_name;
      out += '>';
      if (labels) {
        out += '^';
        out += to_string(t.label);
      }
      return;
    case LTerm::Kind::App: {
      // Parentheses are minimal, except that a top-level split between a
      // multi-application spine and a compound operand is made explicit,
      // as the worked examples do.
      bool wrap_left =
          top && t.left->is_app() && t.left->left->is_app() && t.right->is_app();
      if (wrap_left) out += '(';
      print_rec(*t.left, labels, false, out);
      if (wrap_left) out += ')';
      out += labels ? " @^" + to_string(t.label) + " " : " ";
      bool wrap_right = t.right->is_app();
      if (wrap_right) out += '(';
      print_rec(*t.right, labels, false, out);
      if (wrap_right) out += ')';
      return;
    }
  }
}

}  // namespace detail

/// Renders a term with minimal parentheses, except that the top-level
/// operator/operand split is made explicit, matching the layout the worked
/// examples use.
inline std::string to_string(const LTermPtr& t, bool with_labels = true) {
  std::string out;
  detail::print_rec(*t, with_labels, true, out);
  return out;
}

namespace detail {

inline void print_rec(const Term& t, bool top, std::string& out) {
  if (t.kind == Term::Kind::Atom) {
    out += atom_char(t.atom);
    return;
  }
  bool wrap_left = top && t.left->kind == Term::Kind::App &&
                   t.left->left->kind == Term::Kind::App && t.right->kind == Term::Kind::App;
  if (wrap_left) out += '(';
  print_rec(*t.left, false, out);
  if (wrap_left) out += ')';
  out += ' ';
  bool wrap_right = t.right->kind == Term::Kind::App;
  if (wrap_right) out += '(';
  print_rec(*t.right, false, out);
  if (wrap_right) out += ')';
}

}  // namespace detail

inline std::string to_string(const TermPtr& t) {
  std::string out;
  detail::print_rec(*t, true, out);
  return out;
}

// ---------------------------------------------------------------------------
// Label universe.

namespace detail {

inline void sublabel_closure(AtomKind k, BaseLabel n, std::set<Label>& out) {
  switch (k) {
    case AtomKind::S:
      for (SubName s : {SubName::S_0, SubName::S_1, SubName::S_2, SubName::S_3,
                        SubName::S_L, SubName::S_R})
        out.insert(Label(n, s));
      return;
    case AtomKind::K:
      out.insert(Label(n, SubName::K_0));
      return;
    case AtomKind::F:
      for (SubName s : {SubName::F_0, SubName::F_1, SubName::F_2, SubName::F_3,
                        SubName::F_L, SubName::F_R, SubName::F_M})
        out.insert(Label(n, s));
      return;
  }
}

}  // namespace detail

/// The finite, statically derivable set of labels that can arise while
/// reducing t: every label occurring in t, plus every sublabel of every
/// atom occurrence.
inline std::set<Label> labels_of(const LTermPtr& t) {
  std::set<Label> out;
  std::vector<const LTerm*> stack{t.get()};
  while (!stack.empty()) {
    const LTerm* n = stack.back();
    stack.pop_back();
    out.insert(n->label);
    if (n->is_atom()) detail::sublabel_closure(n->atom, n->label.base, out);
    if (n->is_app()) {
      stack.push_back(n->left.get());
      stack.push_back(n->right.get());
    }
  }
  return out;
}

}  // namespace sfcfa
