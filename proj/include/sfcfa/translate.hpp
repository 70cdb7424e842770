#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "sfcfa/absval.hpp"
#include "sfcfa/term.hpp"

namespace sfcfa {

/// Bookkeeping for one replaced K: the application node that stands where
/// the K stood (it keeps the K's own base label, so the analyses stay
/// comparable at every original program point), and the two fresh F leaf
/// labels.
struct KEntry {
  BaseLabel app_label;
  BaseLabel left_f;
  BaseLabel right_f;
};

struct KMapping {
  std::map<BaseLabel, KEntry> entries;
};

namespace detail {

inline BaseLabel max_base_label(const LTermPtr& t) {
  BaseLabel m = t->label.base;
  if (t->is_app()) {
    m = std::max(m, max_base_label(t->left));
    m = std::max(m, max_base_label(t->right));
  }
  return m;
}

inline LTermPtr sk_to_sf_rec(const LTermPtr& t, BaseLabel& fresh, KMapping& mapping) {
  switch (t->kind) {
    case LTerm::Kind::Dummy:
      throw std::invalid_argument("cannot translate a template dummy");
    case LTerm::Kind::App: {
      LTermPtr l = sk_to_sf_rec(t->left, fresh, mapping);
      LTermPtr r = sk_to_sf_rec(t->right, fresh, mapping);
      return app(std::move(l), std::move(r), t->label);
    }
    case LTerm::Kind::Atom: {
      if (t->atom == AtomKind::S) return t;
      if (t->atom != AtomKind::K)
        throw CalculusError("sk_to_sf expects an SK term");
      BaseLabel n = t->label.base;
      BaseLabel left_f = fresh++;
      BaseLabel right_f = fresh++;
      mapping.entries[n] = KEntry{n, left_f, right_f};
      return app(atom(AtomKind::F, left_f), atom(AtomKind::F, right_f), Label(n));
    }
  }
  return nullptr;
}

}  // namespace detail

/// Replaces every K^n with F F. The replacement application reuses the
/// K's base label; the two F leaves take fresh labels past the maximum of
/// the source term, allocated left to right.
inline std::pair<LTermPtr, KMapping> sk_to_sf(const LTermPtr& t) {
  check_calculus(t, Calculus::SK);
  BaseLabel fresh = detail::max_base_label(t) + 1;
  KMapping mapping;
  LTermPtr out = detail::sk_to_sf_rec(t, fresh, mapping);
  return {out, mapping};
}

/// The value correspondence underlying the precision-invariance claim:
/// S values carry over unchanged; a K that has swallowed i arguments
/// matches the leading F of its replacement having swallowed i+1.
inline AbsVal correspond(const AbsVal& v, const KMapping& m) {
  const auto* c = std::get_if<CombVal>(&v);
  if (!c) throw std::invalid_argument("no correspondence for application-pair values");
  if (c->kind == AtomKind::S) return v;
  if (c->kind != AtomKind::K) throw std::invalid_argument("not an SK abstract value");
  auto it = m.entries.find(c->n);
  if (it == m.entries.end())
    throw std::invalid_argument("no mapping entry for K^" + std::to_string(c->n));
  return comb(AtomKind::F, static_cast<std::uint8_t>(c->arity + 1), it->second.left_f);
}

/// Rewrites K into F F on unlabelled terms; relates evaluation results of
/// a term and of its translation.
inline TermPtr replace_k_with_ff(const TermPtr& t) {
  if (t->kind == Term::Kind::App)
    return uapp(replace_k_with_ff(t->left), replace_k_with_ff(t->right));
  if (t->atom == AtomKind::K) return uapp(uatom(AtomKind::F), uatom(AtomKind::F));
  return t;
}

}  // namespace sfcfa
