#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "sfcfa/labels.hpp"
#include "sfcfa/term.hpp"

namespace sfcfa {

/// A combinator occurrence with the number of arguments applied so far:
/// S_0^n .. S_2^n, K_0^n .. K_1^n, F_0^n .. F_2^n.
struct CombVal {
  AtomKind kind;
  std::uint8_t arity;
  BaseLabel n;
  auto operator<=>(const CombVal&) const = default;
};

/// An application built from the terms at the two recorded labels.
struct PairVal {
  Label left, right;
  auto operator<=>(const PairVal&) const = default;
};

using AbsVal = std::variant<CombVal, PairVal>;

inline AbsVal comb(AtomKind k, std::uint8_t arity, BaseLabel n) { return CombVal{k, arity, n}; }
inline AbsVal app_pair(Label l, Label r) { return PairVal{l, r}; }

inline bool is_comb(const AbsVal& v, AtomKind k, std::uint8_t arity) {
  const auto* c = std::get_if<CombVal>(&v);
  return c && c->kind == k && c->arity == arity;
}

inline bool is_pair(const AbsVal& v) { return std::holds_alternative<PairVal>(v); }

inline std::optional<std::pair<Label, Label>> pair_of(const AbsVal& v) {
  if (const auto* p = std::get_if<PairVal>(&v)) return {{p->left, p->right}};
  return std::nullopt;
}

inline std::string to_display_string(const AbsVal& v) {
  if (const auto* c = std::get_if<CombVal>(&v)) {
    std::string out(1, atom_char(c->kind));
    out += '_';
    out += std::to_string(c->arity);
    out += '^';
    out += std::to_string(c->n);
    return out;
  }
  const auto& p = std::get<PairVal>(v);
  return "@^(" + to_string(p.left) + "," + to_string(p.right) + ")";
}

/// Parses the fixed lexicon: "S_0^7", "K_1^6", "F_2^13", "@^(15.S.L,15.S.R)".
inline AbsVal parse_absval(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed abstract value: " + std::string(text)); };
  if (text.rfind("@^(", 0) == 0) {
    if (text.back() != ')') throw bad();
    std::string_view inner = text.substr(3, text.size() - 4);
    std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) throw bad();
    return app_pair(parse_label(inner.substr(0, comma)), parse_label(inner.substr(comma + 1)));
  }
  if (text.size() < 4) throw bad();
  AtomKind kind;
  switch (text[0]) {
    case 'S': kind = AtomKind::S; break;
    case 'K': kind = AtomKind::K; break;
    case 'F': kind = AtomKind::F; break;
    default: throw bad();
  }
  if (text[1] != '_' || text[2] < '0' || text[2] > '2' || text[3] != '^') throw bad();
  std::uint8_t arity = static_cast<std::uint8_t>(text[2] - '0');
  Label n = parse_label(text.substr(4));
  if (!n.is_base()) throw bad();
  return comb(kind, arity, n.base);
}

inline std::string to_display_string(const Label& l) { return to_string(l); }

}  // namespace sfcfa
