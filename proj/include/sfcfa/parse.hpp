#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sfcfa/term.hpp"

namespace sfcfa {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

// term := app
// app  := primary (('@' '^' label)? primary)*        (left-associative)
// primary := ('S'|'K'|'F') ('^' nat)? | '(' term ')'
class Parser {
 public:
  Parser(std::string_view src, Calculus calc) : src_(src), calc_(calc) {}

  TermPtr parse() {
    TermPtr t = parse_app();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  std::string_view src_;
  Calculus calc_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  BaseLabel parse_nat() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a number");
    std::uint64_t n = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      n = n * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      if (n > 0xffffffffull) fail("label out of range");
      ++pos_;
    }
    return static_cast<BaseLabel>(n);
  }

  // nat optionally followed by ".X.tag" (labels introduced by reduction).
  Label parse_full_label() {
    skip_ws();
    std::size_t start = pos_;
    BaseLabel n = parse_nat();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
        std::isalpha(static_cast<unsigned char>(src_[pos_ + 1]))) {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (src_[end] == '.' || std::isalnum(static_cast<unsigned char>(src_[end]))))
        ++end;
      try {
        Label l = parse_label(src_.substr(start, end - start));
        pos_ = end;
        return l;
      } catch (const std::invalid_argument&) {
        fail("malformed label");
      }
    }
    return Label(n);
  }

  TermPtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected a term");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      TermPtr t = parse_app();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Reject multi-letter identifiers outright.
      std::size_t end = pos_;
      while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
      std::string word(src_.substr(pos_, end - pos_));
      AtomKind kind;
      if (word == "S") kind = AtomKind::S;
      else if (word == "K") kind = AtomKind::K;
      else if (word == "F") kind = AtomKind::F;
      else fail("unknown atom `" + word + "`");
      if (!atom_allowed(kind, calc_))
        fail(std::string("atom ") + atom_char(kind) + " not allowed in " +
             std::string(to_string(calc_)) + "-calculus");
      pos_ = end;
      std::optional<BaseLabel> lab;
      if (pos_ < src_.size() && src_[pos_] == '^') {
        ++pos_;
        lab = parse_nat();
      }
      return uatom(kind, lab);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  TermPtr parse_app() {
    TermPtr t = parse_primary();
    for (;;) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '@') {
        ++pos_;
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '^') fail("expected '^' after '@'");
        ++pos_;
        Label lab = parse_full_label();
        TermPtr rhs = parse_primary();
        t = uapp(std::move(t), std::move(rhs), lab);
        continue;
      }
      if (!starts_primary()) return t;
      TermPtr rhs = parse_primary();
      t = uapp(std::move(t), std::move(rhs));
    }
  }
};

}  // namespace detail

/// Parses combinatory source. Juxtaposition applies left-associatively;
/// explicit "^n" / "@^l" suffixes are accepted for fixture entry.
inline TermPtr parse(std::string_view source, Calculus calculus) {
  return detail::Parser(source, calculus).parse();
}

/// Parse and label in one go (explicit labels taken verbatim when present).
inline LTermPtr parse_labelled(std::string_view source, Calculus calculus,
                               BaseLabel start = 0) {
  return assign_labels(parse(source, calculus), start).term;
}

}  // namespace sfcfa
