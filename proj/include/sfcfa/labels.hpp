#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfcfa {

/// Base labels name syntactic nodes; sublabels name the positions a
/// combinator's contractum introduces (and the positions inside its
/// lambda translation).
using BaseLabel = std::uint32_t;

enum class SubName : std::uint8_t {
  // Combinatory analysis sublabels.
  S_0, S_1, S_2, S_3, S_L, S_R,
  K_0,
  F_0, F_1, F_2, F_3, F_L, F_R, F_M,
  // Sublabels used only by the lambda translation of S and K.
  S_LF, S_LG, S_LX, S_F, S_G, S_X1, S_X2,
  K_LX, K_LY, K_X,
};

inline std::string_view to_string(SubName s) {
  switch (s) {
    case SubName::S_0: return "S.0";
    case SubName::S_1: return "S.1";
    case SubName::S_2: return "S.2";
    case SubName::S_3: return "S.3";
    case SubName::S_L: return "S.L";
    case SubName::S_R: return "S.R";
    case SubName::K_0: return "K.0";
    case SubName::F_0: return "F.0";
    case SubName::F_1: return "F.1";
    case SubName::F_2: return "F.2";
    case SubName::F_3: return "F.3";
    case SubName::F_L: return "F.L";
    case SubName::F_R: return "F.R";
    case SubName::F_M: return "F.M";
    case SubName::S_LF: return "S.LF";
    case SubName::S_LG: return "S.LG";
    case SubName::S_LX: return "S.LX";
    case SubName::S_F: return "S.F";
    case SubName::S_G: return "S.G";
    case SubName::S_X1: return "S.X1";
    case SubName::S_X2: return "S.X2";
    case SubName::K_LX: return "K.LX";
    case SubName::K_LY: return "K.LY";
    case SubName::K_X: return "K.X";
  }
  return "?";
}

/// A label is a base label, optionally suffixed with a sublabel name.
struct Label {
  BaseLabel base = 0;
  std::optional<SubName> sub;

  constexpr Label() = default;
  constexpr Label(BaseLabel n) : base(n) {}  // NOLINT: implicit by design
  constexpr Label(BaseLabel n, SubName s) : base(n), sub(s) {}

  bool is_base() const { return !sub.has_value(); }
  Label with(SubName s) const { return Label(base, s); }

  auto operator<=>(const Label&) const = default;
};

inline std::string to_string(const Label& l) {
  std::string out = std::to_string(l.base);
  if (l.sub) {
    out += '.';
    out += to_string(*l.sub);
  }
  return out;
}

/// Parses "7", "7.S.L", "3.F.M", "5.K.LX". Throws std::invalid_argument.
inline Label parse_label(std::string_view text) {
  std::size_t i = 0;
  if (i >= text.size() || !(text[i] >= '0' && text[i] <= '9'))
    throw std::invalid_argument("label must start with a number: " + std::string(text));
  std::uint64_t n = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    n = n * 10 + static_cast<std::uint64_t>(text[i] - '0');
    if (n > 0xffffffffull) throw std::invalid_argument("label out of range");
    ++i;
  }
  if (i == text.size()) return Label(static_cast<BaseLabel>(n));
  if (text[i] != '.') throw std::invalid_argument("malformed label: " + std::string(text));
  std::string_view suffix = text.substr(i + 1);
  static constexpr SubName kAll[] = {
      SubName::S_0, SubName::S_1, SubName::S_2, SubName::S_3, SubName::S_L,
      SubName::S_R, SubName::K_0, SubName::F_0, SubName::F_1, SubName::F_2,
      SubName::F_3, SubName::F_L, SubName::F_R, SubName::F_M, SubName::S_LF,
      SubName::S_LG, SubName::S_LX, SubName::S_F, SubName::S_G, SubName::S_X1,
      SubName::S_X2, SubName::K_LX, SubName::K_LY, SubName::K_X};
  for (SubName s : kAll)
    if (to_string(s) == suffix) return Label(static_cast<BaseLabel>(n), s);
  throw std::invalid_argument("unknown sublabel name: " + std::string(text));
}

}  // namespace sfcfa
