#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "sfcfa/term.hpp"

namespace sfcfa {

namespace detail {

// catalan(k) = number of binary tree shapes with k+1 leaves.
inline std::uint64_t catalan(int k) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> c(33, 0);
    c[0] = 1;
    for (int n = 0; n + 1 < static_cast<int>(c.size()); ++n) {
      std::uint64_t sum = 0;
      for (int i = 0; i <= n; ++i) sum += c[i] * c[n - i];
      c[n + 1] = sum;
    }
    return c;
  }();
  return table[static_cast<std::size_t>(k)];
}

inline TermPtr random_shape(int leaves, Calculus c, std::mt19937_64& rng) {
  if (leaves == 1) {
    bool first = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    AtomKind k = first ? AtomKind::S : (c == Calculus::SK ? AtomKind::K : AtomKind::F);
    return uatom(k);
  }
  // Split weighted by shape counts, so shapes are uniform for a given size.
  std::uint64_t total = catalan(leaves - 1);
  std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
  int left = 1;
  for (; left < leaves; ++left) {
    std::uint64_t weight = catalan(left - 1) * catalan(leaves - left - 1);
    if (pick < weight) break;
    pick -= weight;
  }
  return uapp(random_shape(left, c, rng), random_shape(leaves - left, c, rng));
}

}  // namespace detail

/// A closed random term with between 1 and max_atoms atoms: the atom count
/// is uniform, the tree shape is uniform for that count, and each leaf is
/// an unbiased coin flip between the calculus's two atoms. Labels are
/// assigned by the standard scheme.
inline LTermPtr random_term(Calculus c, int max_atoms, std::mt19937_64& rng) {
  int leaves = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  return assign_labels(detail::random_shape(leaves, c, rng)).term;
}

namespace detail {

// Shape from uniform splits; beyond the exact-count table's reach, and
// uniformity over shapes does not matter at these sizes.
inline TermPtr random_shape_large(int leaves, Calculus c, std::mt19937_64& rng) {
  if (leaves <= 32) return random_shape(leaves, c, rng);
  int left = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
  return uapp(random_shape_large(left, c, rng), random_shape_large(leaves - left, c, rng));
}

}  // namespace detail

/// A closed random term with exactly `atoms` atoms, for size and
/// performance checks.
inline LTermPtr random_term_exact(Calculus c, int atoms, std::mt19937_64& rng) {
  return assign_labels(detail::random_shape_large(atoms, c, rng)).term;
}

}  // namespace sfcfa
