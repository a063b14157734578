#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "weylnorm/exact_matrix.hpp"

namespace weylnorm {

/// Element (A, flag) of G(C) x| Gal(C/R). flag = 1 marks the coset of the
/// complex conjugation gamma, which acts on matrices entrywise.
struct GroupElement {
  ExactMatrix linear;
  bool flag = false;

  static GroupElement identity(std::size_t n) { return {ExactMatrix::identity(n), false}; }
  static GroupElement gamma(std::size_t n) { return {ExactMatrix::identity(n), true}; }

  std::size_t dim() const { return linear.rows(); }
  GroupElement inverse() const;
  bool is_identity() const { return !flag && linear.is_identity(); }
  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.flag == b.flag && a.linear == b.linear;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

/// (A, e)(B, d) = (A * sigma^e(B), e xor d).
GroupElement gprod(const GroupElement& x, const GroupElement& y);
inline GroupElement operator*(const GroupElement& x, const GroupElement& y) { return gprod(x, y); }

/// Product of a word, left to right; the empty word is not allowed.
GroupElement gproduct(std::span<const GroupElement> word);
GroupElement gproduct(std::initializer_list<GroupElement> word);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

}  // namespace weylnorm
