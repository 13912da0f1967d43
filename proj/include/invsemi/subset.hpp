#pragma once

// Subsets of a fixed involution semigroup as characteristic bit vectors,
// plus the elementary set arithmetic: complex products, star images, and
// the canonical subsets H_S, E_S, S^2.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "semigroup.hpp"

namespace invsemi {

class Subset {
 public:
  explicit Subset(const InvolutionSemigroup& parent)
      : parent_(&parent), words_((parent.order() + 63) / 64, 0) {}

  static Subset full(const InvolutionSemigroup& parent) {
    Subset s(parent);
    for (int i = 0; i < parent.order(); ++i) s.add(i);
    return s;
  }

  static Subset of(const InvolutionSemigroup& parent, std::initializer_list<int> elements) {
    Subset s(parent);
    for (int e : elements) s.add(e);
    return s;
  }

  static Subset of(const InvolutionSemigroup& parent, const std::vector<int>& elements) {
    Subset s(parent);
    for (int e : elements) s.add(e);
    return s;
  }

  const InvolutionSemigroup& parent() const noexcept { return *parent_; }
  bool same_parent(const Subset& other) const noexcept { return parent_ == other.parent_; }

  bool contains(int e) const {
    check_index(e);
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }

  void add(int e) {
    check_index(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }

  void remove(int e) {
    check_index(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < parent_->order(); ++i)
      if ((words_[i >> 6] >> (i & 63)) & 1u) out.push_back(i);
    return out;
  }

  bool is_subset_of(const Subset& other) const {
    require_same_parent(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const Subset& other) const {
    require_same_parent(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  // Extensional equality; comparing subsets of different parents is an error.
  bool operator==(const Subset& other) const {
    require_same_parent(other);
    return words_ == other.words_;
  }
  bool operator!=(const Subset& other) const { return !(*this == other); }

  Subset& operator|=(const Subset& o) { return apply(o, [](auto& a, auto b) { a |= b; }); }
  Subset& operator&=(const Subset& o) { return apply(o, [](auto& a, auto b) { a &= b; }); }
  Subset& operator-=(const Subset& o) { return apply(o, [](auto& a, auto b) { a &= ~b; }); }

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  // Lexicographic order on the ascending member sequence; used for
  // canonical sorting of subset lists.
  bool lex_less(const Subset& other) const {
    require_same_parent(other);
    const auto a = elements();
    const auto b = other.elements();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  template <class F>
  Subset& apply(const Subset& o, F f) {
    require_same_parent(o);
    for (std::size_t i = 0; i < words_.size(); ++i) f(words_[i], o.words_[i]);
    return *this;
  }

  void check_index(int e) const {
    if (e < 0 || e >= parent_->order())
      throw Error(ErrorCode::IndexOutOfRange, "subset element out of range", {e, -1, -1});
  }

  void require_same_parent(const Subset& other) const {
    if (parent_ != other.parent_)
      throw Error(ErrorCode::MixedParents, "subsets belong to different semigroups");
  }

  const InvolutionSemigroup* parent_;
  std::vector<std::uint64_t> words_;
};

// Pairwise set product {ab | a in A, b in B}.
inline Subset set_product(const Subset& A, const Subset& B) {
  if (!A.same_parent(B)) throw Error(ErrorCode::MixedParents, "subsets belong to different semigroups");
  const InvolutionSemigroup& s = A.parent();
  Subset out(s);
  const auto as = A.elements();
  const auto bs = B.elements();
  for (int a : as)
    for (int b : bs) out.add(s.product(a, b));
  return out;
}

// A_1 A_2 ... A_k as an iterated pairwise product. Associativity of the
// underlying product makes the folding order irrelevant.
inline Subset complex_product(std::span<const Subset> sets) {
  if (sets.empty()) throw Error(ErrorCode::EmptyList, "complex product of an empty list");
  Subset acc = sets[0];
  for (std::size_t i = 1; i < sets.size(); ++i) acc = set_product(acc, sets[i]);
  return acc;
}

inline Subset complex_product(const std::vector<Subset>& sets) {
  return complex_product(std::span<const Subset>(sets));
}

// A* = {a* | a in A}.
inline Subset star_set(const Subset& A) {
  const InvolutionSemigroup& s = A.parent();
  Subset out(s);
  for (int a : A.elements()) out.add(s.star(a));
  return out;
}

// H_S = {x x* | x in S}, the hermitian squares.
inline Subset hermitian_squares(const InvolutionSemigroup& s) {
  Subset out(s);
  for (int x = 0; x < s.order(); ++x) out.add(s.product(x, s.star(x)));
  return out;
}

// E_S = {e | ee = e}.
inline Subset idempotents(const InvolutionSemigroup& s) {
  Subset out(s);
  for (int e = 0; e < s.order(); ++e)
    if (s.product(e, e) == e) out.add(e);
  return out;
}

// S^2 = {xy | x, y in S}.
inline Subset square_set(const InvolutionSemigroup& s) {
  Subset out(s);
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b) out.add(s.product(a, b));
  return out;
}

}  // namespace invsemi
