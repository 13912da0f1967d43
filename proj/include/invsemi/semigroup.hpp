#pragma once

// Finite involution semigroups as validated Cayley tables.
//
// An involution semigroup is a finite set {0, ..., n-1} with an associative
// product given by an n x n table and a unary * satisfying (x*)* = x and
// (xy)* = y* x*. Construction always validates all three axioms, so every
// live InvolutionSemigroup value is structurally sound. Values are immutable
// after construction and safe to share across threads.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace invsemi {

class InvolutionSemigroup {
 public:
  // Validates shape, associativity, involutivity, and the antihomomorphism
  // law, in that order, and throws Error naming the first violated axiom
  // with a concrete witness. `table` is row-major: table[a][b] = a∘b.
  InvolutionSemigroup(std::vector<std::vector<int>> table, std::vector<int> star,
                      std::vector<std::string> names = {}, std::string name = {})
      : star_(std::move(star)), names_(std::move(names)), name_(std::move(name)) {
    n_ = static_cast<int>(table.size());
    if (n_ <= 0) throw Error(ErrorCode::IndexOutOfRange, "order must be positive", {n_, -1, -1});
    table_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n_)
        throw Error(ErrorCode::IndexOutOfRange, "table is not square",
                    {static_cast<int>(row.size()), -1, -1});
      table_.insert(table_.end(), row.begin(), row.end());
    }
    check();
  }

  // Same as above with a flattened row-major table.
  InvolutionSemigroup(int order, std::vector<int> flat_table, std::vector<int> star,
                      std::vector<std::string> names = {}, std::string name = {})
      : n_(order),
        table_(std::move(flat_table)),
        star_(std::move(star)),
        names_(std::move(names)),
        name_(std::move(name)) {
    if (n_ <= 0) throw Error(ErrorCode::IndexOutOfRange, "order must be positive", {n_, -1, -1});
    if (static_cast<int>(table_.size()) != n_ * n_)
      throw Error(ErrorCode::IndexOutOfRange, "table size does not match order",
                  {static_cast<int>(table_.size()), -1, -1});
    check();
  }

  int order() const noexcept { return n_; }

  // Unchecked product, for internal loops over known-valid indices.
  int product(int a, int b) const {
    assert(a >= 0 && a < n_ && b >= 0 && b < n_);
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }

  // Range-checked product.
  int mult(int a, int b) const {
    if (a < 0 || a >= n_) throw Error(ErrorCode::IndexOutOfRange, "element out of range", {a, -1, -1});
    if (b < 0 || b >= n_) throw Error(ErrorCode::IndexOutOfRange, "element out of range", {b, -1, -1});
    return product(a, b);
  }

  int star(int a) const {
    if (a < 0 || a >= n_) throw Error(ErrorCode::IndexOutOfRange, "element out of range", {a, -1, -1});
    return star_[a];
  }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name() const noexcept { return name_; }

  // Display label: the given name when present, the index otherwise.
  std::string label(int a) const {
    if (a >= 0 && a < static_cast<int>(names_.size())) return names_[a];
    return std::to_string(a);
  }

  const std::vector<int>& flat_table() const noexcept { return table_; }
  const std::vector<int>& star_map() const noexcept { return star_; }

  bool operator==(const InvolutionSemigroup& other) const noexcept {
    return n_ == other.n_ && table_ == other.table_ && star_ == other.star_;
  }

 private:
  void check() const {
    for (int v : table_)
      if (v < 0 || v >= n_)
        throw Error(ErrorCode::IndexOutOfRange, "table entry out of range", {v, -1, -1});
    if (static_cast<int>(star_.size()) != n_)
      throw Error(ErrorCode::IndexOutOfRange, "star map length does not match order",
                  {static_cast<int>(star_.size()), -1, -1});
    for (int v : star_)
      if (v < 0 || v >= n_)
        throw Error(ErrorCode::IndexOutOfRange, "star entry out of range", {v, -1, -1});
    if (!names_.empty() && static_cast<int>(names_.size()) != n_)
      throw Error(ErrorCode::IndexOutOfRange, "names length does not match order",
                  {static_cast<int>(names_.size()), -1, -1});
    // Exhaustive O(n^3) associativity scan; no shortcut needed at this scale.
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = product(a, b);
        for (int c = 0; c < n_; ++c)
          if (product(ab, c) != product(a, product(b, c)))
            throw Error(ErrorCode::NotAssociative,
                        "(a b) c != a (b c) for a=" + std::to_string(a) +
                            " b=" + std::to_string(b) + " c=" + std::to_string(c),
                        {a, b, c});
      }
    for (int a = 0; a < n_; ++a)
      if (star_[star_[a]] != a)
        throw Error(ErrorCode::StarNotInvolutive, "(a*)* != a for a=" + std::to_string(a),
                    {a, -1, -1});
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (star_[product(a, b)] != product(star_[b], star_[a]))
          throw Error(ErrorCode::StarNotAntihom,
                      "(a b)* != b* a* for a=" + std::to_string(a) + " b=" + std::to_string(b),
                      {a, b, -1});
  }

  int n_ = 0;
  std::vector<int> table_;  // row-major n x n
  std::vector<int> star_;
  std::vector<std::string> names_;
  std::string name_;
};

// Factory form of the validating constructor.
inline InvolutionSemigroup validate(std::vector<std::vector<int>> table, std::vector<int> star,
                                    std::vector<std::string> names = {}, std::string name = {}) {
  return InvolutionSemigroup(std::move(table), std::move(star), std::move(names), std::move(name));
}

// One factor of a product expression: an element index, optionally starred.
struct TermFactor {
  int element = 0;
  bool starred = false;

  bool operator==(const TermFactor&) const = default;
};

// A product expression over generator elements together with its value.
// Invariant: eval_term(parent, factors) == value.
struct ElementTerm {
  std::vector<TermFactor> factors;
  int value = -1;
};

inline int eval_term(const InvolutionSemigroup& s, const std::vector<TermFactor>& factors) {
  if (factors.empty()) throw Error(ErrorCode::EmptyInput, "term has no factors");
  int acc = -1;
  for (const TermFactor& f : factors) {
    const int x = f.starred ? s.star(f.element) : f.element;
    acc = (acc < 0) ? x : s.mult(acc, x);
  }
  return acc;
}

// (t)* as a term: reverse the factors and flip every star flag.
inline ElementTerm star_term(const InvolutionSemigroup& s, const ElementTerm& t) {
  ElementTerm out;
  out.factors.reserve(t.factors.size());
  for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
    out.factors.push_back({it->element, !it->starred});
  out.value = s.star(t.value);
  return out;
}

inline ElementTerm concat_terms(const InvolutionSemigroup& s, const ElementTerm& a,
                                const ElementTerm& b) {
  ElementTerm out;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.value = s.product(a.value, b.value);
  return out;
}

// Two-sided identity, or -1.
inline int find_identity(const InvolutionSemigroup& s) {
  for (int e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x)
      ok = s.product(e, x) == x && s.product(x, e) == x;
    if (ok) return e;
  }
  return -1;
}

// Two-sided absorbing element, or -1.
inline int find_zero(const InvolutionSemigroup& s) {
  for (int z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x)
      ok = s.product(z, x) == z && s.product(x, z) == z;
    if (ok) return z;
  }
  return -1;
}

// True iff the table is a group and star is the group inversion.
inline bool is_group_with_inversion(const InvolutionSemigroup& s) {
  const int e = find_identity(s);
  if (e < 0) return false;
  for (int x = 0; x < s.order(); ++x) {
    const int y = s.star(x);
    if (s.product(x, y) != e || s.product(y, x) != e) return false;
  }
  return true;  // star provides a two-sided inverse for every element
}

}  // namespace invsemi
