#pragma once

// The closure operator Tω = {s | ∃t ∈ T : st ∈ T}, generated (involution)
// subsemigroups, and the full/closed/reflexive/dense subset predicates.
//
// omega applies the defining condition exactly once. It is monotone, and
// extensive on subsemigroups, but not idempotent in general; callers that
// want a fixpoint must iterate explicitly.

#include <optional>
#include <vector>

#include "subset.hpp"

namespace invsemi {

inline Subset omega(const Subset& T) {
  const InvolutionSemigroup& s = T.parent();
  Subset out(s);
  const auto members = T.elements();
  for (int x = 0; x < s.order(); ++x)
    for (int t : members)
      if (T.contains(s.product(x, t))) {
        out.add(x);
        break;
      }
  return out;
}

// ⟨⟨A⟩⟩: least product-closed superset of A.
inline Subset gen_subsemigroup(const Subset& A) {
  const InvolutionSemigroup& s = A.parent();
  Subset closed = A;
  std::vector<int> members = A.elements();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (int p : {s.product(members[i], members[j]), s.product(members[j], members[i])})
        if (!closed.contains(p)) {
          closed.add(p);
          members.push_back(p);
        }
    }
  return closed;
}

// ⟨A⟩: least superset of A closed under product and star. ⟨∅⟩ = ∅, the
// least fixed point, so that this stays a closure operator.
inline Subset gen_inv_subsemigroup(const Subset& A) {
  const InvolutionSemigroup& s = A.parent();
  Subset closed = A;
  std::vector<int> members = A.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int st = s.star(members[i]);
    if (!closed.contains(st)) {
      closed.add(st);
      members.push_back(st);
    }
    for (std::size_t j = 0; j <= i; ++j)
      for (int p : {s.product(members[i], members[j]), s.product(members[j], members[i])})
        if (!closed.contains(p)) {
          closed.add(p);
          members.push_back(p);
        }
  }
  return closed;
}

// ⟨A⟩ together with a product expression over A for each member, usable as
// a membership proof. Slot x is empty iff x ∉ ⟨A⟩.
inline std::vector<std::optional<ElementTerm>> gen_inv_subsemigroup_terms(const Subset& A) {
  const InvolutionSemigroup& s = A.parent();
  std::vector<std::optional<ElementTerm>> term(s.order());
  std::vector<int> members;
  for (int a : A.elements()) {
    term[a] = ElementTerm{{{a, false}}, a};
    members.push_back(a);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ElementTerm starred = star_term(s, *term[members[i]]);
    if (!term[starred.value]) {
      term[starred.value] = starred;
      members.push_back(starred.value);
    }
    for (std::size_t j = 0; j <= i; ++j)
      for (const ElementTerm& t :
           {concat_terms(s, *term[members[i]], *term[members[j]]),
            concat_terms(s, *term[members[j]], *term[members[i]])})
        if (!term[t.value]) {
          term[t.value] = t;
          members.push_back(t.value);
        }
  }
  return term;
}

// Verdicts of the four subset predicates, each with a witness on failure:
//   full:      {e}        idempotent outside T
//   closed:    {s, t}     s in Tω \ T with witness t (st ∈ T, t ∈ T),
//              {s}        or s in T \ Tω
//   reflexive: {a, b}     ab ∈ T but ba ∉ T, minimal in (a, b) index order
//   dense:     {s}        no x with sx ∈ T, or no y with ys ∈ T
struct SubsetPredicateReport {
  bool full = false;
  bool closed = false;
  bool reflexive = false;
  bool dense = false;
  std::optional<std::array<int, 3>> full_counterexample;
  std::optional<std::array<int, 3>> closed_counterexample;
  std::optional<std::array<int, 3>> reflexive_counterexample;
  std::optional<std::array<int, 3>> dense_counterexample;
};

inline SubsetPredicateReport predicates(const Subset& T) {
  const InvolutionSemigroup& s = T.parent();
  const int n = s.order();
  SubsetPredicateReport r;

  r.full = true;
  for (int e = 0; e < n && r.full; ++e)
    if (s.product(e, e) == e && !T.contains(e)) {
      r.full = false;
      r.full_counterexample = {{e, -1, -1}};
    }

  const Subset Tw = omega(T);
  r.closed = (T == Tw);
  if (!r.closed) {
    for (int x = 0; x < n; ++x) {
      if (Tw.contains(x) && !T.contains(x)) {
        int witness = -1;
        for (int t : T.elements())
          if (T.contains(s.product(x, t))) {
            witness = t;
            break;
          }
        r.closed_counterexample = {{x, witness, -1}};
        break;
      }
      if (T.contains(x) && !Tw.contains(x)) {
        r.closed_counterexample = {{x, -1, -1}};
        break;
      }
    }
  }

  r.reflexive = true;
  for (int a = 0; a < n && r.reflexive; ++a)
    for (int b = 0; b < n; ++b)
      if (T.contains(s.product(a, b)) && !T.contains(s.product(b, a))) {
        r.reflexive = false;
        r.reflexive_counterexample = {{a, b, -1}};
        break;
      }

  r.dense = true;
  for (int x = 0; x < n && r.dense; ++x) {
    bool right = false, left = false;
    for (int y = 0; y < n && !(right && left); ++y) {
      right = right || T.contains(s.product(x, y));
      left = left || T.contains(s.product(y, x));
    }
    if (!right || !left) {
      r.dense = false;
      r.dense_counterexample = {{x, -1, -1}};
    }
  }
  return r;
}

// True iff T is closed under the product.
inline bool is_subsemigroup(const Subset& T) {
  const InvolutionSemigroup& s = T.parent();
  const auto members = T.elements();
  for (int a : members)
    for (int b : members)
      if (!T.contains(s.product(a, b))) return false;
  return true;
}

// True iff T is closed under product and star.
inline bool is_inv_subsemigroup(const Subset& T) {
  if (!is_subsemigroup(T)) return false;
  const InvolutionSemigroup& s = T.parent();
  for (int a : T.elements())
    if (!T.contains(s.star(a))) return false;
  return true;
}

}  // namespace invsemi
