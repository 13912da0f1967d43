#pragma once

// HS-stability. An involution subsemigroup T of S is HS-stable when it
// contains every hermitian square and xhy ∈ T forces xy ∈ T for hermitian h.
// This header provides the definitional test, an equivalent test via three
// structural conditions, two independent routes to the generated HS-stable
// subsemigroup ⟨A⟩_HS (a closed formula and a rule saturation), enumeration,
// and the witness-chain machinery for deciding when the HS-closure of a
// complex product is a proper subset of a given involution subsemigroup.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "closure.hpp"

namespace invsemi {

enum class HSViolation {
  none,
  not_product_closed,  // (a, b): a, b in T but ab outside T
  not_star_closed,     // (a): a in T but a* outside T
  missing_hermitian,   // (h): hermitian square outside T
  forced_product,      // (h, x, y): xhy in T but xy outside T
  conjugation,         // (x, u): u in H^2 with x u x* outside T
  closure_mismatch,    // (s): s in (Tω ∩ S²) Δ (T ∩ S²)
  star_difference,     // (s): s in (T \ S²) Δ (T* \ S²)
};

struct HSStabilityReport {
  bool stable = false;
  HSViolation violated = HSViolation::none;
  std::array<int, 3> counterexample{{-1, -1, -1}};
};

// Definitional test: involution subsemigroup + both stability rules,
// reporting the first failure in that order.
inline HSStabilityReport is_hs_stable(const Subset& T) {
  const InvolutionSemigroup& s = T.parent();
  const auto members = T.elements();
  for (int a : members)
    for (int b : members)
      if (!T.contains(s.product(a, b)))
        return {false, HSViolation::not_product_closed, {a, b, -1}};
  for (int a : members)
    if (!T.contains(s.star(a))) return {false, HSViolation::not_star_closed, {a, -1, -1}};
  const auto H = hermitian_squares(s).elements();
  for (int h : H)
    if (!T.contains(h)) return {false, HSViolation::missing_hermitian, {h, -1, -1}};
  for (int h : H)
    for (int x = 0; x < s.order(); ++x) {
      const int xh = s.product(x, h);
      for (int y = 0; y < s.order(); ++y)
        if (T.contains(s.product(xh, y)) && !T.contains(s.product(x, y)))
          return {false, HSViolation::forced_product, {h, x, y}};
    }
  return {true, HSViolation::none, {-1, -1, -1}};
}

// ⋃_{x∈S} x H_S² x*.
inline Subset conjugated_hermitian_squares(const InvolutionSemigroup& s) {
  const Subset H = hermitian_squares(s);
  const auto H2 = set_product(H, H).elements();
  Subset out(s);
  for (int x = 0; x < s.order(); ++x) {
    const int xs = s.star(x);
    for (int u : H2) out.add(s.product(s.product(x, u), xs));
  }
  return out;
}

// Equivalent structural test on an arbitrary subset:
//   (1) x H_S² x* ⊆ T for every x,
//   (2) Tω ∩ S² = T ∩ S²,
//   (3) T \ S² = T* \ S².
// Agreement with is_hs_stable on every subset is part of the test suite.
inline HSStabilityReport is_hs_stable_by_conditions(const Subset& T) {
  const InvolutionSemigroup& s = T.parent();
  const auto H2 = set_product(hermitian_squares(s), hermitian_squares(s)).elements();
  for (int x = 0; x < s.order(); ++x) {
    const int xs = s.star(x);
    for (int u : H2)
      if (!T.contains(s.product(s.product(x, u), xs)))
        return {false, HSViolation::conjugation, {x, u, -1}};
  }
  const Subset S2 = square_set(s);
  const Subset lhs = omega(T) & S2;
  const Subset rhs = T & S2;
  if (lhs != rhs) {
    const Subset diff = (lhs - rhs) | (rhs - lhs);
    return {false, HSViolation::closure_mismatch, {diff.elements().front(), -1, -1}};
  }
  const Subset a = T - S2;
  const Subset b = star_set(T) - S2;
  if (a != b) {
    const Subset diff = (a - b) | (b - a);
    return {false, HSViolation::star_difference, {diff.elements().front(), -1, -1}};
  }
  return {true, HSViolation::none, {-1, -1, -1}};
}

// ⟨A⟩_HS by the closed formula
//   (⟨A ∪ ⋃_x x H_S² x*⟩ ω ∩ S²) ∪ ((A ∪ A*) \ S²)
// with ω applied exactly once.
inline Subset gen_hs_stable(const Subset& A) {
  const InvolutionSemigroup& s = A.parent();
  const Subset core = gen_inv_subsemigroup(A | conjugated_hermitian_squares(s));
  const Subset S2 = square_set(s);
  return (omega(core) & S2) | ((A | star_set(A)) - S2);
}

// ⟨A⟩_HS by least-fixpoint saturation, independent of the formula above:
// start from A ∪ H_S and alternate closing under product/star with the
// forced-product rule until nothing new appears. Each rule is forced in
// every HS-stable superset and stable sets are intersection-closed, so the
// result is the least one.
inline Subset gen_hs_stable_saturated(const Subset& A) {
  const InvolutionSemigroup& s = A.parent();
  const int n = s.order();
  const auto H = hermitian_squares(s).elements();
  Subset T = A | hermitian_squares(s);
  for (;;) {
    T = gen_inv_subsemigroup(T);
    bool changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (T.contains(s.product(x, y))) continue;
        for (int h : H)
          if (T.contains(s.product(s.product(x, h), y))) {
            T.add(s.product(x, y));
            changed = true;
            break;
          }
      }
    if (!changed) return T;
  }
}

inline bool is_hs_simple(const InvolutionSemigroup& s) {
  return gen_hs_stable(Subset(s)) == Subset::full(s);
}

// All HS-stable involution subsemigroups, obtained as the distinct images
// of gen_hs_stable over every subset (each stable T is its own image).
// Output is deduplicated and sorted canonically.
inline std::vector<Subset> enumerate_hs_stable(const InvolutionSemigroup& s,
                                               std::uint64_t cap = std::uint64_t{1} << 20) {
  const int n = s.order();
  if (n >= 64 || (std::uint64_t{1} << n) > cap)
    throw Error(ErrorCode::TooLarge,
                "2^" + std::to_string(n) + " subsets exceed cap " + std::to_string(cap),
                {n, -1, -1});
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset A(s);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) A.add(i);
    Subset stable = gen_hs_stable(A);
    if (seen.insert(stable.words()).second) out.push_back(std::move(stable));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return a.lex_less(b); });
  return out;
}

// The witness data showing ⟨S_1 ⋯ S_n⟩_HS ⪇ S': an HS-stable T properly
// contained in S' and anchors a_1, ..., a_{n-1} with
//   S_1 a_1* ⊆ T,   a_{i-1} S_i a_i* ⊆ T (1 < i < n),   a_{n-1} S_n ⊆ T.
// For a single set the anchor list is empty and the condition is S_1 ⊆ T.
struct WitnessChain {
  Subset T;
  std::vector<int> anchors;
};

inline bool witness_chain_conditions(const std::vector<Subset>& sets, const WitnessChain& c) {
  const InvolutionSemigroup& s = c.T.parent();
  const int m = static_cast<int>(sets.size());
  if (m == 1) return sets[0].is_subset_of(c.T);
  if (static_cast<int>(c.anchors.size()) != m - 1) return false;
  for (int x : sets[0].elements())
    if (!c.T.contains(s.product(x, s.star(c.anchors[0])))) return false;
  for (int i = 1; i + 1 < m; ++i)
    for (int y : sets[i].elements())
      if (!c.T.contains(s.product(s.product(c.anchors[i - 1], y), s.star(c.anchors[i]))))
        return false;
  for (int y : sets[m - 1].elements())
    if (!c.T.contains(s.product(c.anchors[m - 2], y))) return false;
  return true;
}

inline bool verify_witness_chain(const std::vector<Subset>& sets, const Subset& sprime,
                                 const WitnessChain& c) {
  if (!(c.T.is_subset_of(sprime) && c.T != sprime)) return false;
  if (!is_hs_stable(c.T).stable) return false;
  return witness_chain_conditions(sets, c);
}

struct ProblemResult {
  bool proper = false;                  // whether ⟨S_1 ⋯ S_n⟩_HS ⪇ S'
  std::optional<WitnessChain> witness;  // present iff proper
};

// Decides whether the HS-closure of the complex product S_1 ⋯ S_n is a
// proper subset of the involution subsemigroup S'. When it is, constructs a
// witness chain with T = ⟨S_1 ⋯ S_n⟩_HS and anchors a_i = x_1 ⋯ x_i for the
// least element x_i of each S_i, re-verified before returning. The
// exhaustive mode instead searches every HS-stable T ⪇ S' and every anchor
// tuple; it exists to cross-validate the construction on small instances.
inline ProblemResult check_problem(const std::vector<Subset>& sets, const Subset& sprime,
                                   bool exhaustive = false) {
  if (sets.empty()) throw Error(ErrorCode::EmptyList, "no sets given");
  for (const Subset& a : sets)
    if (a.empty()) throw Error(ErrorCode::EmptyInput, "all sets must be nonempty");
  if (!is_inv_subsemigroup(sprime))
    throw Error(ErrorCode::NotSubsemigroup, "S' is not an involution subsemigroup");
  const InvolutionSemigroup& s = sprime.parent();
  const int m = static_cast<int>(sets.size());

  if (exhaustive) {
    for (const Subset& T : enumerate_hs_stable(s)) {
      if (!(T.is_subset_of(sprime) && T != sprime)) continue;
      if (m == 1) {
        if (sets[0].is_subset_of(T)) return {true, WitnessChain{T, {}}};
        continue;
      }
      // try every anchor tuple
      std::vector<int> anchors(m - 1, 0);
      for (;;) {
        WitnessChain c{T, anchors};
        if (witness_chain_conditions(sets, c)) return {true, std::move(c)};
        int pos = m - 2;
        while (pos >= 0 && anchors[pos] == s.order() - 1) anchors[pos--] = 0;
        if (pos < 0) break;
        ++anchors[pos];
      }
    }
    return {false, std::nullopt};
  }

  Subset closure = gen_hs_stable(complex_product(sets));
  if (!(closure.is_subset_of(sprime) && closure != sprime)) return {false, std::nullopt};
  WitnessChain chain{std::move(closure), {}};
  int prefix = -1;
  for (int i = 0; i + 1 < m; ++i) {
    const int xi = sets[i].elements().front();
    prefix = (prefix < 0) ? xi : s.product(prefix, xi);
    chain.anchors.push_back(prefix);
  }
  if (!verify_witness_chain(sets, sprime, chain))
    throw std::logic_error("constructed witness chain failed re-verification");
  return {true, std::move(chain)};
}

struct CosetReport {
  bool equal = false;                // ⟨A⁻¹A⟩ = ⟨A⟩
  int representative = -1;           // g with A ⊆ g G', when unequal
  std::optional<Subset> subgroup;    // G' = ⟨A⁻¹A⟩, when unequal
};

// In a group with star = inversion: decides ⟨A⁻¹A⟩ = ⟨A⟩ and, when the two
// differ, exhibits the coset containment A ⊆ g⟨A⁻¹A⟩ with g ∈ A.
inline CosetReport check_coset_criterion(const InvolutionSemigroup& g, const Subset& A) {
  if (!is_group_with_inversion(g))
    throw Error(ErrorCode::NotAGroup, "table with star is not a group with inversion");
  const Subset lhs = gen_inv_subsemigroup(set_product(star_set(A), A));
  const Subset rhs = gen_inv_subsemigroup(A);
  if (lhs == rhs) return {true, -1, std::nullopt};
  const int rep = A.elements().front();
  for (int a : A.elements())
    if (!lhs.contains(g.product(g.star(rep), a)))
      throw std::logic_error("coset witness failed re-verification");
  return {false, rep, lhs};
}

// (S_1 ⋯ S_k)(S_1 ⋯ S_k)* ⊆ ⟨S_1 ⋯ S_n⟩_HS; holds for all inputs.
inline bool prefix_hermitian_containment(const std::vector<Subset>& sets, int k) {
  if (sets.empty()) throw Error(ErrorCode::EmptyList, "no sets given");
  if (k < 1 || k > static_cast<int>(sets.size()))
    throw Error(ErrorCode::IndexOutOfRange, "prefix length out of range", {k, -1, -1});
  for (const Subset& a : sets)
    if (a.empty()) throw Error(ErrorCode::EmptyInput, "all sets must be nonempty");
  std::vector<Subset> palindrome(sets.begin(), sets.begin() + k);
  for (int i = k - 1; i >= 0; --i) palindrome.push_back(star_set(sets[i]));
  return complex_product(palindrome).is_subset_of(gen_hs_stable(complex_product(sets)));
}

}  // namespace invsemi
