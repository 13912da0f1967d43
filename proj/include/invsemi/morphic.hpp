#pragma once

// Congruences whose quotient is a group, and the kernel characterisations
// tying them to HS-stability. Congruences are enumerated as set partitions
// (restricted growth strings) filtered by product compatibility; no
// principal-congruence machinery, which is fine at this scale.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hs.hpp"

namespace invsemi {

// A product-compatible partition of the elements. star_compatible records
// the partition-level property a ≡ a' ⟹ a* ≡ a'*. Note this is weaker than
// the quotient map preserving the involution in the group sense
// (block[a*] = block[a]⁻¹); see enumerate_group_quotients.
struct Congruence {
  const InvolutionSemigroup* parent = nullptr;
  std::vector<int> block_of;  // element -> block id, ids dense from 0
  int num_blocks = 0;
  bool star_compatible = false;
};

// A congruence whose quotient is a group, packaged with the quotient table
// (as an involution semigroup under group inversion), its identity block,
// and the kernel = preimage of the identity block.
struct GroupQuotient {
  Congruence congruence;
  InvolutionSemigroup group;
  int identity_block = -1;
  Subset kernel;
};

namespace detail {

inline bool is_product_compatible(const InvolutionSemigroup& s, const std::vector<int>& block_of) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (block_of[a] != block_of[b]) continue;
      for (int c = 0; c < n; ++c)
        if (block_of[s.product(a, c)] != block_of[s.product(b, c)] ||
            block_of[s.product(c, a)] != block_of[s.product(c, b)])
          return false;
    }
  return true;
}

inline bool is_star_compatible(const InvolutionSemigroup& s, const std::vector<int>& block_of) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (block_of[a] == block_of[b] && block_of[s.star(a)] != block_of[s.star(b)]) return false;
  return true;
}

// Quotient table over block representatives; group check = identity + inverses.
struct QuotientTable {
  std::vector<int> table;  // k x k row-major
  int k = 0;
  int identity = -1;
  std::vector<int> inverse;  // block -> inverse block, when a group
  bool is_group = false;
};

inline QuotientTable quotient_table(const InvolutionSemigroup& s, const std::vector<int>& block_of,
                                    int num_blocks) {
  QuotientTable q;
  q.k = num_blocks;
  q.table.assign(static_cast<std::size_t>(num_blocks) * num_blocks, -1);
  std::vector<int> rep(num_blocks, -1);
  for (int x = 0; x < s.order(); ++x)
    if (rep[block_of[x]] < 0) rep[block_of[x]] = x;
  for (int a = 0; a < num_blocks; ++a)
    for (int b = 0; b < num_blocks; ++b)
      q.table[static_cast<std::size_t>(a) * num_blocks + b] = block_of[s.product(rep[a], rep[b])];
  auto at = [&](int a, int b) { return q.table[static_cast<std::size_t>(a) * num_blocks + b]; };
  for (int e = 0; e < num_blocks && q.identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < num_blocks && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) q.identity = e;
  }
  if (q.identity < 0) return q;
  q.inverse.assign(num_blocks, -1);
  for (int x = 0; x < num_blocks; ++x) {
    for (int y = 0; y < num_blocks; ++y)
      if (at(x, y) == q.identity && at(y, x) == q.identity) {
        q.inverse[x] = y;
        break;
      }
    if (q.inverse[x] < 0) return q;
  }
  q.is_group = true;
  return q;
}

}  // namespace detail

// All congruences of `s` whose quotient is a group, each packaged with its
// kernel. With star_compatible = true only quotients on which the induced
// map preserves the involution as group inversion (block[a*] = block[a]⁻¹)
// are returned — exactly the group images reachable by a surjective
// homomorphism that respects both the product and the star.
inline std::vector<GroupQuotient> enumerate_group_quotients(const InvolutionSemigroup& s,
                                                            bool star_compatible,
                                                            int max_order = 10) {
  const int n = s.order();
  if (n > max_order)
    throw Error(ErrorCode::TooLarge,
                "order " + std::to_string(n) + " exceeds congruence-enumeration bound " +
                    std::to_string(max_order),
                {n, max_order, -1});
  std::vector<GroupQuotient> out;
  std::vector<int> block_of(n, 0);
  // restricted growth strings enumerate each set partition exactly once
  auto emit = [&]() {
    int num_blocks = 0;
    for (int b : block_of) num_blocks = std::max(num_blocks, b + 1);
    if (!detail::is_product_compatible(s, block_of)) return;
    const auto q = detail::quotient_table(s, block_of, num_blocks);
    if (!q.is_group) return;
    const bool partition_star_ok = detail::is_star_compatible(s, block_of);
    if (star_compatible) {
      for (int a = 0; a < n; ++a)
        if (block_of[s.star(a)] != q.inverse[block_of[a]]) return;
    }
    Congruence cong{&s, block_of, num_blocks, partition_star_ok};
    std::vector<int> star(num_blocks);
    for (int b = 0; b < num_blocks; ++b) star[b] = q.inverse[b];
    InvolutionSemigroup quotient(num_blocks, q.table, star);
    Subset kernel(s);
    for (int x = 0; x < n; ++x)
      if (block_of[x] == q.identity) kernel.add(x);
    out.push_back(GroupQuotient{std::move(cong), std::move(quotient), q.identity, std::move(kernel)});
  };
  // iterative restricted-growth-string generation
  for (;;) {
    emit();
    int i = n - 1;
    while (i >= 1) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, block_of[j]);
      if (block_of[i] <= prefix_max) {
        ++block_of[i];
        for (int j = i + 1; j < n; ++j) block_of[j] = 0;
        break;
      }
      --i;
    }
    if (i < 1) break;
  }
  return out;
}

// closed ∧ reflexive ∧ H_S ⊆ T — the shape every kernel of an involution-
// preserving group quotient has, and conversely.
inline bool check_kernel_characterization(const Subset& T) {
  if (!is_inv_subsemigroup(T))
    throw Error(ErrorCode::NotInvSubsemigroup, "T is not an involution subsemigroup");
  const auto report = predicates(T);
  return report.closed && report.reflexive && hermitian_squares(T.parent()).is_subset_of(T);
}

// Whether the quotient map of q preserves the involution, decided by the
// kernel test H_S ⊆ φ⁻¹(1). Matches the direct check φ(a*) = φ(a)⁻¹.
inline bool check_involution_preservation(const GroupQuotient& q) {
  return hermitian_squares(*q.congruence.parent).is_subset_of(q.kernel);
}

}  // namespace invsemi
