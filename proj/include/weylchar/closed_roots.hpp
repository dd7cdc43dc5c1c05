#pragma once

#include <vector>

#include "weylchar/root_datum.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

// A closed subset Psi of Phi+: whenever alpha, beta in Psi and alpha + beta
// is a positive root, alpha + beta lies in Psi.
struct ClosedRootSubset {
    std::vector<int> roots; // positive-root indices, sorted
};

bool is_closed(const RootDatum& d, const std::vector<int>& subset);

// Rejects non-closed input instead of completing it; use
// positive_roots_closure to complete a seed.
ClosedRootSubset make_closed(const RootDatum& d, std::vector<int> subset);

// W_Psi = {w in W : w(Psi) subset Phi+}, canonical order.
std::vector<WeylElement> w_psi_set(const RootDatum& d, const ClosedRootSubset& psi,
                                   std::size_t cap = kDefaultWeylCap);
std::vector<WeylElement> w_psi_set(const std::vector<WeylElement>& weyl, const ClosedRootSubset& psi);

bool in_w_psi(const WeylElement& w, const ClosedRootSubset& psi);

// Delta intersected with w_psi(Psi), as simple indices.
std::vector<int> delta_cap(const WeylElement& w_psi, const ClosedRootSubset& psi);

// All pairwise-orthogonal subsets of a set of simple roots (empty set
// included), ordered by (size, lexicographic).
std::vector<std::vector<int>> orthogonal_subsets(const RootDatum& d, const std::vector<int>& simples);

// With w = (prod_{alpha in I} s_alpha) * w_psi, checks I = Delta cap w(-Psi).
bool verify_I_identity(const RootDatum& d, const ClosedRootSubset& psi, const WeylElement& w_psi,
                       const std::vector<int>& I);

// All closed subsets of Phi+, canonical order (by size, then lexicographic on
// the sorted index vectors).  BoundError when |Phi+| exceeds max_roots.
std::vector<ClosedRootSubset> enumerate_closed_subsets(const RootDatum& d, int max_roots = 12);

} // namespace weylchar
