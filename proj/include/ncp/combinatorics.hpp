#pragma once

#include "ncp/guards.hpp"
#include "ncp/partition.hpp"
#include "ncp/rational.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ncp {

// ---- enumeration ---------------------------------------------------------

// All noncrossing partitions of [n], deterministically ordered by
// (block count, canonical text).  Guarded by Guards::enumerate_legs.
std::vector<NoncrossingPartition> enumerate_ncp(int n);

// Streaming variant (same order of production as the recursive generator).
void visit_ncp(int n, const std::function<void(const NoncrossingPartition&)>& visit);

// The partition {{1},{2},...,{n}} (all singletons).
NoncrossingPartition singletons(int n);

// The partition {{1,...,n}} (one block).
NoncrossingPartition one_block(int n);

// ---- nesting order and ideals -------------------------------------------

// b <= b' iff block b' fits inside the span [min(b), max(b)] of b;
// minimal blocks are the outermost ones.
bool nesting_leq(const NoncrossingPartition& p, int b, int bp);

// Outermost blocks (minimal for the nesting order), ascending indices.
std::vector<int> base_blocks(const NoncrossingPartition& p);

// Immediate nesting parent of each block (the innermost block strictly
// containing it in span), or -1 for base blocks.  The nesting order of a
// noncrossing partition is a forest.
std::vector<int> nesting_parents(const NoncrossingPartition& p);

// Up-closed block subsets for the nesting order, in bitmask order
// (empty set first).  Guarded by Guards::ideal_blocks.
std::vector<std::vector<int>> ideals(const NoncrossingPartition& p);

// ---- restrictions --------------------------------------------------------

// Component-split restriction: the legs covered by the chosen blocks are cut
// into maximal integer intervals; each interval yields one factor, relabeled
// by the unique increasing bijection.  Blocks must not straddle components
// (always true for ideals).
std::vector<NoncrossingPartition> restrict_blocks(const NoncrossingPartition& p,
                                                  const std::vector<int>& blocks);

// Single-partition restriction: all chosen blocks relabeled onto one leg
// interval (gaps collapse).  Empty selection yields the empty partition.
NoncrossingPartition restrict_class(const NoncrossingPartition& p,
                                    const std::vector<int>& blocks);

// ---- fusion --------------------------------------------------------------

// Classwise fusion; throws NotContractible if the result crosses.
NoncrossingPartition quotient(const NoncrossingPartition& p, const BlockEquivalence& e);

// All equivalences whose quotient is noncrossing, canonically ordered.
// Guarded by Guards::equivalence_blocks.
std::vector<BlockEquivalence> contractible_equivalences(const NoncrossingPartition& p);

// Classes of the transitive closure of "max(b) + 1 = min(b')" adjacency.
BlockEquivalence adjacency_classes(const NoncrossingPartition& p);

// ---- block pairs (coefficient formulas) ----------------------------------

// Ordered pairs (b, b') with max(b) < min(b') in a common adjacency class.
std::vector<std::pair<int, int>> close_pairs(const NoncrossingPartition& p);

// Covers of the nesting order: b strictly outside b' with nothing between.
std::vector<std::pair<int, int>> nested_pairs(const NoncrossingPartition& p);

// Fuse one pair of blocks into one; throws NotContractible if it crosses.
NoncrossingPartition merge_pair(const NoncrossingPartition& p, int b, int bp);

// ---- linear extensions ---------------------------------------------------

// Number of linear extensions of the nesting forest (hook-length product).
Integer linear_extension_count(const NoncrossingPartition& p);

// Permutation scan, for cross-checking small cases.
Integer linear_extension_count_brute(const NoncrossingPartition& p);

} // namespace ncp
