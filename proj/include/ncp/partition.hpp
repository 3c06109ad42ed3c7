#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ncp {

// A noncrossing partition of [n] in canonical form: blocks sorted by their
// minimum, elements ascending inside each block.  Immutable after
// construction; construction validates coverage and the noncrossing
// condition.  The empty partition (n = 0, no blocks) is admitted and is the
// building block of the algebra unit.
class NoncrossingPartition {
public:
    NoncrossingPartition() = default;

    // Canonicalizes and validates; throws NotAPartition or Crossing.
    static NoncrossingPartition from_blocks(std::vector<std::vector<int>> blocks);

    // Grammar: blocks separated by '|', elements comma-separated ascending,
    // whitespace ignored, empty string <-> empty partition.
    static NoncrossingPartition parse(const std::string& text);

    int legs() const { return legs_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    bool empty() const { return legs_ == 0; }

    // Canonical serialization, e.g. "1,4|2|3"; "" for the empty partition.
    const std::string& text() const { return text_; }

    // Index of the block containing a leg (1-based leg).
    int block_of(int leg) const;

    // Ordering key: (legs, block count, canonical text).
    std::strong_ordering operator<=>(const NoncrossingPartition& o) const;
    bool operator==(const NoncrossingPartition& o) const = default;

private:
    int legs_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> owner_;  // leg -> block index
    std::string text_;
};

// An equivalence on the blocks of a partition, given by its classes
// (0-based block indices).  Canonical form: indices ascending in a class,
// classes sorted by least index.
struct BlockEquivalence {
    std::vector<std::vector<int>> classes;

    static BlockEquivalence from_classes(std::vector<std::vector<int>> cls);
    int class_count() const { return static_cast<int>(classes.size()); }
    bool operator==(const BlockEquivalence& o) const = default;
    auto operator<=>(const BlockEquivalence& o) const = default;
};

// Block-size census: entry k-1 counts blocks of cardinality k.
struct PartitionProfile {
    std::vector<int> counts;

    bool operator==(const PartitionProfile& o) const = default;
    auto operator<=>(const PartitionProfile& o) const = default;
};

PartitionProfile profile(const NoncrossingPartition& p);

} // namespace ncp
