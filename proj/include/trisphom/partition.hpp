#ifndef TRISPHOM_PARTITION_HPP
#define TRISPHOM_PARTITION_HPP

#include <string>
#include <vector>

namespace trisphom {

/// A set partition of {1,...,n} kept in canonical form: elements ascend
/// within each block and blocks are ordered by their least element.
/// Two partitions are equal iff their canonical forms are identical.
class Partition {
public:
    /// Canonicalizes and validates: blocks must be disjoint, nonempty and
    /// cover {1,...,n} exactly. Throws std::invalid_argument otherwise.
    Partition(int n, std::vector<std::vector<int>> blocks);

    /// Parses the canonical string form, e.g. "{1,3}|{2}|{4,5}".
    static Partition parse(const std::string& text, int n);

    int ground_set_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Block index of a ground-set element (1-based element).
    int block_of(int element) const;

    /// True iff every block of *this is contained in a block of coarser.
    /// Non-strict: a partition refines itself.
    bool refines(const Partition& coarser) const;

    std::string to_string() const;

    bool operator==(const Partition& other) const = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // element (1-based) -> block index
};

}  // namespace trisphom

#endif
