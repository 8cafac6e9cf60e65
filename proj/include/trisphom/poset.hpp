#ifndef TRISPHOM_POSET_HPP
#define TRISPHOM_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace trisphom {

/// Square bit matrix holding a strict order relation on dense indices.
class BitRelation {
public:
    BitRelation() : n_(0), words_(0) {}
    explicit BitRelation(int n);

    int size() const { return n_; }
    bool get(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >>
                (j & 63)) & 1u;
    }
    void set(int i, int j);

    /// Word count per row; rows are contiguous in bits().
    int words_per_row() const { return words_; }
    const std::uint64_t* row(int i) const {
        return bits_.data() + static_cast<std::size_t>(i) * words_;
    }

    /// True iff rows i and j intersect (some k with get(i,k) && get(j,k)).
    bool rows_intersect(int i, int j) const;

    /// True iff row i is contained in row j.
    bool row_subset(int i, int j) const;

    BitRelation transposed() const;

    bool operator==(const BitRelation& other) const = default;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

enum class PosetKind { partition, subset, explicit_ };

std::string to_string(PosetKind kind);
PosetKind poset_kind_from_string(const std::string& s);

/// A finite poset over dense element indices 0..size()-1. The indexing is
/// required to be a linear extension: less(i, j) implies i < j. Covers are
/// the transitive reduction of the order, ranks increase strictly along
/// covers. Immutable after construction.
class FinitePoset {
public:
    /// `less` must be a strict order (irreflexive, transitive) compatible
    /// with the index order; throws std::invalid_argument otherwise.
    /// If `ranks` is absent, element heights (longest chain below) are used.
    FinitePoset(PosetKind kind, int ground_n, std::vector<std::string> labels,
                BitRelation less, std::optional<std::vector<int>> ranks = {});

    int size() const { return static_cast<int>(labels_.size()); }
    PosetKind kind() const { return kind_; }
    int ground_n() const { return ground_n_; }

    bool less(int i, int j) const { return less_.get(i, j); }
    const BitRelation& relation() const { return less_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int rank(int i) const { return ranks_[i]; }
    const std::string& label(int i) const { return labels_[i]; }

    /// Index of the element with the given canonical label, or -1.
    int index_of(const std::string& label) const;

    /// Strictly increasing successors of i in index order (the up-set).
    std::vector<int> upper_set(int i) const;

private:
    void validate() const;
    void compute_covers();

    PosetKind kind_;
    int ground_n_;
    std::vector<std::string> labels_;
    BitRelation less_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> ranks_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace trisphom

#endif
