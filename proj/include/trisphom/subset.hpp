#ifndef TRISPHOM_SUBSET_HPP
#define TRISPHOM_SUBSET_HPP

#include <string>
#include <vector>

namespace trisphom {

/// A nonempty proper subset of {1,...,p}, the element type of the reduced
/// subset lattice. Members are kept sorted ascending.
class SubsetElement {
public:
    /// Validates 0 < |members| < p, members within {1,...,p}, no repeats.
    SubsetElement(int p, std::vector<int> members);

    /// Parses the canonical string form, e.g. "{1,3}".
    static SubsetElement parse(const std::string& text, int p);

    int ground_set_size() const { return p_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    bool contains(int element) const;

    /// Strict inclusion test against another subset of the same ground set.
    bool proper_subset_of(const SubsetElement& other) const;

    std::string to_string() const;

    bool operator==(const SubsetElement& other) const = default;

private:
    int p_;
    std::vector<int> members_;
};

}  // namespace trisphom

#endif
