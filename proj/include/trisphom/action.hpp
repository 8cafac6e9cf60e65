#ifndef TRISPHOM_ACTION_HPP
#define TRISPHOM_ACTION_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisphom/complex.hpp"
#include "trisphom/partition.hpp"
#include "trisphom/permutation.hpp"
#include "trisphom/poset.hpp"
#include "trisphom/subset.hpp"

namespace trisphom {

/// Blockwise image of a partition, recanonicalized. Degree must match.
Partition act_on_partition(const Permutation& g, const Partition& v);

/// Elementwise image of a subset. Degree must match.
SubsetElement act_on_subset(const Permutation& g, const SubsetElement& v);

/// A permutation group acting on a partition- or subset-lattice poset by
/// order automorphisms, with the full action table materialized.
class GroupAction {
public:
    /// Throws std::invalid_argument when degrees mismatch, the poset kind is
    /// explicit, or some image label is not a poset element.
    GroupAction(PermutationGroup group, std::shared_ptr<const FinitePoset> poset);
    GroupAction(PermutationGroup group, const FinitePoset& poset);

    const PermutationGroup& group() const { return group_; }
    const FinitePoset& poset() const { return *poset_; }
    std::shared_ptr<const FinitePoset> poset_ptr() const { return poset_; }

    /// Image of poset element e under group element g (indices).
    int apply(int g, int e) const { return table_[g][e]; }

private:
    PermutationGroup group_;
    std::shared_ptr<const FinitePoset> poset_;
    std::vector<std::vector<int>> table_;  // [group element][poset element]
};

/// Outcome of the freeness scan: free, or a concrete witness g != id with
/// g.v = v.
struct FreenessVerdict {
    bool free = false;
    std::optional<Permutation> witness_group_element;
    int witness_poset_element = -1;
    std::string witness_label;
};

/// "free" iff no non-identity group element fixes any poset element. The
/// witness, when present, is the first fixed pair in (group element, poset
/// index) scan order.
FreenessVerdict is_free_action(const GroupAction& a);

struct OrbitPartition {
    std::vector<std::vector<int>> orbits;  // each sorted; ordered by least member
    std::vector<int> orbit_of;             // element -> orbit index
    std::vector<int> representative;       // orbit -> least element
};

/// Orbits of poset elements, canonical least-index representatives.
OrbitPartition orbits(const GroupAction& a);

/// Raised when a quotient is requested for a non-free action.
class NonFreeActionError : public std::invalid_argument {
public:
    NonFreeActionError(std::string message, FreenessVerdict verdict)
        : std::invalid_argument(std::move(message)),
          verdict(std::move(verdict)) {}

    FreenessVerdict verdict;
};

/// The quotient trisp: d-simplices are orbits of d-simplices of c, face i of
/// an orbit is the orbit of face i of its least-id representative. Requires
/// a free action and c = order_complex(a.poset()); refuses non-free actions
/// with a NonFreeActionError carrying the witness. Induced face maps are
/// checked to be representative-independent.
DeltaComplex quotient_complex(const DeltaComplex& c, const GroupAction& a);

}  // namespace trisphom

#endif
