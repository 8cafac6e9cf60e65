#ifndef TRISPHOM_LATTICES_HPP
#define TRISPHOM_LATTICES_HPP

#include <optional>
#include <vector>

#include "trisphom/poset.hpp"

namespace trisphom {

/// The reduced partition lattice: all set partitions of {1,...,n} except the
/// discrete and the one-block partition, ordered by refinement (finer is
/// smaller). rank = n - #blocks. Requires n >= 3.
FinitePoset build_reduced_partition_lattice(int n);

/// The reduced subset lattice: all nonempty proper subsets of {1,...,p}
/// ordered by inclusion. rank = cardinality. Requires p >= 2.
FinitePoset build_reduced_subset_lattice(int p);

/// Every nonempty chain of the poset as an ascending index tuple, emitted in
/// lexicographic order. max_length, when given, caps the chain size.
std::vector<std::vector<int>> enumerate_chains(
    const FinitePoset& poset, std::optional<int> max_length = {});

}  // namespace trisphom

#endif
