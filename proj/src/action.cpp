#include "trisphom/action.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace trisphom {

Partition act_on_partition(const Permutation& g, const Partition& v) {
    if (g.degree() != v.ground_set_size()) {
        throw std::invalid_argument("permutation degree does not match the partition ground set");
    }
    std::vector<std::vector<int>> blocks;
    blocks.reserve(v.blocks().size());
    for (const auto& block : v.blocks()) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int x : block) image.push_back(g.image(x));
        blocks.push_back(std::move(image));
    }
    return Partition(v.ground_set_size(), std::move(blocks));
}

SubsetElement act_on_subset(const Permutation& g, const SubsetElement& v) {
    if (g.degree() != v.ground_set_size()) {
        throw std::invalid_argument("permutation degree does not match the subset ground set");
    }
    std::vector<int> image;
    image.reserve(v.members().size());
    for (int x : v.members()) image.push_back(g.image(x));
    return SubsetElement(v.ground_set_size(), std::move(image));
}

GroupAction::GroupAction(PermutationGroup group,
                         std::shared_ptr<const FinitePoset> poset)
    : group_(std::move(group)), poset_(std::move(poset)) {
    if (poset_ == nullptr) {
        throw std::invalid_argument("group action requires a poset");
    }
    if (poset_->kind() == PosetKind::explicit_) {
        throw std::invalid_argument(
            "explicit posets carry no canonical symbol action");
    }
    if (group_.degree() != poset_->ground_n()) {
        throw std::invalid_argument(
            "group degree " + std::to_string(group_.degree()) +
            " does not match the poset ground set size " +
            std::to_string(poset_->ground_n()));
    }

    const int n = poset_->size();
    table_.assign(group_.order(), std::vector<int>(n, -1));
    for (std::size_t gi = 0; gi < group_.order(); ++gi) {
        const Permutation& g = group_.elements()[gi];
        for (int e = 0; e < n; ++e) {
            std::string image_label;
            if (poset_->kind() == PosetKind::partition) {
                const Partition v =
                    Partition::parse(poset_->label(e), poset_->ground_n());
                image_label = act_on_partition(g, v).to_string();
            } else {
                const SubsetElement v =
                    SubsetElement::parse(poset_->label(e), poset_->ground_n());
                image_label = act_on_subset(g, v).to_string();
            }
            const int image = poset_->index_of(image_label);
            if (image < 0) {
                throw std::invalid_argument(
                    "the action leaves the poset: " + poset_->label(e) +
                    " maps to " + image_label);
            }
            table_[gi][e] = image;
        }
        // Order automorphism check: g preserves the strict order. Its
        // inverse lies in the group, so preservation by every element
        // already forces preservation in both directions.
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (poset_->less(i, j) &&
                    !poset_->less(table_[gi][i], table_[gi][j])) {
                    throw std::logic_error(
                        "group element does not act by order automorphisms");
                }
            }
        }
    }
}

GroupAction::GroupAction(PermutationGroup group, const FinitePoset& poset)
    : GroupAction(std::move(group),
                  std::make_shared<const FinitePoset>(poset)) {}

FreenessVerdict is_free_action(const GroupAction& a) {
    FreenessVerdict verdict;
    const int n = a.poset().size();
    for (std::size_t gi = 1; gi < a.group().order(); ++gi) {
        for (int e = 0; e < n; ++e) {
            if (a.apply(static_cast<int>(gi), e) == e) {
                verdict.free = false;
                verdict.witness_group_element = a.group().elements()[gi];
                verdict.witness_poset_element = e;
                verdict.witness_label = a.poset().label(e);
                return verdict;
            }
        }
    }
    verdict.free = true;
    return verdict;
}

OrbitPartition orbits(const GroupAction& a) {
    OrbitPartition result;
    const int n = a.poset().size();
    result.orbit_of.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        if (result.orbit_of[e] != -1) continue;
        const int orbit_index = static_cast<int>(result.orbits.size());
        std::vector<int> orbit;
        for (std::size_t gi = 0; gi < a.group().order(); ++gi) {
            const int image = a.apply(static_cast<int>(gi), e);
            if (result.orbit_of[image] == -1) {
                result.orbit_of[image] = orbit_index;
                orbit.push_back(image);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        result.representative.push_back(orbit.front());
        result.orbits.push_back(std::move(orbit));
    }
    return result;
}

namespace {

/// Image of simplex s of dimension d under group element gi, where simplices
/// are chains in the poset and the action permutes poset elements. Chains map
/// to chains elementwise; the image tuple is re-sorted ascending (the action
/// preserves order, so sorting recovers the chain's canonical form).
std::vector<int> act_on_chain(const GroupAction& a, int gi,
                              const std::vector<int>& chain) {
    std::vector<int> image;
    image.reserve(chain.size());
    for (int v : chain) image.push_back(a.apply(gi, v));
    std::sort(image.begin(), image.end());
    return image;
}

}  // namespace

DeltaComplex quotient_complex(const DeltaComplex& c, const GroupAction& a) {
    const FreenessVerdict freeness = is_free_action(a);
    if (!freeness.free) {
        std::string message =
            "the action is not free: " +
            freeness.witness_group_element->to_cycle_string() + " fixes " +
            freeness.witness_label;
        throw NonFreeActionError(std::move(message), freeness);
    }
    if (!c.has_vertex_tuples()) {
        throw std::invalid_argument(
            "quotients require an order complex with vertex tuples");
    }
    if (c.dimension() < 0) return DeltaComplex();
    if (c.simplex_count(0) != a.poset().size()) {
        throw std::invalid_argument(
            "complex vertices do not match the acted-on poset");
    }

    const int dim = c.dimension();
    const auto group_order = static_cast<long long>(a.group().order());

    // Orbit structure per dimension. A chain is identified by its sorted
    // vertex tuple; the action on chains is elementwise.
    std::vector<std::map<std::vector<int>, int>> chain_index(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        for (long long s = 0; s < c.simplex_count(d); ++s) {
            chain_index[d].emplace(c.vertex_tuple(d, static_cast<int>(s)),
                                   static_cast<int>(s));
        }
    }

    // orbit_of[d][s]: quotient simplex id of simplex s; orbits are numbered
    // by their least member, so ids follow the original lexicographic order
    // of representatives.
    std::vector<std::vector<int>> orbit_of(dim + 1);
    std::vector<std::vector<int>> representatives(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        const auto count = c.simplex_count(d);
        orbit_of[d].assign(static_cast<std::size_t>(count), -1);
        for (long long s = 0; s < count; ++s) {
            if (orbit_of[d][static_cast<std::size_t>(s)] != -1) continue;
            const int id = static_cast<int>(representatives[d].size());
            representatives[d].push_back(static_cast<int>(s));
            long long orbit_size = 0;
            for (std::size_t gi = 0; gi < a.group().order(); ++gi) {
                const std::vector<int> image = act_on_chain(
                    a, static_cast<int>(gi),
                    c.vertex_tuple(d, static_cast<int>(s)));
                const int image_id = chain_index[d].at(image);
                if (orbit_of[d][image_id] == -1) {
                    orbit_of[d][image_id] = id;
                    ++orbit_size;
                } else if (orbit_of[d][image_id] != id) {
                    throw std::logic_error("orbit scan produced inconsistent ids");
                }
            }
            // A free action on vertices is free on chains: an order
            // automorphism fixing a chain setwise fixes it pointwise.
            if (orbit_size != group_order) {
                throw std::logic_error(
                    "free action produced a short simplex orbit");
            }
        }
    }

    // Faces of an orbit: take any representative, push its faces down to
    // orbits. Representative-independence is re-derived rather than assumed.
    std::vector<std::vector<std::vector<int>>> faces(dim + 1);
    std::vector<std::vector<std::string>> labels(dim + 1);
    std::vector<std::vector<std::vector<int>>> vertex_tuples(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        const auto count = static_cast<long long>(representatives[d].size());
        faces[d].resize(static_cast<std::size_t>(count));
        labels[d].resize(static_cast<std::size_t>(count));
        vertex_tuples[d].resize(static_cast<std::size_t>(count));
        for (long long q = 0; q < count; ++q) {
            const int rep = representatives[d][static_cast<std::size_t>(q)];
            vertex_tuples[d][static_cast<std::size_t>(q)] =
                c.vertex_tuple(d, rep);
            if (c.has_labels()) {
                labels[d][static_cast<std::size_t>(q)] =
                    "[" + c.label(d, rep) + "]";
            }
            if (d == 0) continue;
            std::vector<int> orbit_faces(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) {
                orbit_faces[static_cast<std::size_t>(i)] =
                    orbit_of[d - 1][c.faces(d, rep)[static_cast<std::size_t>(i)]];
            }
            faces[d][static_cast<std::size_t>(q)] = std::move(orbit_faces);
        }
    }

    // Well-definedness check: the induced face maps must not depend on the
    // representative. Faces commute with the action, so any member of the
    // orbit has to report the same orbit faces.
    for (int d = 1; d <= dim; ++d) {
        for (long long s = 0; s < c.simplex_count(d); ++s) {
            const int q = orbit_of[d][static_cast<std::size_t>(s)];
            for (int i = 0; i <= d; ++i) {
                const int face = c.faces(d, static_cast<int>(s))[static_cast<std::size_t>(i)];
                if (orbit_of[d - 1][face] !=
                    faces[d][static_cast<std::size_t>(q)][static_cast<std::size_t>(i)]) {
                    throw std::logic_error(
                        "induced face maps depend on the representative");
                }
            }
        }
    }

    DeltaComplex quotient = DeltaComplex::from_parts(
        std::move(faces), c.has_labels() ? std::move(labels)
                                         : std::vector<std::vector<std::string>>{},
        std::move(vertex_tuples));
    quotient.validate();
    return quotient;
}

}  // namespace trisphom
