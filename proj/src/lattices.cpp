#include "trisphom/lattices.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "trisphom/partition.hpp"
#include "trisphom/subset.hpp"

namespace trisphom {

namespace {

// All set partitions of [n] via restricted growth strings.
std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int i, int max_block) -> void {
        if (i == n) {
            const int k = max_block;
            std::vector<std::vector<int>> blocks(k);
            for (int x = 0; x < n; ++x) blocks[assign[x]].push_back(x + 1);
            out.emplace_back(n, std::move(blocks));
            return;
        }
        for (int b = 0; b <= max_block; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(max_block, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

FinitePoset build_reduced_partition_lattice(int n) {
    if (n < 3) {
        throw std::invalid_argument(
            "reduced partition lattice needs n >= 3, got " + std::to_string(n));
    }

    std::vector<Partition> elems;
    for (auto& part : all_partitions(n)) {
        const int k = part.block_count();
        if (k > 1 && k < n) elems.push_back(std::move(part));
    }
    // rank = n - #blocks; within a rank, order by canonical label.
    std::sort(elems.begin(), elems.end(),
              [n](const Partition& a, const Partition& b) {
                  const int ra = n - a.block_count();
                  const int rb = n - b.block_count();
                  if (ra != rb) return ra < rb;
                  return a.to_string() < b.to_string();
              });

    const int m = static_cast<int>(elems.size());
    BitRelation less(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && elems[i].block_count() > elems[j].block_count() &&
                elems[i].refines(elems[j])) {
                less.set(i, j);
            }
        }
    }

    std::vector<std::string> labels;
    std::vector<int> ranks;
    labels.reserve(m);
    ranks.reserve(m);
    for (const auto& e : elems) {
        labels.push_back(e.to_string());
        ranks.push_back(n - e.block_count());
    }
    return FinitePoset(PosetKind::partition, n, std::move(labels),
                       std::move(less), std::move(ranks));
}

FinitePoset build_reduced_subset_lattice(int p) {
    if (p < 2) {
        throw std::invalid_argument(
            "reduced subset lattice needs p >= 2, got " + std::to_string(p));
    }

    std::vector<SubsetElement> elems;
    for (unsigned mask = 1; mask + 1 < (1u << p); ++mask) {
        std::vector<int> members;
        for (int x = 0; x < p; ++x) {
            if (mask & (1u << x)) members.push_back(x + 1);
        }
        elems.emplace_back(p, std::move(members));
    }
    std::sort(elems.begin(), elems.end(),
              [](const SubsetElement& a, const SubsetElement& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a.to_string() < b.to_string();
              });

    const int m = static_cast<int>(elems.size());
    BitRelation less(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && elems[i].proper_subset_of(elems[j])) less.set(i, j);
        }
    }

    std::vector<std::string> labels;
    std::vector<int> ranks;
    labels.reserve(m);
    ranks.reserve(m);
    for (const auto& e : elems) {
        labels.push_back(e.to_string());
        ranks.push_back(e.size());
    }
    return FinitePoset(PosetKind::subset, p, std::move(labels),
                       std::move(less), std::move(ranks));
}

std::vector<std::vector<int>> enumerate_chains(const FinitePoset& poset,
                                               std::optional<int> max_length) {
    const int limit = max_length.value_or(poset.size());
    if (max_length && *max_length < 1) {
        throw std::invalid_argument("chain length cap must be >= 1");
    }

    // Depth-first extension over memoized up-sets; index order is a linear
    // extension, so ascending index tuples are exactly the chains and
    // preorder emission is lexicographic.
    std::vector<std::vector<int>> up(poset.size());
    for (int i = 0; i < poset.size(); ++i) up[i] = poset.upper_set(i);

    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    auto extend = [&](auto&& self) -> void {
        chains.push_back(chain);
        if (static_cast<int>(chain.size()) >= limit) return;
        for (int next : up[chain.back()]) {
            chain.push_back(next);
            self(self);
            chain.pop_back();
        }
    };
    for (int start = 0; start < poset.size(); ++start) {
        chain.assign(1, start);
        extend(extend);
    }
    return chains;
}

}  // namespace trisphom
