#include "trisphom/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisphom {

BitRelation::BitRelation(int n)
    : n_(n),
      words_((n + 63) / 64),
      bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void BitRelation::set(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |=
        std::uint64_t{1} << (j & 63);
}

bool BitRelation::rows_intersect(int i, int j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    for (int w = 0; w < words_; ++w) {
        if (a[w] & b[w]) return true;
    }
    return false;
}

bool BitRelation::row_subset(int i, int j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    for (int w = 0; w < words_; ++w) {
        if (a[w] & ~b[w]) return false;
    }
    return true;
}

BitRelation BitRelation::transposed() const {
    BitRelation t(n_);
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t* r = row(i);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                const int j = w * 64 + __builtin_ctzll(bits);
                t.set(j, i);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

std::string to_string(PosetKind kind) {
    switch (kind) {
        case PosetKind::partition: return "partition";
        case PosetKind::subset: return "subset";
        case PosetKind::explicit_: return "explicit";
    }
    return "explicit";
}

PosetKind poset_kind_from_string(const std::string& s) {
    if (s == "partition") return PosetKind::partition;
    if (s == "subset") return PosetKind::subset;
    if (s == "explicit") return PosetKind::explicit_;
    throw std::invalid_argument("unknown poset kind: " + s);
}

FinitePoset::FinitePoset(PosetKind kind, int ground_n,
                         std::vector<std::string> labels, BitRelation less,
                         std::optional<std::vector<int>> ranks)
    : kind_(kind),
      ground_n_(ground_n),
      labels_(std::move(labels)),
      less_(std::move(less)) {
    if (less_.size() != size()) {
        throw std::invalid_argument("relation size does not match element count");
    }
    validate();
    compute_covers();

    if (ranks) {
        ranks_ = std::move(*ranks);
        if (static_cast<int>(ranks_.size()) != size()) {
            throw std::invalid_argument("rank vector size mismatch");
        }
    } else {
        // Height grading: longest chain strictly below each element.
        ranks_.assign(size(), 0);
        for (const auto& [a, b] : covers_) {
            ranks_[b] = std::max(ranks_[b], ranks_[a] + 1);
        }
    }
    for (const auto& [a, b] : covers_) {
        if (ranks_[a] >= ranks_[b]) {
            throw std::invalid_argument("rank not increasing along a cover");
        }
    }

    index_.reserve(labels_.size());
    for (int i = 0; i < size(); ++i) {
        if (!index_.emplace(labels_[i], i).second) {
            throw std::invalid_argument("duplicate element label: " + labels_[i]);
        }
    }
}

void FinitePoset::validate() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (less_.get(i, i)) {
            throw std::invalid_argument("order relation is not irreflexive");
        }
    }
    // Index order must be a linear extension; together with irreflexivity
    // this also rules out cycles.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (less_.get(i, j)) {
                throw std::invalid_argument(
                    "element indexing is not a linear extension of the order");
            }
        }
    }
    // Transitivity: j above i forces up-set(j) inside up-set(i).
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (less_.get(i, j) && !less_.row_subset(j, i)) {
                throw std::invalid_argument("order relation is not transitive");
            }
        }
    }
}

void FinitePoset::compute_covers() {
    const int n = size();
    const BitRelation above = less_.transposed();  // row j = strict down-set
    covers_.clear();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!less_.get(i, j)) continue;
            // (i, j) is a cover iff nothing sits strictly between them:
            // up-set(i) and down-set(j) are disjoint.
            bool has_middle = false;
            const std::uint64_t* up = less_.row(i);
            const std::uint64_t* down = above.row(j);
            for (int w = 0; w < less_.words_per_row(); ++w) {
                if (up[w] & down[w]) {
                    has_middle = true;
                    break;
                }
            }
            if (!has_middle) covers_.emplace_back(i, j);
        }
    }
}

int FinitePoset::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> FinitePoset::upper_set(int i) const {
    std::vector<int> out;
    const std::uint64_t* r = less_.row(i);
    for (int w = 0; w < less_.words_per_row(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + __builtin_ctzll(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

}  // namespace trisphom
