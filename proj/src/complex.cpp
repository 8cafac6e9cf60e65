#include "trisphom/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "trisphom/lattices.hpp"

namespace trisphom {

DeltaComplex DeltaComplex::from_parts(
    std::vector<std::vector<std::vector<int>>> faces,
    std::vector<std::vector<std::string>> labels,
    std::vector<std::vector<std::vector<int>>> vertex_tuples) {
    DeltaComplex c;
    c.faces_ = std::move(faces);
    c.labels_ = std::move(labels);
    c.vertex_tuples_ = std::move(vertex_tuples);
    if (!c.labels_.empty() && c.labels_.size() != c.faces_.size()) {
        throw std::invalid_argument("label table shape mismatch");
    }
    if (!c.vertex_tuples_.empty() &&
        c.vertex_tuples_.size() != c.faces_.size()) {
        throw std::invalid_argument("vertex tuple table shape mismatch");
    }
    c.validate();
    return c;
}

long long DeltaComplex::simplex_count(int d) const {
    if (d < 0 || d > dimension()) return 0;
    return static_cast<long long>(faces_[d].size());
}

long long DeltaComplex::total_simplices() const {
    long long total = 0;
    for (const auto& dim : faces_) total += static_cast<long long>(dim.size());
    return total;
}

void DeltaComplex::validate() const {
    const int dim = dimension();
    for (int d = 0; d <= dim; ++d) {
        if (faces_[d].empty() && d < dim) {
            throw std::logic_error("empty dimension below the top dimension");
        }
        for (std::size_t s = 0; s < faces_[d].size(); ++s) {
            const auto& f = faces_[d][s];
            if (d == 0) {
                if (!f.empty()) {
                    throw std::logic_error("vertex carries face maps");
                }
                continue;
            }
            if (static_cast<int>(f.size()) != d + 1) {
                throw std::logic_error("face tuple has wrong arity");
            }
            for (int idx : f) {
                if (idx < 0 || idx >= static_cast<int>(faces_[d - 1].size())) {
                    throw std::logic_error("face index out of range");
                }
            }
        }
    }
    // d_i d_j = d_{j-1} d_i for i < j, by index chasing.
    for (int d = 2; d <= dim; ++d) {
        for (std::size_t s = 0; s < faces_[d].size(); ++s) {
            const auto& f = faces_[d][s];
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    const int left = faces_[d - 1][f[j]][i];
                    const int right = faces_[d - 1][f[i]][j - 1];
                    if (left != right) {
                        throw std::logic_error("simplicial identity violated");
                    }
                }
            }
        }
    }
}

DeltaComplex order_complex(const FinitePoset& poset) {
    const auto chains = enumerate_chains(poset);

    // Bucket chains by dimension; enumeration order is lexicographic, so
    // each bucket stays lexicographically sorted and ids are stable.
    std::vector<std::vector<std::vector<int>>> by_dim;
    for (const auto& chain : chains) {
        const int d = static_cast<int>(chain.size()) - 1;
        if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
        by_dim[d].push_back(chain);
    }

    const int dim = static_cast<int>(by_dim.size()) - 1;
    std::vector<std::vector<std::vector<int>>> faces(by_dim.size());
    std::vector<std::vector<std::string>> labels(by_dim.size());

    auto find_id = [&](int d, const std::vector<int>& chain) {
        const auto& bucket = by_dim[d];
        auto it = std::lower_bound(bucket.begin(), bucket.end(), chain);
        if (it == bucket.end() || *it != chain) {
            throw std::logic_error("face chain missing from enumeration");
        }
        return static_cast<int>(it - bucket.begin());
    };

    for (int d = 0; d <= dim; ++d) {
        faces[d].resize(by_dim[d].size());
        labels[d].reserve(by_dim[d].size());
        for (std::size_t s = 0; s < by_dim[d].size(); ++s) {
            const auto& chain = by_dim[d][s];
            std::string label;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i > 0) label += " < ";
                label += poset.label(chain[i]);
            }
            labels[d].push_back(std::move(label));
            if (d == 0) continue;
            auto& f = faces[d][s];
            f.reserve(d + 1);
            for (int i = 0; i <= d; ++i) {
                std::vector<int> face_chain;
                face_chain.reserve(d);
                for (int k = 0; k <= d; ++k) {
                    if (k != i) face_chain.push_back(chain[k]);
                }
                f.push_back(find_id(d - 1, face_chain));
            }
        }
    }

    return DeltaComplex::from_parts(std::move(faces), std::move(labels),
                                    std::move(by_dim));
}

FVector f_vector(const DeltaComplex& c) {
    FVector f;
    for (int d = 0; d <= c.dimension(); ++d) {
        f.counts.push_back(c.simplex_count(d));
    }
    return f;
}

long long euler_characteristic(const DeltaComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (int d = 0; d <= c.dimension(); ++d) {
        chi += sign * c.simplex_count(d);
        sign = -sign;
    }
    return chi;
}

}  // namespace trisphom
