#ifndef TRISPHOM_COMPLEX_HPP
#define TRISPHOM_COMPLEX_HPP

#include <string>
#include <vector>

#include "trisphom/poset.hpp"

namespace trisphom {

/// Simplex counts per dimension of a finite complex.
struct FVector {
    std::vector<long long> counts;

    bool operator==(const FVector& other) const = default;
};

/// A finite Delta-complex (trisp): simplices per dimension with face maps.
/// Face i of a d-simplex deletes vertex i and lands in dimension d-1.
/// Simplex ids are dense per dimension. Immutable after construction.
class DeltaComplex {
public:
    DeltaComplex() = default;

    /// faces[d][s] is the (d+1)-tuple of face ids of simplex s in dimension
    /// d; faces[0] entries are empty. labels and vertex_tuples are optional
    /// provenance (vertex_tuples present for order complexes: the chain).
    static DeltaComplex from_parts(
        std::vector<std::vector<std::vector<int>>> faces,
        std::vector<std::vector<std::string>> labels = {},
        std::vector<std::vector<std::vector<int>>> vertex_tuples = {});

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    long long simplex_count(int d) const;
    long long total_simplices() const;

    /// Face tuple of simplex s in dimension d >= 1 (size d+1).
    const std::vector<int>& faces(int d, int s) const {
        return faces_[d][s];
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int d, int s) const { return labels_[d][s]; }

    bool has_vertex_tuples() const { return !vertex_tuples_.empty(); }
    const std::vector<int>& vertex_tuple(int d, int s) const {
        return vertex_tuples_[d][s];
    }

    /// Checks face-index ranges and the simplicial identities
    /// d_i d_j = d_{j-1} d_i for i < j. Throws std::logic_error on failure.
    void validate() const;

private:
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<std::vector<int>>> vertex_tuples_;
};

/// The nerve of the poset: d-simplices are the (d+1)-element chains, face i
/// deletes the i-th smallest element of the chain. Simplex ids follow the
/// lexicographic chain order.
DeltaComplex order_complex(const FinitePoset& poset);

FVector f_vector(const DeltaComplex& c);

/// Alternating sum of simplex counts.
long long euler_characteristic(const DeltaComplex& c);

}  // namespace trisphom

#endif
