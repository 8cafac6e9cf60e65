#ifndef TRISPHOM_SMITH_HPP
#define TRISPHOM_SMITH_HPP

#include <gmpxx.h>

#include <vector>

#include "trisphom/sparse_matrix.hpp"

namespace trisphom {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all
/// positive. r is the rank.
struct SmithForm {
    std::vector<mpz_class> invariant_factors;

    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

/// Unimodular transforms with U * m * V = diag(d_1, ..., d_r). Dense;
/// intended for small matrices (tests and oracles).
struct SmithWitnesses {
    std::vector<std::vector<mpz_class>> U;  // rows x rows
    std::vector<std::vector<mpz_class>> V;  // cols x cols
};

/// Smith normal form by sparse elimination. Pivot choice: minimal nonzero
/// absolute value, tie-broken by least fill (nonzeros in pivot row +
/// column). The matrix is consumed. When `witnesses` is non-null the
/// unimodular transforms are tracked (dense storage).
SmithForm smith_normal_form(SparseIntMatrix m,
                            SmithWitnesses* witnesses = nullptr);

/// Rank of the matrix over the prime field F_p (p must be prime and fit in
/// a machine word; this is checked by the caller).
long long rank_mod_p(const SparseIntMatrix& m, long long p);

}  // namespace trisphom

#endif
