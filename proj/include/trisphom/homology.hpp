#ifndef TRISPHOM_HOMOLOGY_HPP
#define TRISPHOM_HOMOLOGY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "trisphom/complex.hpp"
#include "trisphom/sparse_matrix.hpp"

namespace trisphom {

/// Which coefficient systems a homology run covers.
struct CoefficientSpec {
    bool integral = false;           // Z
    bool rational = false;           // Q
    std::vector<long long> primes;   // finite fields F_q, q prime

    /// Parses a comma list like "Z,Q,F2,F5". Throws std::invalid_argument
    /// on unknown tokens or non-prime field orders.
    static CoefficientSpec parse(const std::string& csv);

    static CoefficientSpec all_of(bool z, bool q,
                                  std::vector<long long> primes_list);
};

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<mpz_class> torsion;  // divisibility chain, all > 1

    bool operator==(const HomologyGroup& other) const = default;
};

/// Unreduced homology of a complex: integral groups per dimension (when
/// computed) and Betti numbers per requested field. "Q" is stored as a
/// field key alongside "F2", "F5", ...
struct HomologyReport {
    int dimension = -1;
    bool has_integral = false;
    std::vector<HomologyGroup> groups;                    // size dimension+1
    std::map<std::string, std::vector<long long>> field_betti;

    bool has_field(const std::string& field) const {
        return field_betti.count(field) > 0;
    }
};

/// The boundary matrix of dimension d (1 <= d <= dim): rows are
/// (d-1)-simplices, columns are d-simplices, entries are signed
/// multiplicities sum_i (-1)^i [face_i(col) == row].
SparseIntMatrix boundary_matrix(const DeltaComplex& c, int d);

/// Exact homology of the complex over the requested coefficient systems.
HomologyReport homology(const DeltaComplex& c, const CoefficientSpec& spec);
HomologyReport homology(const DeltaComplex& c, const std::string& coeffs);

/// Alternating sum of Betti numbers over the given field ("Q", "F2", ...).
/// Throws std::invalid_argument when the field was not computed.
long long euler_from_betti(const HomologyReport& report,
                           const std::string& field);

/// Text rendering of one integral group, e.g. "Z^4", "Z/5", "Z^2 + Z/3".
std::string group_to_string(const HomologyGroup& g);

}  // namespace trisphom

#endif
