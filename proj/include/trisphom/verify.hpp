#ifndef TRISPHOM_VERIFY_HPP
#define TRISPHOM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "trisphom/action.hpp"
#include "trisphom/complex.hpp"
#include "trisphom/homology.hpp"

namespace trisphom {

/// Rational Betti profile of the quotient of a wedge of k d-spheres by a
/// free action of a group of the given order.
struct BettiPrediction {
    long long k = 0;
    int d = 0;
    long long group_order = 1;
    std::vector<long long> predicted;  // beta_0 .. beta_d over Q
};

/// Case split: beta_0 = 1; beta_d = (k+1)/|G| - 1 for d even,
/// (k-1)/|G| + 1 for d odd; 0 elsewhere. Throws std::invalid_argument when
/// the divisibility condition fails (no free action could exist).
BettiPrediction predict_quotient_betti(long long k, int d,
                                       long long group_order);

/// One executable claim with its outcome.
struct Verdict {
    std::string claim_id;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::vector<std::string> assumptions;
    long long millis = 0;
};

/// H_1(full/G; Z) == G for a free action of an abelian group on a simply
/// connected complex (simple connectivity is an input assumption). Builds
/// the quotient internally; refuses non-free or non-abelian input.
Verdict check_free_act_h1(const DeltaComplex& full, const GroupAction& action);

struct WedgeVerdict {
    bool possibly_wedge = true;
    std::string reason;  // set when not possibly a wedge
};

/// A wedge of spheres has free integral homology, so torsion in any H_i
/// (i >= 1) rules the homotopy type out. One-sided: free homology does not
/// prove wedge-ness.
WedgeVerdict check_wedge_obstruction(const HomologyReport& report);

/// Passes iff beta_i^Q(quotient) = 0 whenever beta_i^Q(full) = 0. Both
/// reports must carry Q Betti numbers and agree on dimension.
Verdict check_transfer_vanishing(const HomologyReport& full,
                                 const HomologyReport& quotient);

struct ResourceCaps {
    long long max_simplices = 10000000;
    std::size_t max_group_order = 1000000;
    long long time_budget_s = 0;  // 0 = unlimited
};

struct PaperSuiteConfig {
    int p = 5;
    bool include_partition = true;
    bool include_subset = true;
    /// Cycle string of the acting group; defaults to the p-cycle
    /// "(1 2 ... p)". A non-free choice makes the freeness verdicts fail
    /// and skips the dependent claims.
    std::optional<std::string> group_spec;
    ResourceCaps caps;
};

/// One complex's exploratory data: not asserted, reported alongside the
/// verdicts.
struct SuiteObservation {
    std::string name;
    FVector f;
    long long euler = 0;
    HomologyReport homology;
};

struct PaperSuiteReport {
    int p = 0;
    std::string group;
    bool complete = true;
    std::string incomplete_reason;
    std::vector<Verdict> verdicts;
    std::vector<SuiteObservation> observations;

    bool all_pass() const;
};

/// Runs the full pipeline for one prime: lattices, order complexes,
/// freeness, quotients, homology over Z, Q, F2 and F_p, predictions,
/// Euler cross-checks and the wedge obstruction. At p = 5 the full
/// complexes' homology is verified directly; for larger p the wedge/sphere
/// Betti profile of the full complexes is assumed from their classical
/// homotopy types. Throws std::invalid_argument when p is not a prime >= 5.
PaperSuiteReport run_paper_suite(const PaperSuiteConfig& config);

}  // namespace trisphom

#endif
