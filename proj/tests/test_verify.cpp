#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisphom/action.hpp"
#include "trisphom/complex.hpp"
#include "trisphom/homology.hpp"
#include "trisphom/lattices.hpp"
#include "trisphom/permutation.hpp"
#include "trisphom/verify.hpp"

using trisphom::DeltaComplex;
using trisphom::FinitePoset;
using trisphom::GroupAction;
using trisphom::HomologyReport;
using trisphom::PaperSuiteConfig;
using trisphom::PaperSuiteReport;
using trisphom::Permutation;
using trisphom::PermutationGroup;
using trisphom::Verdict;

namespace {

std::shared_ptr<const FinitePoset> shared_subset_lattice(int p) {
    return std::make_shared<const FinitePoset>(
        trisphom::build_reduced_subset_lattice(p));
}

const Verdict& verdict_named(const PaperSuiteReport& report,
                             const std::string& claim_id) {
    for (const Verdict& v : report.verdicts) {
        if (v.claim_id == claim_id) return v;
    }
    FAIL("no verdict named " + claim_id);
    static const Verdict missing{};
    return missing;
}

}  // namespace

TEST_CASE("quotient Betti predictions", "[verify]") {
    const auto even = trisphom::predict_quotient_betti(24, 2, 5);
    CHECK(even.predicted == std::vector<long long>{1, 0, 4});

    const auto odd = trisphom::predict_quotient_betti(1, 3, 5);
    CHECK(odd.predicted == std::vector<long long>{1, 0, 0, 1});

    // A trivial group leaves the wedge profile untouched in both parities.
    CHECK(trisphom::predict_quotient_betti(7, 2, 1).predicted ==
          std::vector<long long>{1, 0, 7});
    CHECK(trisphom::predict_quotient_betti(7, 3, 1).predicted ==
          std::vector<long long>{1, 0, 0, 7});

    // d = 1 folds the quotient's extra class into beta_1 on top of beta_0.
    CHECK(trisphom::predict_quotient_betti(11, 1, 5).predicted ==
          std::vector<long long>{1, 3});

    // 5 does not divide 3 + 1: no free action exists on such a wedge.
    CHECK_THROWS_AS(trisphom::predict_quotient_betti(3, 2, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(trisphom::predict_quotient_betti(-1, 2, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(trisphom::predict_quotient_betti(4, 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(trisphom::predict_quotient_betti(4, 2, 0),
                    std::invalid_argument);
}

TEST_CASE("wedge obstruction classification", "[verify]") {
    const auto l5 = shared_subset_lattice(5);
    const DeltaComplex full = trisphom::order_complex(*l5);
    const GroupAction action(PermutationGroup::cyclic(5), l5);
    const DeltaComplex quotient = trisphom::quotient_complex(full, action);

    const auto full_verdict =
        trisphom::check_wedge_obstruction(trisphom::homology(full, "Z"));
    CHECK(full_verdict.possibly_wedge);
    CHECK(full_verdict.reason.empty());

    const auto quot_verdict =
        trisphom::check_wedge_obstruction(trisphom::homology(quotient, "Z"));
    CHECK_FALSE(quot_verdict.possibly_wedge);
    CHECK(quot_verdict.reason.find("Z/5") != std::string::npos);
    CHECK(quot_verdict.reason.find("H_1") != std::string::npos);

    // A single point is (vacuously) a possible wedge.
    const DeltaComplex point = DeltaComplex::from_parts({{{}}});
    CHECK(trisphom::check_wedge_obstruction(trisphom::homology(point, "Z"))
              .possibly_wedge);

    // Integral homology is required.
    CHECK_THROWS_AS(
        trisphom::check_wedge_obstruction(trisphom::homology(point, "Q")),
        std::invalid_argument);
}

TEST_CASE("transfer vanishing", "[verify]") {
    const DeltaComplex l4 = trisphom::order_complex(
        trisphom::build_reduced_subset_lattice(4));
    const HomologyReport l4_report = trisphom::homology(l4, "Q");

    // Compared against itself every vanishing constraint holds.
    const Verdict self = trisphom::check_transfer_vanishing(l4_report,
                                                            l4_report);
    CHECK(self.pass);
    CHECK(self.claim_id == "transfer-vanishing");
    CHECK(self.expected == "b1=0");

    // A quotient with a class where the full complex has none must fail.
    const DeltaComplex segment =
        DeltaComplex::from_parts({{{}, {}}, {{0, 1}}});
    const DeltaComplex circle = DeltaComplex::from_parts({{{}}, {{0, 0}}});
    const Verdict broken = trisphom::check_transfer_vanishing(
        trisphom::homology(segment, "Q"), trisphom::homology(circle, "Q"));
    CHECK_FALSE(broken.pass);
    CHECK(broken.expected == "b1=0");
    CHECK(broken.computed == "b1=1");

    // No zero Betti numbers on the full side: nothing to check.
    const Verdict vacuous = trisphom::check_transfer_vanishing(
        trisphom::homology(circle, "Q"), trisphom::homology(circle, "Q"));
    CHECK(vacuous.pass);
    CHECK(vacuous.expected == "no vanishing constraints");

    // Both sides need rational Betti numbers and equal dimension.
    CHECK_THROWS_AS(trisphom::check_transfer_vanishing(
                        trisphom::homology(l4, "Z"), l4_report),
                    std::invalid_argument);
    CHECK_THROWS_AS(trisphom::check_transfer_vanishing(
                        l4_report, trisphom::homology(circle, "Q")),
                    std::invalid_argument);
}

TEST_CASE("H_1 of a free abelian quotient recovers the group", "[verify]") {
    const auto l5 = shared_subset_lattice(5);
    const DeltaComplex full = trisphom::order_complex(*l5);

    const Verdict v = trisphom::check_free_act_h1(
        full, GroupAction(PermutationGroup::cyclic(5), l5));
    CHECK(v.pass);
    CHECK(v.claim_id == "free-act-h1");
    CHECK(v.expected == "Z/5");
    CHECK(v.computed == "Z/5");
    REQUIRE_FALSE(v.assumptions.empty());
    CHECK(v.assumptions.front() == "assumes simply connected");

    // The trivial group gives the trivial H_1.
    const Verdict trivial = trisphom::check_free_act_h1(
        full, GroupAction(PermutationGroup::trivial(5), l5));
    CHECK(trivial.pass);
    CHECK(trivial.expected == "0");

    // Non-free abelian actions are refused with the witness attached.
    const GroupAction non_free(
        PermutationGroup(5, {Permutation::parse_cycles("(2 3 4 5)", 5)}), l5);
    CHECK_THROWS_AS(trisphom::check_free_act_h1(full, non_free),
                    trisphom::NonFreeActionError);

    // Non-abelian groups are refused outright.
    const auto l3 = shared_subset_lattice(3);
    const GroupAction s3_action(
        PermutationGroup(3, {Permutation::parse_cycles("(1 2)", 3),
                             Permutation::parse_cycles("(1 2 3)", 3)}),
        l3);
    CHECK_THROWS_AS(trisphom::check_free_act_h1(trisphom::order_complex(*l3),
                                                s3_action),
                    std::invalid_argument);
}

TEST_CASE("the p = 5 suite passes end to end", "[verify]") {
    PaperSuiteConfig config;
    config.p = 5;
    const PaperSuiteReport report = trisphom::run_paper_suite(config);

    CHECK(report.p == 5);
    CHECK(report.group == "(1 2 3 4 5)");
    CHECK(report.complete);
    CHECK(report.all_pass());

    REQUIRE(report.verdicts.size() == 9);
    const std::vector<std::string> expected_order{
        "eq1",           "eq2",           "eq3",
        "eq4",           "lemma-bettis",  "lemma-free-Lp",
        "lemma-free-Pip", "thm-euler",    "wedge-obstruction"};
    for (std::size_t i = 0; i < expected_order.size(); ++i) {
        CHECK(report.verdicts[i].claim_id == expected_order[i]);
        CHECK(report.verdicts[i].pass);
    }

    CHECK(verdict_named(report, "eq1").computed == "Z/5");
    CHECK(verdict_named(report, "eq2").computed == "Z");
    CHECK(verdict_named(report, "eq3").computed == "Z/5");
    CHECK(verdict_named(report, "eq4").computed == "Z^4");
    CHECK(verdict_named(report, "wedge-obstruction").computed ==
          "Lp: not-wedge; Pip: not-wedge");

    REQUIRE(report.observations.size() == 4);
    CHECK(report.observations[0].name == "Delta(L_5)");
    CHECK(report.observations[1].name == "Delta(L_5)/G");
    CHECK(report.observations[2].name == "Delta(Pibar_5)");
    CHECK(report.observations[3].name == "Delta(Pibar_5)/G");
    CHECK(report.observations[1].f.counts ==
          std::vector<long long>{6, 30, 48, 24});
    CHECK(report.observations[3].f.counts ==
          std::vector<long long>{10, 41, 36});
}

TEST_CASE("the suite rejects composite and small p", "[verify]") {
    for (const int p : {0, 1, 2, 3, 4, 6, 9}) {
        PaperSuiteConfig config;
        config.p = p;
        CHECK_THROWS_AS(trisphom::run_paper_suite(config),
                        std::invalid_argument);
    }
}

TEST_CASE("a non-free group fails the freeness claims and skips the rest",
          "[verify]") {
    PaperSuiteConfig config;
    config.p = 5;
    config.group_spec = "(2 3 4 5)";
    const PaperSuiteReport report = trisphom::run_paper_suite(config);

    CHECK(report.complete);
    CHECK_FALSE(report.all_pass());
    REQUIRE(report.verdicts.size() == 2);
    CHECK(report.verdicts[0].claim_id == "lemma-free-Lp");
    CHECK(report.verdicts[1].claim_id == "lemma-free-Pip");
    for (const Verdict& v : report.verdicts) {
        CHECK_FALSE(v.pass);
        CHECK(v.computed.find("fixed point:") == 0);
    }
    // Only the full complexes are observed; no quotients were built.
    CHECK(report.observations.size() == 2);
}

TEST_CASE("resource caps mark the report incomplete", "[verify]") {
    PaperSuiteConfig tiny;
    tiny.p = 5;
    tiny.caps.max_simplices = 10;
    const PaperSuiteReport capped = trisphom::run_paper_suite(tiny);
    CHECK_FALSE(capped.complete);
    CHECK_FALSE(capped.all_pass());
    CHECK(capped.incomplete_reason.find("above the cap") != std::string::npos);

    PaperSuiteConfig small_group;
    small_group.p = 5;
    small_group.group_spec = "(1 2); (1 2 3 4 5)";  // generates S_5
    small_group.caps.max_group_order = 10;
    const PaperSuiteReport overflow = trisphom::run_paper_suite(small_group);
    CHECK_FALSE(overflow.complete);
    CHECK(overflow.incomplete_reason.find("cap") != std::string::npos);
    CHECK(overflow.verdicts.empty());
}

TEST_CASE("single-sided suites carry only their own claims", "[verify]") {
    PaperSuiteConfig config;
    config.p = 5;
    config.include_subset = false;
    const PaperSuiteReport report = trisphom::run_paper_suite(config);

    CHECK(report.all_pass());
    REQUIRE(report.verdicts.size() == 6);
    const std::vector<std::string> expected_order{
        "eq3",           "eq4",       "lemma-bettis",
        "lemma-free-Pip", "thm-euler", "wedge-obstruction"};
    for (std::size_t i = 0; i < expected_order.size(); ++i) {
        CHECK(report.verdicts[i].claim_id == expected_order[i]);
    }
    CHECK(verdict_named(report, "eq3").pass);
    CHECK(verdict_named(report, "eq4").pass);
    CHECK(verdict_named(report, "lemma-bettis").computed.find("Lp") ==
          std::string::npos);
    CHECK(report.observations.size() == 2);
}
