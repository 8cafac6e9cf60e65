#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisphom/action.hpp"
#include "trisphom/complex.hpp"
#include "trisphom/homology.hpp"
#include "trisphom/lattices.hpp"
#include "trisphom/permutation.hpp"
#include "trisphom/smith.hpp"

using trisphom::CoefficientSpec;
using trisphom::DeltaComplex;
using trisphom::FinitePoset;
using trisphom::GroupAction;
using trisphom::HomologyGroup;
using trisphom::HomologyReport;
using trisphom::PermutationGroup;
using trisphom::SparseIntMatrix;

namespace {

DeltaComplex quotient_of(const FinitePoset& poset, int degree) {
    const auto shared = std::make_shared<const FinitePoset>(poset);
    const GroupAction action(PermutationGroup::cyclic(degree), shared);
    return trisphom::quotient_complex(trisphom::order_complex(*shared),
                                      action);
}

HomologyGroup free_part(long long rank) {
    HomologyGroup g;
    g.free_rank = rank;
    return g;
}

HomologyGroup torsion_part(long long rank, std::vector<long long> torsion) {
    HomologyGroup g;
    g.free_rank = rank;
    for (long long t : torsion) g.torsion.emplace_back(static_cast<long>(t));
    return g;
}

}  // namespace

TEST_CASE("coefficient parsing", "[homology]") {
    const CoefficientSpec spec = CoefficientSpec::parse("Z,Q,F2,F5");
    CHECK(spec.integral);
    CHECK(spec.rational);
    CHECK(spec.primes == std::vector<long long>{2, 5});

    const CoefficientSpec dup = CoefficientSpec::parse("F5, F5, Z");
    CHECK(dup.primes == std::vector<long long>{5});
    CHECK_FALSE(dup.rational);

    CHECK_THROWS_AS(CoefficientSpec::parse("F4"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSpec::parse("X"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSpec::parse("F"), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientSpec::parse("F2x"), std::invalid_argument);
}

TEST_CASE("group rendering", "[homology]") {
    CHECK(trisphom::group_to_string(free_part(0)) == "0");
    CHECK(trisphom::group_to_string(free_part(1)) == "Z");
    CHECK(trisphom::group_to_string(free_part(4)) == "Z^4");
    CHECK(trisphom::group_to_string(torsion_part(0, {5})) == "Z/5");
    CHECK(trisphom::group_to_string(torsion_part(2, {3})) == "Z^2 + Z/3");
    CHECK(trisphom::group_to_string(torsion_part(1, {2, 6})) ==
          "Z + Z/2 + Z/6");
}

TEST_CASE("boundary matrices compose to zero", "[homology]") {
    std::vector<DeltaComplex> complexes;
    complexes.push_back(
        trisphom::order_complex(trisphom::build_reduced_subset_lattice(4)));
    complexes.push_back(
        trisphom::order_complex(trisphom::build_reduced_subset_lattice(5)));
    complexes.push_back(trisphom::order_complex(
        trisphom::build_reduced_partition_lattice(5)));
    complexes.push_back(
        quotient_of(trisphom::build_reduced_subset_lattice(5), 5));
    complexes.push_back(
        quotient_of(trisphom::build_reduced_partition_lattice(5), 5));

    for (std::size_t which = 0; which < complexes.size(); ++which) {
        const DeltaComplex& c = complexes[which];
        for (int d = 2; d <= c.dimension(); ++d) {
            const SparseIntMatrix lower = trisphom::boundary_matrix(c, d - 1);
            const SparseIntMatrix upper = trisphom::boundary_matrix(c, d);
            REQUIRE(lower.cols() == upper.rows());
            // (lower * upper) must vanish entrywise.
            long long nonzero_entries = 0;
            for (int j = 0; j < upper.cols(); ++j) {
                std::map<int, mpz_class> product_col;
                for (int k : upper.col_rows(j)) {
                    const mpz_class& v = upper.at(k, j);
                    for (int i : lower.col_rows(k)) {
                        product_col[i] += lower.at(i, k) * v;
                    }
                }
                for (const auto& [i, value] : product_col) {
                    if (value != 0) ++nonzero_entries;
                }
            }
            INFO("complex " << which << ", boundary pair at dimension " << d);
            CHECK(nonzero_entries == 0);
        }
    }
}

TEST_CASE("circle and hollow triangle", "[homology]") {
    // One vertex, one loop edge: a circle as a Delta-complex.
    const DeltaComplex circle = DeltaComplex::from_parts({{{}}, {{0, 0}}});
    const HomologyReport h = trisphom::homology(circle, "Z,Q,F2");
    REQUIRE(h.dimension == 1);
    CHECK(h.groups[0] == free_part(1));
    CHECK(h.groups[1] == free_part(1));
    CHECK(h.field_betti.at("Q") == std::vector<long long>{1, 1});
    CHECK(h.field_betti.at("F2") == std::vector<long long>{1, 1});

    // Triangle boundary: three vertices, three edges, no 2-cell.
    const DeltaComplex triangle = DeltaComplex::from_parts(
        {{{}, {}, {}}, {{0, 1}, {0, 2}, {1, 2}}});
    const HomologyReport ht = trisphom::homology(triangle, "Z");
    CHECK(ht.groups[0] == free_part(1));
    CHECK(ht.groups[1] == free_part(1));
}

TEST_CASE("frozen homology of the full order complexes", "[homology]") {
    const HomologyReport pi4 = trisphom::homology(
        trisphom::order_complex(trisphom::build_reduced_partition_lattice(4)),
        "Z");
    REQUIRE(pi4.dimension == 1);
    CHECK(pi4.groups[0] == free_part(1));
    CHECK(pi4.groups[1] == free_part(6));

    const HomologyReport pi5 = trisphom::homology(
        trisphom::order_complex(trisphom::build_reduced_partition_lattice(5)),
        "Z");
    REQUIRE(pi5.dimension == 2);
    CHECK(pi5.groups[0] == free_part(1));
    CHECK(pi5.groups[1] == free_part(0));
    CHECK(pi5.groups[2] == free_part(24));

    const HomologyReport l3 = trisphom::homology(
        trisphom::order_complex(trisphom::build_reduced_subset_lattice(3)),
        "Z");
    CHECK(l3.groups[0] == free_part(1));
    CHECK(l3.groups[1] == free_part(1));

    const HomologyReport l4 = trisphom::homology(
        trisphom::order_complex(trisphom::build_reduced_subset_lattice(4)),
        "Z");
    REQUIRE(l4.dimension == 2);
    CHECK(l4.groups[0] == free_part(1));
    CHECK(l4.groups[1] == free_part(0));
    CHECK(l4.groups[2] == free_part(1));

    const HomologyReport l5 = trisphom::homology(
        trisphom::order_complex(trisphom::build_reduced_subset_lattice(5)),
        "Z");
    REQUIRE(l5.dimension == 3);
    CHECK(l5.groups[0] == free_part(1));
    CHECK(l5.groups[1] == free_part(0));
    CHECK(l5.groups[2] == free_part(0));
    CHECK(l5.groups[3] == free_part(1));
}

TEST_CASE("frozen homology of the cyclic quotients at p = 5", "[homology]") {
    const DeltaComplex l5_quot =
        quotient_of(trisphom::build_reduced_subset_lattice(5), 5);
    const HomologyReport l5 = trisphom::homology(l5_quot, "Z,Q,F2,F5");
    REQUIRE(l5.dimension == 3);
    CHECK(l5.groups[0] == free_part(1));
    CHECK(l5.groups[1] == torsion_part(0, {5}));
    CHECK(l5.groups[2] == free_part(0));
    CHECK(l5.groups[3] == free_part(1));
    CHECK(l5.field_betti.at("Q") == std::vector<long long>{1, 0, 0, 1});
    CHECK(l5.field_betti.at("F5") == std::vector<long long>{1, 1, 1, 1});
    CHECK(l5.field_betti.at("F2") == std::vector<long long>{1, 0, 0, 1});

    const DeltaComplex pi5_quot =
        quotient_of(trisphom::build_reduced_partition_lattice(5), 5);
    const HomologyReport pi5 = trisphom::homology(pi5_quot, "Z,Q,F2,F5");
    REQUIRE(pi5.dimension == 2);
    CHECK(pi5.groups[0] == free_part(1));
    CHECK(pi5.groups[1] == torsion_part(0, {5}));
    CHECK(pi5.groups[2] == free_part(4));
    CHECK(pi5.field_betti.at("Q") == std::vector<long long>{1, 0, 4});
    CHECK(pi5.field_betti.at("F5") == std::vector<long long>{1, 1, 5});
    CHECK(pi5.field_betti.at("F2") == std::vector<long long>{1, 0, 4});
}

TEST_CASE("field Betti numbers dominate the rational ones", "[homology]") {
    const DeltaComplex quot =
        quotient_of(trisphom::build_reduced_partition_lattice(5), 5);
    const HomologyReport h = trisphom::homology(quot, "Q,F2,F3,F5");
    for (const auto& [field, betti] : h.field_betti) {
        if (field == "Q") continue;
        for (int d = 0; d <= h.dimension; ++d) {
            INFO(field << " in dimension " << d);
            CHECK(betti[d] >= h.field_betti.at("Q")[d]);
        }
    }
    CHECK_FALSE(h.has_integral);
}

TEST_CASE("top homology of the quotients is torsion-free", "[homology]") {
    for (const bool subsets : {true, false}) {
        const DeltaComplex quot = quotient_of(
            subsets ? trisphom::build_reduced_subset_lattice(5)
                    : trisphom::build_reduced_partition_lattice(5),
            5);
        const HomologyReport h = trisphom::homology(quot, "Z");
        CHECK(h.groups[h.dimension].torsion.empty());
    }
}

TEST_CASE("euler characteristics agree across routes", "[homology]") {
    for (const bool subsets : {true, false}) {
        const DeltaComplex full = trisphom::order_complex(
            subsets ? trisphom::build_reduced_subset_lattice(5)
                    : trisphom::build_reduced_partition_lattice(5));
        const HomologyReport h = trisphom::homology(full, "Q,F2,F5");
        const long long chi = trisphom::euler_characteristic(full);
        CHECK(trisphom::euler_from_betti(h, "Q") == chi);
        CHECK(trisphom::euler_from_betti(h, "F2") == chi);
        CHECK(trisphom::euler_from_betti(h, "F5") == chi);
        CHECK_THROWS_AS(trisphom::euler_from_betti(h, "F3"),
                        std::invalid_argument);
    }
}

TEST_CASE("boundary of the empty and zero-dimensional cases", "[homology]") {
    const DeltaComplex point = DeltaComplex::from_parts({{{}}});
    const HomologyReport h = trisphom::homology(point, "Z,Q");
    REQUIRE(h.dimension == 0);
    CHECK(h.groups[0] == free_part(1));
    CHECK(h.field_betti.at("Q") == std::vector<long long>{1});

    CHECK_THROWS_AS(trisphom::boundary_matrix(point, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(trisphom::boundary_matrix(point, 0),
                    std::invalid_argument);
}
