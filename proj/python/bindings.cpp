// Python bindings for the main pipeline: lattices, order complexes, group
// actions, free quotients, exact homology and the verification suite.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "trisphom/action.hpp"
#include "trisphom/complex.hpp"
#include "trisphom/homology.hpp"
#include "trisphom/json_io.hpp"
#include "trisphom/lattices.hpp"
#include "trisphom/verify.hpp"

namespace py = pybind11;
using namespace trisphom;

namespace {

py::int_ to_py_int(const mpz_class& z) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object json_to_py(const ordered_json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

std::vector<Permutation> split_generators(const std::string& spec, int degree) {
    std::vector<Permutation> generators;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ';')) {
        if (token.find_first_not_of(" \t") == std::string::npos) continue;
        generators.push_back(Permutation::parse_cycles(token, degree));
    }
    if (generators.empty()) {
        throw std::invalid_argument("group spec lists no generators");
    }
    return generators;
}

py::dict homology_to_py(const HomologyReport& report) {
    py::dict out;
    if (report.has_integral) {
        py::list groups;
        for (const HomologyGroup& g : report.groups) {
            py::dict entry;
            entry["free_rank"] = g.free_rank;
            py::list torsion;
            for (const mpz_class& t : g.torsion) torsion.append(to_py_int(t));
            entry["torsion"] = std::move(torsion);
            groups.append(std::move(entry));
        }
        out["Z"] = std::move(groups);
    }
    for (const auto& [field, betti] : report.field_betti) {
        out[field.c_str()] = betti;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Reduced partition/subset lattices, order complexes, free quotients "
        "and exact simplicial homology";

    py::class_<FinitePoset, std::shared_ptr<FinitePoset>>(m, "Poset")
        .def_property_readonly("size", &FinitePoset::size)
        .def_property_readonly("ground_n", &FinitePoset::ground_n)
        .def_property_readonly(
            "kind", [](const FinitePoset& p) { return to_string(p.kind()); })
        .def("label", &FinitePoset::label, py::arg("i"),
             py::return_value_policy::copy)
        .def("rank", &FinitePoset::rank, py::arg("i"))
        .def("less", &FinitePoset::less, py::arg("i"), py::arg("j"))
        .def_property_readonly(
            "covers", [](const FinitePoset& p) { return p.covers(); })
        .def("__len__", &FinitePoset::size)
        .def("__repr__", [](const FinitePoset& p) {
            return "<Poset kind=" + to_string(p.kind()) +
                   " size=" + std::to_string(p.size()) + ">";
        });

    m.def(
        "partition_lattice",
        [](int n) {
            return std::make_shared<FinitePoset>(
                build_reduced_partition_lattice(n));
        },
        py::arg("n"),
        "The reduced partition lattice on {1,...,n} (proper, nontrivial "
        "partitions under refinement)");
    m.def(
        "subset_lattice",
        [](int p) {
            return std::make_shared<FinitePoset>(
                build_reduced_subset_lattice(p));
        },
        py::arg("p"),
        "The reduced subset lattice on {1,...,p} (nonempty proper subsets "
        "under inclusion)");

    py::class_<DeltaComplex>(m, "Complex")
        .def_property_readonly("dimension", &DeltaComplex::dimension)
        .def("simplex_count", &DeltaComplex::simplex_count, py::arg("d"))
        .def_property_readonly("total_simplices", &DeltaComplex::total_simplices)
        .def_property_readonly(
            "f_vector",
            [](const DeltaComplex& c) { return f_vector(c).counts; })
        .def_property_readonly(
            "euler", [](const DeltaComplex& c) { return euler_characteristic(c); })
        .def("validate", &DeltaComplex::validate)
        .def("__repr__", [](const DeltaComplex& c) {
            return "<Complex dim=" + std::to_string(c.dimension()) +
                   " simplices=" + std::to_string(c.total_simplices()) + ">";
        });

    m.def(
        "order_complex",
        [](const std::shared_ptr<FinitePoset>& p) { return order_complex(*p); },
        py::arg("poset"), "The nerve: d-simplices are (d+1)-element chains");

    py::class_<PermutationGroup>(m, "Group")
        .def_property_readonly("degree", &PermutationGroup::degree)
        .def_property_readonly("order", &PermutationGroup::order)
        .def_property_readonly("is_abelian", &PermutationGroup::is_abelian)
        .def("abelian_invariants", &PermutationGroup::abelian_invariants)
        .def_property_readonly("elements",
                               [](const PermutationGroup& g) {
                                   std::vector<std::string> cycles;
                                   for (const auto& e : g.elements()) {
                                       cycles.push_back(e.to_cycle_string());
                                   }
                                   return cycles;
                               })
        .def("__len__", &PermutationGroup::order)
        .def("__repr__", [](const PermutationGroup& g) {
            return "<Group degree=" + std::to_string(g.degree()) +
                   " order=" + std::to_string(g.order()) + ">";
        });

    m.def("cyclic_group", &PermutationGroup::cyclic, py::arg("degree"),
          "The cyclic group generated by (1 2 ... degree)");
    m.def(
        "group_from_cycles",
        [](const std::string& spec, int degree) {
            return PermutationGroup(degree, split_generators(spec, degree));
        },
        py::arg("spec"), py::arg("degree"),
        "Group generated by ';'-separated cycle strings");

    py::class_<GroupAction>(m, "Action")
        .def(py::init([](const PermutationGroup& group,
                         const std::shared_ptr<FinitePoset>& poset) {
                 return GroupAction(
                     group, std::shared_ptr<const FinitePoset>(poset));
             }),
             py::arg("group"), py::arg("poset"))
        .def("apply", &GroupAction::apply, py::arg("g"), py::arg("e"),
             "Image of poset element e under group element g (indices)");

    m.def(
        "is_free",
        [](const GroupAction& a) {
            const FreenessVerdict v = is_free_action(a);
            py::dict out;
            out["free"] = v.free;
            if (!v.free) {
                out["witness_group_element"] =
                    v.witness_group_element->to_cycle_string();
                out["witness_label"] = v.witness_label;
            }
            return out;
        },
        py::arg("action"),
        "Freeness verdict with a fixed-point witness when not free");

    m.def(
        "quotient",
        [](const DeltaComplex& c, const GroupAction& a) {
            return quotient_complex(c, a);
        },
        py::arg("complex"), py::arg("action"),
        "Quotient trisp of an order complex by a free action");

    m.def(
        "homology",
        [](const DeltaComplex& c, const std::string& coeffs) {
            return homology_to_py(homology(c, coeffs));
        },
        py::arg("complex"), py::arg("coeffs") = "Z",
        "Exact homology; 'Z' yields [{free_rank, torsion}] per dimension, "
        "'Q'/'F<p>' yield Betti number lists");

    m.def(
        "predict_quotient_betti",
        [](long long k, int d, long long group_order) {
            return predict_quotient_betti(k, d, group_order).predicted;
        },
        py::arg("k"), py::arg("d"), py::arg("group_order"),
        "Rational Betti numbers of the quotient of a wedge of k d-spheres "
        "by a free action of a group of the given order");

    m.def(
        "verify_paper",
        [](int p, const std::optional<std::string>& group,
           bool include_partition, bool include_subset,
           long long max_simplices, long long time_budget_s) {
            PaperSuiteConfig config;
            config.p = p;
            config.group_spec = group;
            config.include_partition = include_partition;
            config.include_subset = include_subset;
            config.caps.max_simplices = max_simplices;
            config.caps.time_budget_s = time_budget_s;
            return json_to_py(suite_report_to_json(run_paper_suite(config)));
        },
        py::arg("p"), py::arg("group") = std::nullopt,
        py::arg("include_partition") = true, py::arg("include_subset") = true,
        py::arg("max_simplices") = 10000000LL, py::arg("time_budget_s") = 0LL,
        "Run the verification suite for one prime; returns the report as a "
        "dict");
}
