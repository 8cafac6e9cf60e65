#include "trisphom/json_io.hpp"

#include <stdexcept>

namespace trisphom {

ordered_json poset_to_json(const FinitePoset& poset) {
    ordered_json doc;
    doc["kind"] = to_string(poset.kind());
    doc["n"] = poset.ground_n();
    ordered_json elements = ordered_json::array();
    for (int i = 0; i < poset.size(); ++i) elements.push_back(poset.label(i));
    doc["elements"] = std::move(elements);
    ordered_json covers = ordered_json::array();
    for (const auto& [i, j] : poset.covers()) {
        covers.push_back(ordered_json::array({i, j}));
    }
    doc["covers"] = std::move(covers);
    return doc;
}

FinitePoset poset_from_json(const ordered_json& doc) {
    const PosetKind kind = poset_kind_from_string(doc.at("kind").get<std::string>());
    const int n = doc.at("n").get<int>();
    std::vector<std::string> labels =
        doc.at("elements").get<std::vector<std::string>>();

    // The document carries the covering relation; the order is its
    // transitive closure.
    const int size = static_cast<int>(labels.size());
    BitRelation less(size);
    for (const auto& pair : doc.at("covers")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("covers entries must be [i, j] pairs");
        }
        const int i = pair[0].get<int>();
        const int j = pair[1].get<int>();
        if (i < 0 || j < 0 || i >= size || j >= size) {
            throw std::invalid_argument("cover index out of range");
        }
        less.set(i, j);
    }
    // Closure in index order works because the indexing must be a linear
    // extension (validated by the FinitePoset constructor).
    for (int j = 0; j < size; ++j) {
        for (int i = 0; i < j; ++i) {
            if (!less.get(i, j)) continue;
            for (int k = j + 1; k < size; ++k) {
                if (less.get(j, k)) less.set(i, k);
            }
        }
    }
    return FinitePoset(kind, n, std::move(labels), std::move(less));
}

ordered_json complex_to_json(const DeltaComplex& c, bool include_labels) {
    ordered_json doc;
    doc["dims"] = c.dimension();
    ordered_json f = ordered_json::array();
    for (int d = 0; d <= c.dimension(); ++d) f.push_back(c.simplex_count(d));
    doc["f"] = std::move(f);
    ordered_json faces = ordered_json::array();
    for (int d = 1; d <= c.dimension(); ++d) {
        ordered_json per_dim = ordered_json::array();
        for (long long s = 0; s < c.simplex_count(d); ++s) {
            per_dim.push_back(c.faces(d, static_cast<int>(s)));
        }
        faces.push_back(std::move(per_dim));
    }
    doc["faces"] = std::move(faces);
    if (include_labels && c.has_labels()) {
        ordered_json labels = ordered_json::array();
        for (int d = 0; d <= c.dimension(); ++d) {
            ordered_json per_dim = ordered_json::array();
            for (long long s = 0; s < c.simplex_count(d); ++s) {
                per_dim.push_back(c.label(d, static_cast<int>(s)));
            }
            labels.push_back(std::move(per_dim));
        }
        doc["labels"] = std::move(labels);
    }
    return doc;
}

DeltaComplex complex_from_json(const ordered_json& doc) {
    const int dims = doc.at("dims").get<int>();
    const std::vector<long long> f = doc.at("f").get<std::vector<long long>>();
    if (static_cast<int>(f.size()) != dims + 1) {
        throw std::invalid_argument("f-vector length does not match dims");
    }

    std::vector<std::vector<std::vector<int>>> faces(
        dims >= 0 ? static_cast<std::size_t>(dims) + 1 : 0);
    if (dims >= 0) {
        faces[0].assign(static_cast<std::size_t>(f[0]), {});
        const auto& face_doc = doc.at("faces");
        if (static_cast<int>(face_doc.size()) != dims) {
            throw std::invalid_argument("faces must list dimensions 1..dims");
        }
        for (int d = 1; d <= dims; ++d) {
            faces[static_cast<std::size_t>(d)] =
                face_doc[d - 1].get<std::vector<std::vector<int>>>();
            if (static_cast<long long>(faces[static_cast<std::size_t>(d)].size()) !=
                f[static_cast<std::size_t>(d)]) {
                throw std::invalid_argument(
                    "face list length disagrees with the f-vector");
            }
        }
    }

    std::vector<std::vector<std::string>> labels;
    if (doc.contains("labels")) {
        labels.resize(static_cast<std::size_t>(dims) + 1);
        const auto& label_doc = doc.at("labels");
        if (static_cast<int>(label_doc.size()) != dims + 1) {
            throw std::invalid_argument("labels must list dimensions 0..dims");
        }
        for (int d = 0; d <= dims; ++d) {
            labels[static_cast<std::size_t>(d)] =
                label_doc[d].get<std::vector<std::string>>();
        }
    }

    DeltaComplex c = DeltaComplex::from_parts(std::move(faces), std::move(labels));
    c.validate();
    return c;
}

ordered_json group_to_json(const PermutationGroup& g) {
    ordered_json doc;
    doc["degree"] = g.degree();
    ordered_json generators = ordered_json::array();
    for (const auto& gen : g.generators()) {
        generators.push_back(gen.to_cycle_string());
    }
    doc["generators"] = std::move(generators);
    return doc;
}

PermutationGroup group_from_json(const ordered_json& doc) {
    const int degree = doc.at("degree").get<int>();
    std::vector<Permutation> generators;
    for (const auto& gen : doc.at("generators")) {
        generators.push_back(
            Permutation::parse_cycles(gen.get<std::string>(), degree));
    }
    return PermutationGroup(degree, std::move(generators));
}

namespace {

ordered_json groups_to_json(const std::vector<HomologyGroup>& groups) {
    ordered_json out = ordered_json::array();
    for (std::size_t d = 0; d < groups.size(); ++d) {
        ordered_json g;
        g["dim"] = d;
        g["free_rank"] = groups[d].free_rank;
        ordered_json torsion = ordered_json::array();
        for (const mpz_class& t : groups[d].torsion) {
            torsion.push_back(t.get_str());
        }
        g["torsion"] = std::move(torsion);
        out.push_back(std::move(g));
    }
    return out;
}

ordered_json betti_to_json(const std::vector<long long>& betti) {
    ordered_json out = ordered_json::array();
    for (std::size_t d = 0; d < betti.size(); ++d) {
        ordered_json g;
        g["dim"] = d;
        g["free_rank"] = betti[d];
        g["torsion"] = ordered_json::array();
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

ordered_json homology_report_to_json(const HomologyReport& report) {
    ordered_json docs = ordered_json::array();
    if (report.has_integral) {
        ordered_json doc;
        doc["coefficients"] = "Z";
        doc["groups"] = groups_to_json(report.groups);
        docs.push_back(std::move(doc));
    }
    // Map order gives Fp before Q alphabetically; emit Q first, fields after.
    if (report.has_field("Q")) {
        ordered_json doc;
        doc["coefficients"] = "Q";
        doc["groups"] = betti_to_json(report.field_betti.at("Q"));
        docs.push_back(std::move(doc));
    }
    for (const auto& [field, betti] : report.field_betti) {
        if (field == "Q") continue;
        ordered_json doc;
        doc["coefficients"] = field;
        doc["groups"] = betti_to_json(betti);
        docs.push_back(std::move(doc));
    }
    return docs;
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json doc;
    doc["claim"] = v.claim_id;
    doc["expected"] = v.expected;
    doc["computed"] = v.computed;
    doc["pass"] = v.pass;
    doc["assumptions"] = v.assumptions;
    doc["millis"] = v.millis;
    return doc;
}

ordered_json suite_report_to_json(const PaperSuiteReport& report) {
    ordered_json doc;
    doc["p"] = report.p;
    doc["group"] = report.group;
    doc["complete"] = report.complete;
    if (!report.complete) {
        doc["incomplete_reason"] = report.incomplete_reason;
    }
    doc["all_pass"] = report.all_pass();
    ordered_json verdicts = ordered_json::array();
    for (const Verdict& v : report.verdicts) {
        verdicts.push_back(verdict_to_json(v));
    }
    doc["verdicts"] = std::move(verdicts);
    ordered_json observations = ordered_json::array();
    for (const SuiteObservation& obs : report.observations) {
        ordered_json entry;
        entry["name"] = obs.name;
        entry["f"] = obs.f.counts;
        entry["euler"] = obs.euler;
        entry["homology"] = homology_report_to_json(obs.homology);
        observations.push_back(std::move(entry));
    }
    doc["observations"] = std::move(observations);
    return doc;
}

std::string dump_artifact(const ordered_json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace trisphom
