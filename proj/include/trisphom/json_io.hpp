#ifndef TRISPHOM_JSON_IO_HPP
#define TRISPHOM_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "trisphom/complex.hpp"
#include "trisphom/homology.hpp"
#include "trisphom/permutation.hpp"
#include "trisphom/poset.hpp"
#include "trisphom/verify.hpp"

namespace trisphom {

using ordered_json = nlohmann::ordered_json;

/// { "kind": ..., "n": ..., "elements": [...], "covers": [[i,j],...] }
ordered_json poset_to_json(const FinitePoset& poset);
FinitePoset poset_from_json(const ordered_json& doc);

/// { "dims": d, "f": [...], "faces": [...], "labels": [...]? }
ordered_json complex_to_json(const DeltaComplex& c, bool include_labels = true);
DeltaComplex complex_from_json(const ordered_json& doc);

/// { "degree": n, "generators": ["(1 2 ...)", ...] }
ordered_json group_to_json(const PermutationGroup& g);
PermutationGroup group_from_json(const ordered_json& doc);

/// One document per coefficient system:
/// { "coefficients": "Z"|"Q"|"F2"|..., "groups": [{ "dim", "free_rank",
///   "torsion" }] }; returns the array of documents.
ordered_json homology_report_to_json(const HomologyReport& report);

ordered_json verdict_to_json(const Verdict& v);
ordered_json suite_report_to_json(const PaperSuiteReport& report);

/// Serialization used for all artifact files: 2-space indent plus trailing
/// newline, byte-stable for identical inputs.
std::string dump_artifact(const ordered_json& doc);

}  // namespace trisphom

#endif
