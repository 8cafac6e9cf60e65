// Command-line front end: builds lattice/complex/quotient/homology artifacts
// as canonical JSON files and runs the verification suite.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "trisphom/action.hpp"
#include "trisphom/cache.hpp"
#include "trisphom/complex.hpp"
#include "trisphom/homology.hpp"
#include "trisphom/json_io.hpp"
#include "trisphom/lattices.hpp"
#include "trisphom/verify.hpp"

namespace {

using trisphom::ordered_json;

struct CommonOptions {
    std::string out;
    std::string cache_dir;
    bool json_to_stdout = false;
    long long max_simplices = 10000000;
    long long max_group_order = 1000000;
    long long time_budget_s = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--out", opts.out, "Write the JSON artifact to this path");
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "Artifact cache directory (also: TRISPHOM_CACHE_DIR)");
    cmd->add_flag("--json", opts.json_to_stdout,
                  "Print the JSON artifact to stdout");
    cmd->add_option("--max-simplices", opts.max_simplices,
                    "Refuse complexes with more total simplices")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-group-order", opts.max_group_order,
                    "Refuse groups larger than this")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget-s", opts.time_budget_s,
                    "Soft time budget in seconds for the verify suite "
                    "(0 = unlimited)");
}

trisphom::ArtifactCache open_cache(const CommonOptions& opts) {
    std::string dir = opts.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("TRISPHOM_CACHE_DIR")) dir = env;
    }
    return dir.empty() ? trisphom::ArtifactCache()
                       : trisphom::ArtifactCache(dir);
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << text;
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

/// Emit the artifact per the common flags; the human line goes to stdout
/// unless --json claimed stdout for the machine form.
void emit(const CommonOptions& opts, const ordered_json& artifact,
          const std::string& text_summary) {
    const std::string dumped = trisphom::dump_artifact(artifact);
    if (!opts.out.empty()) {
        write_atomic(opts.out, dumped);
    }
    if (opts.json_to_stdout) {
        std::cout << dumped;
    } else {
        std::cout << text_summary;
        if (!opts.out.empty()) {
            std::cout << "wrote " << opts.out << "\n";
        }
    }
}

trisphom::FinitePoset build_lattice(const std::string& kind, int n) {
    return kind == "partition" ? trisphom::build_reduced_partition_lattice(n)
                               : trisphom::build_reduced_subset_lattice(n);
}

std::vector<trisphom::Permutation> parse_group_spec(const std::string& spec,
                                                    int degree) {
    std::vector<trisphom::Permutation> generators;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ';')) {
        if (token.find_first_not_of(" \t") == std::string::npos) continue;
        generators.push_back(trisphom::Permutation::parse_cycles(token, degree));
    }
    if (generators.empty()) {
        throw CLI::ValidationError("--group", "no generators in group spec");
    }
    return generators;
}

std::string render_f(const ordered_json& f) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << ", ";
        out << f[i].get<long long>();
    }
    out << ")";
    return out.str();
}

/// "Z^r \xE2\x8A\x95 Z/d ..." from one {dim, free_rank, torsion} JSON group.
std::string render_group(const ordered_json& group) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " ⊕ ";
        first = false;
    };
    const long long free_rank = group.at("free_rank").get<long long>();
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (const auto& t : group.at("torsion")) {
        sep();
        out << "Z/" << t.get<std::string>();
    }
    if (first) out << "0";
    return out.str();
}

std::string render_homology(const ordered_json& docs) {
    std::ostringstream out;
    for (const auto& doc : docs) {
        out << doc.at("coefficients").get<std::string>() << ":\n";
        for (const auto& group : doc.at("groups")) {
            out << "  H_" << group.at("dim").get<int>() << " = "
                << render_group(group) << "\n";
        }
    }
    return out.str();
}

long long chi_of(const ordered_json& f) {
    long long chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        chi += (i % 2 == 0 ? 1 : -1) * f[i].get<long long>();
    }
    return chi;
}

// ---- command bodies --------------------------------------------------------

int cmd_lattice(const std::string& kind, int n, const CommonOptions& opts) {
    const auto cache = open_cache(opts);
    const std::string key = trisphom::ArtifactCache::key_of(
        "poset|kind=" + kind + "|n=" + std::to_string(n));
    ordered_json artifact;
    if (auto cached = cache.load(key)) {
        artifact = std::move(*cached);
    } else {
        artifact = trisphom::poset_to_json(build_lattice(kind, n));
        cache.store(key, artifact);
    }
    std::ostringstream text;
    text << kind << " lattice, n=" << n << ": "
         << artifact.at("elements").size() << " elements, "
         << artifact.at("covers").size() << " covers\n";
    emit(opts, artifact, text.str());
    return 0;
}

int cmd_complex(const std::string& kind, int n, const CommonOptions& opts) {
    const auto cache = open_cache(opts);
    const std::string key = trisphom::ArtifactCache::key_of(
        "complex|kind=" + kind + "|n=" + std::to_string(n));
    ordered_json artifact;
    if (auto cached = cache.load(key)) {
        artifact = std::move(*cached);
    } else {
        const trisphom::DeltaComplex c = order_complex(build_lattice(kind, n));
        if (c.total_simplices() > opts.max_simplices) {
            throw std::runtime_error(
                "complex exceeds --max-simplices (" +
                std::to_string(c.total_simplices()) + " simplices)");
        }
        artifact = trisphom::complex_to_json(c);
        cache.store(key, artifact);
    }
    std::ostringstream text;
    text << "order complex of the " << kind << " lattice, n=" << n << ": dim "
         << artifact.at("dims").get<int>() << ", f = "
         << render_f(artifact.at("f")) << ", chi = "
         << chi_of(artifact.at("f")) << "\n";
    emit(opts, artifact, text.str());
    return 0;
}

/// Shared by `quotient` and `homology --group`: the quotient complex, via
/// the cache when possible.
ordered_json quotient_artifact(const std::string& kind, int n,
                               const std::string& group_spec,
                               const trisphom::ArtifactCache& cache,
                               const CommonOptions& opts) {
    const std::string key = trisphom::ArtifactCache::key_of(
        "quotient|kind=" + kind + "|n=" + std::to_string(n) +
        "|group=" + group_spec);
    if (auto cached = cache.load(key)) return std::move(*cached);

    const auto poset = std::make_shared<const trisphom::FinitePoset>(
        build_lattice(kind, n));
    const trisphom::DeltaComplex full = order_complex(*poset);
    if (full.total_simplices() > opts.max_simplices) {
        throw std::runtime_error(
            "complex exceeds --max-simplices (" +
            std::to_string(full.total_simplices()) + " simplices)");
    }
    const trisphom::PermutationGroup group(
        n, parse_group_spec(group_spec, n),
        static_cast<std::size_t>(opts.max_group_order));
    const trisphom::GroupAction action(group, poset);
    const trisphom::DeltaComplex quotient = quotient_complex(full, action);
    ordered_json artifact = trisphom::complex_to_json(quotient);
    cache.store(key, artifact);
    return artifact;
}

int cmd_quotient(const std::string& kind, int n, const std::string& group_spec,
                 const CommonOptions& opts) {
    const auto cache = open_cache(opts);
    const ordered_json artifact =
        quotient_artifact(kind, n, group_spec, cache, opts);
    std::ostringstream text;
    text << "quotient of the " << kind << " order complex, n=" << n
         << ", by <" << group_spec << ">: dim "
         << artifact.at("dims").get<int>() << ", f = "
         << render_f(artifact.at("f")) << ", chi = "
         << chi_of(artifact.at("f")) << "\n";
    emit(opts, artifact, text.str());
    return 0;
}

int cmd_homology(const std::string& kind, int n, const std::string& group_spec,
                 const std::string& coeffs, const std::string& in_path,
                 const CommonOptions& opts) {
    const auto cache = open_cache(opts);
    const trisphom::CoefficientSpec spec =
        trisphom::CoefficientSpec::parse(coeffs);

    std::string key_desc;
    std::optional<trisphom::DeltaComplex> complex_in;
    if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in) throw std::runtime_error("cannot read " + in_path);
        complex_in = trisphom::complex_from_json(ordered_json::parse(in));
        key_desc = "";  // file inputs are not cached (no stable parameters)
    } else {
        key_desc = "homology|kind=" + kind + "|n=" + std::to_string(n) +
                   "|group=" + group_spec + "|coeffs=" + coeffs;
    }

    ordered_json artifact;
    const std::string key =
        key_desc.empty() ? "" : trisphom::ArtifactCache::key_of(key_desc);
    if (!key.empty()) {
        if (auto cached = cache.load(key)) artifact = std::move(*cached);
    }
    if (artifact.is_null()) {
        trisphom::DeltaComplex c;
        if (complex_in) {
            c = std::move(*complex_in);
        } else if (group_spec.empty()) {
            c = order_complex(build_lattice(kind, n));
        } else {
            c = trisphom::complex_from_json(
                quotient_artifact(kind, n, group_spec, cache, opts));
        }
        if (c.total_simplices() > opts.max_simplices) {
            throw std::runtime_error(
                "complex exceeds --max-simplices (" +
                std::to_string(c.total_simplices()) + " simplices)");
        }
        artifact = trisphom::homology_report_to_json(homology(c, spec));
        if (!key.empty()) cache.store(key, artifact);
    }

    std::ostringstream text;
    if (!in_path.empty()) {
        text << "homology of " << in_path << "\n";
    } else {
        text << "homology of the " << kind << " order complex, n=" << n;
        if (!group_spec.empty()) text << ", quotient by <" << group_spec << ">";
        text << "\n";
    }
    text << render_homology(artifact);
    emit(opts, artifact, text.str());
    return 0;
}

int cmd_verify_paper(int p, const std::string& group_spec, bool skip_partition,
                     bool skip_subset, const CommonOptions& opts) {
    trisphom::PaperSuiteConfig config;
    config.p = p;
    config.include_partition = !skip_partition;
    config.include_subset = !skip_subset;
    if (!group_spec.empty()) config.group_spec = group_spec;
    config.caps.max_simplices = opts.max_simplices;
    config.caps.max_group_order =
        static_cast<std::size_t>(opts.max_group_order);
    config.caps.time_budget_s = opts.time_budget_s;

    const trisphom::PaperSuiteReport report = trisphom::run_paper_suite(config);
    const ordered_json artifact = trisphom::suite_report_to_json(report);

    std::ostringstream text;
    text << "verification suite: p=" << report.p << ", G = <" << report.group
         << ">\n";
    for (const trisphom::Verdict& v : report.verdicts) {
        text << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.claim_id
             << ": expected " << v.expected << "; computed " << v.computed
             << " (" << v.millis << " ms)\n";
        for (const std::string& a : v.assumptions) {
            text << "         note: " << a << "\n";
        }
    }
    text << "observations:\n";
    for (const trisphom::SuiteObservation& obs : report.observations) {
        text << "  " << obs.name << ": f = ";
        text << "(";
        for (std::size_t i = 0; i < obs.f.counts.size(); ++i) {
            if (i) text << ", ";
            text << obs.f.counts[i];
        }
        text << "), chi = " << obs.euler << "\n";
        if (obs.homology.has_integral) {
            for (std::size_t d = 0; d < obs.homology.groups.size(); ++d) {
                text << "    H_" << d << " = "
                     << trisphom::group_to_string(obs.homology.groups[d])
                     << "\n";
            }
        }
    }
    if (!report.complete) {
        text << "INCOMPLETE: " << report.incomplete_reason << "\n";
    }
    text << (report.all_pass() ? "all claims pass\n" : "CLAIMS FAILED\n");
    emit(opts, artifact, text.str());
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice order complexes, free quotients and exact homology"};
    app.require_subcommand(1);

    const std::vector<std::string> kinds{"partition", "subset"};

    // lattice <kind> --n N
    std::string lattice_kind;
    int lattice_n = 0;
    CommonOptions lattice_opts;
    CLI::App* lattice = app.add_subcommand("lattice", "Build a reduced lattice");
    lattice->add_option("kind", lattice_kind, "partition or subset")
        ->required()
        ->check(CLI::IsMember(kinds));
    lattice->add_option("--n,--p", lattice_n, "Ground set size")->required();
    add_common(lattice, lattice_opts);

    // complex <kind> --n N
    std::string complex_kind;
    int complex_n = 0;
    CommonOptions complex_opts;
    CLI::App* complex_cmd =
        app.add_subcommand("complex", "Build an order complex");
    complex_cmd->add_option("kind", complex_kind, "partition or subset")
        ->required()
        ->check(CLI::IsMember(kinds));
    complex_cmd->add_option("--n,--p", complex_n, "Ground set size")->required();
    add_common(complex_cmd, complex_opts);

    // quotient <kind> --n N --group "(...)"
    std::string quotient_kind;
    int quotient_n = 0;
    std::string quotient_group;
    CommonOptions quotient_opts;
    CLI::App* quotient =
        app.add_subcommand("quotient", "Quotient an order complex");
    quotient->add_option("kind", quotient_kind, "partition or subset")
        ->required()
        ->check(CLI::IsMember(kinds));
    quotient->add_option("--n,--p", quotient_n, "Ground set size")->required();
    quotient
        ->add_option("--group", quotient_group,
                     "Generators in cycle notation, ';'-separated")
        ->required();
    add_common(quotient, quotient_opts);

    // homology <kind> --n N [--group ...] [--coeffs ...] | --in file
    std::string homology_kind = "partition";
    int homology_n = 0;
    std::string homology_group;
    std::string homology_coeffs = "Z";
    std::string homology_in;
    CommonOptions homology_opts;
    CLI::App* homology_cmd =
        app.add_subcommand("homology", "Exact homology of a complex");
    homology_cmd->add_option("kind", homology_kind, "partition or subset")
        ->check(CLI::IsMember(kinds));
    CLI::Option* homology_n_opt =
        homology_cmd->add_option("--n,--p", homology_n, "Ground set size");
    homology_cmd->add_option("--group", homology_group,
                             "Quotient by this group before computing");
    homology_cmd->add_option("--coeffs", homology_coeffs,
                             "Comma list out of Z, Q, F<prime>");
    CLI::Option* homology_in_opt = homology_cmd->add_option(
        "--in", homology_in, "Read a complex JSON artifact instead");
    homology_in_opt->excludes(homology_n_opt);
    add_common(homology_cmd, homology_opts);

    // verify paper --p P [--group ...] [--skip-...]
    int verify_p = 5;
    std::string verify_group;
    bool skip_partition = false;
    bool skip_subset = false;
    CommonOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->require_subcommand(1);
    CLI::App* paper = verify->add_subcommand(
        "paper", "Check every quantitative claim for one prime");
    paper->add_option("--p,--n", verify_p, "Prime ground set size")->required();
    paper->add_option("--group", verify_group,
                      "Acting group generators (default: the p-cycle)");
    paper->add_flag("--skip-partition", skip_partition,
                    "Leave out the partition-lattice side");
    paper->add_flag("--skip-subset", skip_subset,
                    "Leave out the subset-lattice side");
    add_common(paper, verify_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (lattice->parsed()) {
            return cmd_lattice(lattice_kind, lattice_n, lattice_opts);
        }
        if (complex_cmd->parsed()) {
            return cmd_complex(complex_kind, complex_n, complex_opts);
        }
        if (quotient->parsed()) {
            return cmd_quotient(quotient_kind, quotient_n, quotient_group,
                                quotient_opts);
        }
        if (homology_cmd->parsed()) {
            if (homology_in.empty() && homology_n == 0) {
                std::cerr << "error: provide --n/--p or --in\n";
                return 2;
            }
            return cmd_homology(homology_kind, homology_n, homology_group,
                                homology_coeffs, homology_in, homology_opts);
        }
        if (verify->parsed() && paper->parsed()) {
            return cmd_verify_paper(verify_p, verify_group, skip_partition,
                                    skip_subset, verify_opts);
        }
    } catch (const trisphom::NonFreeActionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
