#include "trisphom/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "trisphom/smith.hpp"

namespace trisphom {

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

}  // namespace

CoefficientSpec CoefficientSpec::parse(const std::string& csv) {
    CoefficientSpec spec;
    std::string token;
    std::istringstream in(csv);
    bool any = false;
    while (std::getline(in, token, ',')) {
        // Trim surrounding whitespace.
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        any = true;
        if (token == "Z") {
            spec.integral = true;
        } else if (token == "Q") {
            spec.rational = true;
        } else if (token.size() >= 2 && token[0] == 'F') {
            long long q = 0;
            try {
                std::size_t used = 0;
                q = std::stoll(token.substr(1), &used);
                if (used != token.size() - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad coefficient token: " + token);
            }
            if (!is_prime(q)) {
                throw std::invalid_argument(
                    "field order must be prime, got " + token.substr(1));
            }
            spec.primes.push_back(q);
        } else {
            throw std::invalid_argument("bad coefficient token: " + token);
        }
    }
    if (!any) {
        throw std::invalid_argument("empty coefficient list");
    }
    std::sort(spec.primes.begin(), spec.primes.end());
    spec.primes.erase(std::unique(spec.primes.begin(), spec.primes.end()),
                      spec.primes.end());
    return spec;
}

CoefficientSpec CoefficientSpec::all_of(bool z, bool q,
                                        std::vector<long long> primes_list) {
    CoefficientSpec spec;
    spec.integral = z;
    spec.rational = q;
    spec.primes = std::move(primes_list);
    std::sort(spec.primes.begin(), spec.primes.end());
    spec.primes.erase(std::unique(spec.primes.begin(), spec.primes.end()),
                      spec.primes.end());
    for (long long p : spec.primes) {
        if (!is_prime(p)) {
            throw std::invalid_argument("field order must be prime");
        }
    }
    return spec;
}

SparseIntMatrix boundary_matrix(const DeltaComplex& c, int d) {
    if (d < 1 || d > c.dimension()) {
        throw std::invalid_argument("boundary dimension out of range");
    }
    const auto rows = c.simplex_count(d - 1);
    const auto cols = c.simplex_count(d);
    SparseIntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long long s = 0; s < cols; ++s) {
        const auto& faces = c.faces(d, static_cast<int>(s));
        for (int i = 0; i <= d; ++i) {
            m.add(faces[static_cast<std::size_t>(i)], static_cast<int>(s),
                  (i % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

HomologyReport homology(const DeltaComplex& c, const CoefficientSpec& spec) {
    HomologyReport report;
    report.dimension = c.dimension();
    if (report.dimension < 0) {
        report.has_integral = spec.integral;
        return report;
    }

    const int dim = report.dimension;
    std::vector<long long> counts(dim + 1);
    for (int d = 0; d <= dim; ++d) counts[d] = c.simplex_count(d);

    // Betti_d = n_d - rank del_d - rank del_{d+1}, with rank del_0 =
    // rank del_{dim+1} = 0.
    auto betti_from_ranks = [&](const std::vector<long long>& ranks) {
        std::vector<long long> betti(dim + 1);
        for (int d = 0; d <= dim; ++d) {
            betti[d] = counts[d] - ranks[d] - ranks[d + 1];
        }
        return betti;
    };

    // Integral Smith forms serve both Z and Q: a Smith form's rank is the
    // rational rank of the boundary map. H_d = Z^{Betti_d} (+) the factors
    // of del_{d+1} that exceed 1.
    if (spec.integral || spec.rational) {
        std::vector<SmithForm> forms(dim + 2);
        std::vector<long long> ranks(dim + 2, 0);
        for (int d = 1; d <= dim; ++d) {
            forms[d] = smith_normal_form(boundary_matrix(c, d));
            ranks[d] = forms[d].rank();
        }
        if (spec.integral) {
            report.has_integral = true;
            report.groups.resize(dim + 1);
            for (int d = 0; d <= dim; ++d) {
                HomologyGroup g;
                g.free_rank = counts[d] - ranks[d] - ranks[d + 1];
                for (const mpz_class& f : forms[d + 1].invariant_factors) {
                    if (f > 1) g.torsion.push_back(f);
                }
                report.groups[d] = std::move(g);
            }
        }
        if (spec.rational) {
            report.field_betti["Q"] = betti_from_ranks(ranks);
        }
    }

    for (long long q : spec.primes) {
        std::vector<long long> ranks(dim + 2, 0);
        for (int d = 1; d <= dim; ++d) {
            ranks[d] = rank_mod_p(boundary_matrix(c, d), q);
        }
        report.field_betti["F" + std::to_string(q)] = betti_from_ranks(ranks);
    }

    return report;
}

HomologyReport homology(const DeltaComplex& c, const std::string& coeffs) {
    return homology(c, CoefficientSpec::parse(coeffs));
}

long long euler_from_betti(const HomologyReport& report,
                           const std::string& field) {
    const auto it = report.field_betti.find(field);
    if (it == report.field_betti.end()) {
        throw std::invalid_argument("field " + field + " was not computed");
    }
    long long chi = 0;
    for (std::size_t d = 0; d < it->second.size(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * it->second[d];
    }
    return chi;
}

std::string group_to_string(const HomologyGroup& g) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " + ";
        first = false;
    };
    if (g.free_rank == 1) {
        sep();
        out << "Z";
    } else if (g.free_rank > 1) {
        sep();
        out << "Z^" << g.free_rank;
    }
    for (const mpz_class& t : g.torsion) {
        sep();
        out << "Z/" << t.get_str();
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace trisphom
