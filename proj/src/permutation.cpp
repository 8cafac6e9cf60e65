#include "trisphom/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trisphom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n < 1) {
        throw std::invalid_argument("permutation degree must be positive");
    }
    std::vector<bool> seen(n + 1, false);
    for (int x : images_) {
        if (x < 1 || x > n || seen[x]) {
            throw std::invalid_argument("image list is not a bijection on [n]");
        }
        seen[x] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 1);

    std::string trimmed;
    for (char ch : text) {
        if (!isspace(static_cast<unsigned char>(ch)) || !trimmed.empty()) {
            trimmed.push_back(ch);
        }
    }
    while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.pop_back();
    }
    if (trimmed.empty() || trimmed == "id" || trimmed == "()") {
        return Permutation(std::move(images));
    }

    std::set<int> used;
    std::vector<int> cycle;
    std::string digits;
    bool in_cycle = false;

    auto flush_point = [&]() {
        if (digits.empty()) return;
        const int x = std::stoi(digits);
        digits.clear();
        if (x < 1 || x > degree) {
            throw std::invalid_argument("cycle point " + std::to_string(x) +
                                        " outside degree " + std::to_string(degree));
        }
        if (!used.insert(x).second) {
            throw std::invalid_argument("cycles are not disjoint at point " +
                                        std::to_string(x));
        }
        cycle.push_back(x);
    };

    for (char ch : trimmed) {
        if (ch == '(') {
            if (in_cycle) throw std::invalid_argument("nested '(' in cycle string");
            in_cycle = true;
            cycle.clear();
        } else if (ch == ')') {
            if (!in_cycle) throw std::invalid_argument("unmatched ')' in cycle string");
            flush_point();
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
            }
            in_cycle = false;
        } else if (ch >= '0' && ch <= '9') {
            if (!in_cycle) throw std::invalid_argument("digit outside a cycle");
            digits.push_back(ch);
        } else if (ch == ' ' || ch == ',') {
            flush_point();
        } else {
            throw std::invalid_argument(std::string("bad character '") + ch +
                                        "' in cycle string");
        }
    }
    if (in_cycle) throw std::invalid_argument("unterminated cycle");
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (images_[i] != i + 1) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("composing permutations of different degree");
    }
    std::vector<int> images(a.degree());
    for (int i = 0; i < a.degree(); ++i) {
        images[i] = a.images_[b.images_[i] - 1];
    }
    return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
    if (is_identity()) return "()";
    std::ostringstream out;
    std::vector<bool> seen(degree() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start] || images_[start - 1] == start) continue;
        out << '(';
        int x = start;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << x;
            seen[x] = true;
            x = images_[x - 1];
            first = false;
        } while (x != start);
        out << ')';
    }
    return out.str();
}

PermutationGroup::PermutationGroup(int degree,
                                   std::vector<Permutation> generators,
                                   std::size_t max_order)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
    for (const auto& g : generators_) {
        if (g.degree() != degree) {
            throw std::invalid_argument("generator degree mismatch");
        }
    }

    // Closure by breadth-first products.
    std::set<Permutation> closure;
    std::queue<Permutation> frontier;
    const Permutation id = Permutation::identity(degree);
    closure.insert(id);
    frontier.push(id);
    while (!frontier.empty()) {
        const Permutation current = frontier.front();
        frontier.pop();
        for (const auto& g : generators_) {
            Permutation next = g * current;
            if (closure.insert(next).second) {
                if (closure.size() > max_order) {
                    throw std::invalid_argument(
                        "group order exceeds the cap of " +
                        std::to_string(max_order));
                }
                frontier.push(std::move(next));
            }
        }
    }
    elements_.assign(closure.begin(), closure.end());
}

PermutationGroup PermutationGroup::trivial(int degree) {
    return PermutationGroup(degree, {});
}

PermutationGroup PermutationGroup::cyclic(int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = (i + 1) % degree + 1;
    return PermutationGroup(degree, {Permutation(std::move(images))});
}

bool PermutationGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (!(generators_[i] * generators_[j] ==
                  generators_[j] * generators_[i])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Finite group as a multiplication table over dense indices; identity is 0.
struct MulTable {
    int n = 0;
    std::vector<std::vector<int>> mul;

    int order_of(int x) const {
        int k = 1;
        int y = x;
        while (y != 0) {
            y = mul[y][x];
            ++k;
        }
        return k;
    }
};

// Quotient of an abelian table group by the cyclic subgroup generated by x.
MulTable quotient_by_cyclic(const MulTable& t, int x) {
    std::vector<int> coset_rep(t.n, -1);
    // Enumerate <x>.
    std::vector<int> subgroup{0};
    for (int y = x; y != 0; y = t.mul[y][x]) subgroup.push_back(y);

    std::vector<int> reps;
    for (int e = 0; e < t.n; ++e) {
        if (coset_rep[e] != -1) continue;
        for (int s : subgroup) {
            coset_rep[t.mul[e][s]] = e;
        }
        reps.push_back(e);
    }
    std::vector<int> rep_index(t.n, -1);
    // Identity's coset first so index 0 stays the identity.
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

    MulTable q;
    q.n = static_cast<int>(reps.size());
    q.mul.assign(q.n, std::vector<int>(q.n, 0));
    for (int a = 0; a < q.n; ++a) {
        for (int b = 0; b < q.n; ++b) {
            q.mul[a][b] = rep_index[coset_rep[t.mul[reps[a]][reps[b]]]];
        }
    }
    return q;
}

}  // namespace

std::vector<long long> PermutationGroup::abelian_invariants() const {
    if (!is_abelian()) {
        throw std::invalid_argument(
            "abelian invariants requested for a non-abelian group");
    }

    // Build the multiplication table (elements are sorted; index 0 = id).
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index.emplace(elements_[i], static_cast<int>(i));
    }
    MulTable t;
    t.n = static_cast<int>(elements_.size());
    t.mul.assign(t.n, std::vector<int>(t.n, 0));
    for (int a = 0; a < t.n; ++a) {
        for (int b = 0; b < t.n; ++b) {
            t.mul[a][b] = index.at(elements_[a] * elements_[b]);
        }
    }

    // Greedy invariant-factor extraction: an element of maximal order spans
    // a direct summand of an abelian group; quotient and repeat.
    std::vector<long long> factors;
    while (t.n > 1) {
        int best = 1;
        int best_order = 1;
        for (int e = 1; e < t.n; ++e) {
            const int ord = t.order_of(e);
            if (ord > best_order) {
                best_order = ord;
                best = e;
            }
        }
        factors.push_back(best_order);
        t = quotient_by_cyclic(t, best);
    }
    std::reverse(factors.begin(), factors.end());  // ascending d_1 | d_2 | ...
    return factors;
}

}  // namespace trisphom
