#include "trisphom/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace trisphom {

namespace {

/// Dense unimodular transform tracking for witness mode. U premultiplies,
/// V postmultiplies; every elementary step on the matrix mirrors here.
struct WitnessTracker {
    std::vector<std::vector<mpz_class>> U;
    std::vector<std::vector<mpz_class>> V;

    WitnessTracker(int rows, int cols)
        : U(rows, std::vector<mpz_class>(rows, 0)),
          V(cols, std::vector<mpz_class>(cols, 0)) {
        for (int i = 0; i < rows; ++i) U[i][i] = 1;
        for (int j = 0; j < cols; ++j) V[j][j] = 1;
    }

    void swap_rows(int a, int b) { std::swap(U[a], U[b]); }
    void swap_cols(int a, int b) {
        for (auto& row : V) std::swap(row[a], row[b]);
    }
    void negate_row(int i) {
        for (auto& v : U[i]) v = -v;
    }
    void add_multiple_of_row(int dst, int src, const mpz_class& q) {
        for (std::size_t k = 0; k < U[dst].size(); ++k) {
            U[dst][k] += q * U[src][k];
        }
    }
    void add_multiple_of_col(int dst, int src, const mpz_class& q) {
        for (auto& row : V) row[dst] += q * row[src];
    }
};

/// Nearest-integer quotient: q minimizing |a - q*b|. Shrinks remainders
/// faster than floor division and keeps intermediate entries small.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Floor division leaves r between 0 and b (sign of b, |r| < |b|). When
    // |r| exceeds |b|/2 the remainder is closer to b than to 0, and q + 1
    // lands it on the small side regardless of the sign of b.
    if (2 * abs(r) > abs(b)) {
        q += 1;
    }
    return q;
}

struct PivotChoice {
    int row = -1;
    int col = -1;
};

/// Minimal |value| among active entries, ties broken by least fill
/// (pivot row nnz + pivot column nnz), then by first encounter in (row,
/// col) scan order for determinism. Active region is rows/cols >= k.
PivotChoice choose_pivot(const SparseIntMatrix& m, int k) {
    PivotChoice best;
    const mpz_class* best_val = nullptr;
    std::size_t best_fill = 0;
    for (int i = k; i < m.rows(); ++i) {
        if (m.row_nnz(i) == 0) continue;
        for (const auto& [j, v] : m.row(i)) {
            if (j < k) continue;
            const int cmp =
                best_val == nullptr
                    ? -1
                    : mpz_cmpabs(v.get_mpz_t(), best_val->get_mpz_t());
            if (cmp > 0) continue;
            const std::size_t fill = m.row_nnz(i) + m.col_nnz(j);
            if (cmp == 0 && fill >= best_fill) continue;
            best = {i, j};
            best_val = &v;
            best_fill = fill;
            // fill == 2 is the floor (pivot alone in its row and column);
            // a unit entry there cannot be beaten.
            if (best_fill == 2 &&
                mpz_cmpabs_ui(best_val->get_mpz_t(), 1) == 0) {
                return best;
            }
        }
    }
    return best;
}

}  // namespace

SmithForm smith_normal_form(SparseIntMatrix m, SmithWitnesses* witnesses) {
    WitnessTracker tracker(witnesses ? m.rows() : 0, witnesses ? m.cols() : 0);

    std::vector<mpz_class> diagonal;
    const int bound = std::min(m.rows(), m.cols());

    for (int k = 0; k < bound; ++k) {
        PivotChoice pivot = choose_pivot(m, k);
        if (pivot.row == -1) break;  // active region is zero

        m.swap_rows(k, pivot.row);
        m.swap_cols(k, pivot.col);
        if (witnesses) {
            tracker.swap_rows(k, pivot.row);
            tracker.swap_cols(k, pivot.col);
        }

        // Clear row k and column k; new nonzeros may appear, so iterate
        // until the pivot divides nothing else in its row/column.
        while (true) {
            // Reduce column k below/above the pivot.
            bool touched = false;
            const mpz_class pivot_value = m.at(k, k);
            std::vector<int> col_targets;
            for (int i : m.col_rows(k)) {
                if (i != k && i >= k) col_targets.push_back(i);
            }
            for (int i : col_targets) {
                const mpz_class q = nearest_quotient(m.at(i, k), pivot_value);
                if (q != 0) {
                    m.add_multiple_of_row(i, k, -q);
                    if (witnesses) tracker.add_multiple_of_row(i, k, -q);
                }
                if (m.at(i, k) != 0) {
                    // Remainder strictly smaller than the pivot: promote it.
                    m.swap_rows(k, i);
                    if (witnesses) tracker.swap_rows(k, i);
                    touched = true;
                    break;
                }
            }
            if (touched) continue;

            const mpz_class pivot_value2 = m.at(k, k);
            std::vector<int> row_targets;
            for (const auto& [j, v] : m.row(k)) {
                if (j != k && j >= k) row_targets.push_back(j);
            }
            for (int j : row_targets) {
                const mpz_class q = nearest_quotient(m.at(k, j), pivot_value2);
                if (q != 0) {
                    m.add_multiple_of_col(j, k, -q);
                    if (witnesses) tracker.add_multiple_of_col(j, k, -q);
                }
                if (m.at(k, j) != 0) {
                    m.swap_cols(k, j);
                    if (witnesses) tracker.swap_cols(k, j);
                    touched = true;
                    break;
                }
            }
            if (touched) continue;

            break;  // row k and column k are clear outside the pivot
        }

        mpz_class d = m.at(k, k);
        if (d < 0) {
            m.negate_row(k);
            if (witnesses) tracker.negate_row(k);
            d = -d;
        }
        diagonal.push_back(d);
        m.clear_row(k);  // only the pivot remains; drop it from the workspace
    }

    // Enforce the divisibility chain d_1 | d_2 | ... on the diagonal. For a
    // diagonal matrix this sorts prime exponents: repeatedly replace a bad
    // pair (a, b) by (gcd, lcm). In witness mode the fix is mirrored with
    // elementary operations on the 2x2 block:
    //   diag(a, b) -> diag(g, l) via row1 += row2; then clear with the
    //   Bezout-based column steps below.
    for (std::size_t pass = 0; !diagonal.empty(); ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < diagonal.size(); ++i) {
            mpz_class& a = diagonal[i];
            mpz_class& b = diagonal[i + 1];
            if (b % a == 0) continue;
            changed = true;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       a.get_mpz_t(), b.get_mpz_t());
            const mpz_class l = a / g * b;
            if (witnesses) {
                // On the 2x2 block diag(a, b) at rows/cols (i, i+1):
                //   U' = [[s, t], [-b/g, a/g]], V' = [[1, -t*b/g], [1, s*a/g]]
                // gives U' diag(a,b) V' = diag(g, l); both are unimodular
                // (det U' = (s*a + t*b)/g = 1, det V' = s*a/g + t*b/g = 1).
                const int r0 = static_cast<int>(i);
                const int r1 = static_cast<int>(i) + 1;
                // Row transform U' as row ops on the tracker: build the new
                // rows explicitly since U' is a general unimodular 2x2.
                std::vector<mpz_class> new_u0(tracker.U[r0].size());
                std::vector<mpz_class> new_u1(tracker.U[r0].size());
                for (std::size_t c = 0; c < new_u0.size(); ++c) {
                    new_u0[c] = s * tracker.U[r0][c] + t * tracker.U[r1][c];
                    new_u1[c] =
                        -(b / g) * tracker.U[r0][c] + (a / g) * tracker.U[r1][c];
                }
                tracker.U[r0] = std::move(new_u0);
                tracker.U[r1] = std::move(new_u1);
                for (auto& row : tracker.V) {
                    const mpz_class v0 = row[r0];
                    const mpz_class v1 = row[r1];
                    row[r0] = v0 + v1;
                    row[r1] = -(t * (b / g)) * v0 + (s * (a / g)) * v1;
                }
            }
            a = g;
            b = l;
        }
        if (!changed) break;
        if (pass > diagonal.size() + 2) {
            throw std::logic_error("divisibility sweep failed to converge");
        }
    }

    SmithForm result;
    result.invariant_factors = std::move(diagonal);
    if (witnesses) {
        witnesses->U = std::move(tracker.U);
        witnesses->V = std::move(tracker.V);
    }
    return result;
}

long long rank_mod_p(const SparseIntMatrix& m, long long p) {
    if (p < 2 || p > (1LL << 30)) {
        throw std::invalid_argument("field characteristic out of range");
    }
    for (long long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            throw std::invalid_argument(std::to_string(p) + " is not prime");
        }
    }

    // Dense-row elimination over F_p with sparse row storage.
    std::vector<std::map<int, long long>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (const auto& [j, v] : m.row(i)) {
            const long long r =
                mpz_class(v % static_cast<long>(p)).get_si();  // in (-p, p)
            const long long rr = (r % p + p) % p;
            if (rr != 0) rows[i][j] = rr;
        }
    }

    auto inv_mod = [p](long long a) {
        long long base = a % p, result = 1, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };

    long long rank = 0;
    // Eliminate column by column; pick the sparsest available pivot row.
    std::vector<bool> used(rows.size(), false);
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || !rows[i].contains(col)) continue;
            if (pivot == -1 || rows[i].size() < rows[pivot].size()) {
                pivot = static_cast<int>(i);
            }
        }
        if (pivot == -1) continue;
        used[pivot] = true;
        ++rank;
        const long long scale = inv_mod(rows[pivot].at(col));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || !rows[i].contains(col)) continue;
            const long long factor =
                (p - rows[i].at(col) * scale % p) % p;
            for (const auto& [j, v] : rows[pivot]) {
                long long& entry = rows[i][j];
                entry = (entry + factor * v) % p;
                if (entry == 0) rows[i].erase(j);
            }
        }
    }
    return rank;
}

}  // namespace trisphom
