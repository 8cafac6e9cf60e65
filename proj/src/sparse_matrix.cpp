#include "trisphom/sparse_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace trisphom {

namespace {
const mpz_class kZero = 0;
}

SparseIntMatrix::SparseIntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), row_(rows), col_rows_(cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    }
}

const mpz_class& SparseIntMatrix::at(int i, int j) const {
    const auto it = row_[i].find(j);
    return it == row_[i].end() ? kZero : it->second;
}

void SparseIntMatrix::set(int i, int j, const mpz_class& v) {
    auto it = row_[i].find(j);
    if (v == 0) {
        if (it != row_[i].end()) {
            row_[i].erase(it);
            col_rows_[j].erase(i);
            --nnz_;
        }
        return;
    }
    if (it == row_[i].end()) {
        row_[i].emplace(j, v);
        col_rows_[j].insert(i);
        ++nnz_;
    } else {
        it->second = v;
    }
}

void SparseIntMatrix::add(int i, int j, const mpz_class& v) {
    if (v == 0) return;
    auto it = row_[i].find(j);
    if (it == row_[i].end()) {
        row_[i].emplace(j, v);
        col_rows_[j].insert(i);
        ++nnz_;
        return;
    }
    it->second += v;
    if (it->second == 0) {
        row_[i].erase(it);
        col_rows_[j].erase(i);
        --nnz_;
    }
}

void SparseIntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (const auto& [j, v] : row_[a]) {
        if (!row_[b].contains(j)) {
            col_rows_[j].erase(a);
            col_rows_[j].insert(b);
        }
    }
    for (const auto& [j, v] : row_[b]) {
        if (!row_[a].contains(j)) {
            col_rows_[j].erase(b);
            col_rows_[j].insert(a);
        }
    }
    std::swap(row_[a], row_[b]);
}

void SparseIntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    std::set<int> touched = col_rows_[a];
    touched.insert(col_rows_[b].begin(), col_rows_[b].end());
    for (int i : touched) {
        const auto ita = row_[i].find(a);
        const auto itb = row_[i].find(b);
        mpz_class va = ita != row_[i].end() ? ita->second : kZero;
        mpz_class vb = itb != row_[i].end() ? itb->second : kZero;
        if (ita != row_[i].end()) row_[i].erase(a);
        if (itb != row_[i].end()) row_[i].erase(b);
        if (vb != 0) row_[i].emplace(a, std::move(vb));
        if (va != 0) row_[i].emplace(b, std::move(va));
    }
    std::swap(col_rows_[a], col_rows_[b]);
}

void SparseIntMatrix::negate_row(int i) {
    for (auto& [j, v] : row_[i]) v = -v;
}

void SparseIntMatrix::add_multiple_of_row(int dst, int src, const mpz_class& q) {
    if (dst == src) {
        throw std::invalid_argument("row axpy requires distinct rows");
    }
    if (q == 0) return;
    for (const auto& [j, v] : row_[src]) {
        add(dst, j, q * v);
    }
}

void SparseIntMatrix::add_multiple_of_col(int dst, int src, const mpz_class& q) {
    if (dst == src) {
        throw std::invalid_argument("column axpy requires distinct columns");
    }
    if (q == 0) return;
    // Snapshot: add() inserts into col_rows_[dst] and may erase from row
    // maps; keep the iteration source fixed.
    const std::set<int> src_rows = col_rows_[src];
    for (int i : src_rows) {
        add(i, dst, q * row_[i].at(src));
    }
}

void SparseIntMatrix::clear_row(int i) {
    for (const auto& [j, v] : row_[i]) {
        col_rows_[j].erase(i);
    }
    nnz_ -= row_[i].size();
    row_[i].clear();
}

void SparseIntMatrix::clear_col(int j) {
    for (int i : col_rows_[j]) {
        row_[i].erase(j);
    }
    nnz_ -= col_rows_[j].size();
    col_rows_[j].clear();
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
}

}  // namespace trisphom
