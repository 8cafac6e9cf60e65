#ifndef TRISPHOM_SPARSE_MATRIX_HPP
#define TRISPHOM_SPARSE_MATRIX_HPP

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

namespace trisphom {

/// Sparse integer matrix with arbitrary-precision entries. Values live in
/// row maps (col -> value); a column index (col -> set of rows) mirrors the
/// structure for column-directed operations. Only nonzero entries are
/// stored.
class SparseIntMatrix {
public:
    SparseIntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Zero when the entry is absent.
    const mpz_class& at(int i, int j) const;
    void set(int i, int j, const mpz_class& v);
    void add(int i, int j, const mpz_class& v);

    const std::map<int, mpz_class>& row(int i) const { return row_[i]; }
    const std::set<int>& col_rows(int j) const { return col_rows_[j]; }
    std::size_t row_nnz(int i) const { return row_[i].size(); }
    std::size_t col_nnz(int j) const { return col_rows_[j].size(); }
    std::size_t nonzero_count() const { return nnz_; }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void negate_row(int i);

    /// row dst += q * row src (dst != src).
    void add_multiple_of_row(int dst, int src, const mpz_class& q);
    /// col dst += q * col src (dst != src).
    void add_multiple_of_col(int dst, int src, const mpz_class& q);

    void clear_row(int i);
    void clear_col(int j);

    bool operator==(const SparseIntMatrix& other) const;

private:
    int rows_;
    int cols_;
    std::size_t nnz_ = 0;
    std::vector<std::map<int, mpz_class>> row_;
    std::vector<std::set<int>> col_rows_;
};

}  // namespace trisphom

#endif
