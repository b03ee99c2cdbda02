#ifndef ZERODIM_MATRIX_HPP
#define ZERODIM_MATRIX_HPP

#include <optional>
#include <vector>

#include "zerodim/field.hpp"

namespace zerodim {

struct Echelon;

// Dense matrix over an exact field; the workhorse behind every degree-wise
// computation (Hilbert functions, colons, germ matrices, annihilators).
class Matrix {
public:
    Matrix(int rows, int cols, const Field& f)
        : rows_(rows), cols_(cols), fld_(f),
          a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(int n, const Field& f);
    static Matrix from_columns(int rows, const Field& f,
                               const std::vector<std::vector<Scalar>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return fld_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Scalar> column(int c) const;
    std::vector<Scalar> row(int r) const;
    void set_column(int c, const std::vector<Scalar>& v);

    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    // Append the columns of `o` on the right (row counts must match).
    Matrix augmented(const Matrix& o) const;

    Echelon rref() const;

    int rank() const;
    bool is_zero() const;

    // Columns form a basis of the right null space; empty (0 columns) when
    // the kernel is trivial.
    Matrix kernel() const;
    // Rows L with L * A = 0 spanning the left null space.
    Matrix left_kernel() const;

private:
    int rows_, cols_;
    Field fld_;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix reduced;              // row-reduced echelon form
    std::vector<int> pivot_cols; // one entry per nonzero row
};

// One-time elimination of A that can then answer many "solve A x = b" and
// membership queries against the same column space.
class LinearSolver {
public:
    explicit LinearSolver(Matrix A);

    int rank() const { return rank_; }
    bool consistent(const std::vector<Scalar>& b) const;
    // A particular solution of A x = b, if one exists.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

private:
    Matrix r_;                 // rref of the input
    Matrix t_;                 // row transform: t_ * A = r_
    std::vector<int> pivots_;
    int rank_;
    int cols_;
};

// Basis of the sum/intersection of two column spans over the same space.
Matrix column_span_sum(const Matrix& a, const Matrix& b);
Matrix column_span_intersection(const Matrix& a, const Matrix& b);
bool column_spans_equal(const Matrix& a, const Matrix& b);

} // namespace zerodim

#endif
