#include "zerodim/matrix.hpp"

#include <algorithm>

namespace zerodim {

Matrix Matrix::identity(int n, const Field& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_columns(int rows, const Field& f,
                            const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()), f);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw validation_error("column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][r];
    }
    return m;
}

std::vector<Scalar> Matrix::column(int c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<Scalar> Matrix::row(int r) const {
    std::vector<Scalar> v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

void Matrix::set_column(int c, const std::vector<Scalar>& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_, fld_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw validation_error("matrix product shape mismatch");
    Matrix m(rows_, o.cols_, fld_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const Scalar& b = o.at(k, c);
                if (!b.is_zero()) m.at(r, c) += a * b;
            }
        }
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw validation_error("matrix apply shape mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(fld_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Matrix Matrix::augmented(const Matrix& o) const {
    if (rows_ != o.rows_) throw validation_error("augment row mismatch");
    Matrix m(rows_, cols_ + o.cols_, fld_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
}

namespace {

// Pivot choice only affects intermediate entry size, not correctness; units
// keep rational arithmetic from ballooning.
int pick_pivot(const Matrix& m, int from_row, int col) {
    int first = -1;
    for (int r = from_row; r < m.rows(); ++r) {
        const Scalar& v = m.at(r, col);
        if (v.is_zero()) continue;
        if (first < 0) first = r;
        if (v.is_one() || (-v).is_one()) return r;
    }
    return first;
}

void eliminate(Matrix& m, std::vector<int>& pivot_cols, int limit_cols) {
    int lead = 0;
    for (int col = 0; col < limit_cols && lead < m.rows(); ++col) {
        int p = pick_pivot(m, lead, col);
        if (p < 0) continue;
        if (p != lead)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(lead, c));
        Scalar inv = m.at(lead, col).inverse();
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(lead, c).is_zero()) m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            const Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < m.cols(); ++c)
                if (!m.at(lead, c).is_zero()) m.at(r, c) -= f * m.at(lead, c);
        }
        pivot_cols.push_back(col);
        ++lead;
    }
}

} // namespace

Echelon Matrix::rref() const {
    Echelon e{*this, {}};
    eliminate(e.reduced, e.pivot_cols, cols_);
    return e;
}

int Matrix::rank() const { return static_cast<int>(rref().pivot_cols.size()); }

bool Matrix::is_zero() const {
    for (const Scalar& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::kernel() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    int nullity = cols_ - static_cast<int>(e.pivot_cols.size());
    Matrix k(cols_, nullity, fld_);
    int out = 0;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        k.at(free, out) = Scalar::one(fld_);
        for (std::size_t prow = 0; prow < e.pivot_cols.size(); ++prow)
            k.at(e.pivot_cols[prow], out) = -e.reduced.at(static_cast<int>(prow), free);
        ++out;
    }
    return k;
}

Matrix Matrix::left_kernel() const { return transposed().kernel().transposed(); }

LinearSolver::LinearSolver(Matrix A)
    : r_(A.rows(), 0, A.field()), t_(0, 0, A.field()), rank_(0), cols_(A.cols()) {
    Matrix aug = A.augmented(Matrix::identity(A.rows(), A.field()));
    std::vector<int> pivots;
    eliminate(aug, pivots, A.cols());
    pivots_ = std::move(pivots);
    rank_ = static_cast<int>(pivots_.size());
    Matrix r(A.rows(), A.cols(), A.field());
    Matrix t(A.rows(), A.rows(), A.field());
    for (int i = 0; i < A.rows(); ++i) {
        for (int c = 0; c < A.cols(); ++c) r.at(i, c) = aug.at(i, c);
        for (int c = 0; c < A.rows(); ++c) t.at(i, c) = aug.at(i, A.cols() + c);
    }
    r_ = std::move(r);
    t_ = std::move(t);
}

bool LinearSolver::consistent(const std::vector<Scalar>& b) const {
    std::vector<Scalar> c = t_.apply(b);
    for (int r = rank_; r < static_cast<int>(c.size()); ++r)
        if (!c[r].is_zero()) return false;
    return true;
}

std::optional<std::vector<Scalar>> LinearSolver::solve(const std::vector<Scalar>& b) const {
    std::vector<Scalar> c = t_.apply(b);
    for (int r = rank_; r < static_cast<int>(c.size()); ++r)
        if (!c[r].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols_, Scalar::zero(r_.field()));
    for (int i = 0; i < rank_; ++i) x[pivots_[i]] = c[i]; // free coordinates stay zero
    return x;
}

Matrix column_span_sum(const Matrix& a, const Matrix& b) {
    Matrix joint = a.augmented(b);
    Echelon e = joint.transposed().rref();
    Matrix basis(a.rows(), static_cast<int>(e.pivot_cols.size()), a.field());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        for (int r = 0; r < a.rows(); ++r)
            basis.at(r, static_cast<int>(i)) = e.reduced.at(static_cast<int>(i), r);
    return basis;
}

Matrix column_span_intersection(const Matrix& a, const Matrix& b) {
    // kernel of [a | -b]; the a-part of each kernel vector maps into the intersection
    Matrix neg = b;
    for (int r = 0; r < neg.rows(); ++r)
        for (int c = 0; c < neg.cols(); ++c) neg.at(r, c) = -neg.at(r, c);
    Matrix k = a.augmented(neg).kernel();
    Matrix raw(a.rows(), k.cols(), a.field());
    for (int j = 0; j < k.cols(); ++j) {
        std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
        for (int i = 0; i < a.cols(); ++i) x[i] = k.at(i, j);
        raw.set_column(j, a.apply(x));
    }
    // prune dependent columns
    Echelon e = raw.transposed().rref();
    Matrix basis(a.rows(), static_cast<int>(e.pivot_cols.size()), a.field());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        for (int r = 0; r < a.rows(); ++r)
            basis.at(r, static_cast<int>(i)) = e.reduced.at(static_cast<int>(i), r);
    return basis;
}

bool column_spans_equal(const Matrix& a, const Matrix& b) {
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return false;
    return a.augmented(b).rank() == ra;
}

} // namespace zerodim
