#include "tilecoh/intmatrix.hpp"

namespace tilecoh {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw error("IntMatrix: dimensions must be >= 1");
    e_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw error("IntMatrix: dimensions must be >= 1");
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw error("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) throw error("IntMatrix: no rows");
    int cols = static_cast<int>(rows[0].size());
    std::vector<Int> e;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols) throw error("IntMatrix: ragged rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return IntMatrix(static_cast<int>(rows.size()), cols, std::move(e));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw error("IntMatrix: shape mismatch in multiply");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("IntMatrix: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("IntMatrix: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

IntMatrix IntMatrix::pow(int n) const {
    if (!is_square()) throw error("IntMatrix::pow: non-square matrix");
    if (n < 0) throw error("IntMatrix::pow: negative exponent");
    IntMatrix r = identity(rows_), b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::all_positive() const {
    for (const auto& x : e_)
        if (x <= 0) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw error("RatMatrix: dimensions must be >= 1");
    e_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw error("RatMatrix: shape mismatch in multiply");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("RatMatrix: shape mismatch");
    RatMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("RatMatrix: shape mismatch");
    RatMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
    RatMatrix r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("RatMatrix::apply: size mismatch");
    RatVector r(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

namespace {

// Row-reduce in place; returns pivot columns. aug marks how many trailing
// columns are augmentation (excluded from pivot search).
std::vector<int> rref(RatMatrix& m, int aug = 0) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() - aug && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int RatMatrix::rank() const {
    RatMatrix m = *this;
    return static_cast<int>(rref(m).size());
}

std::optional<RatVector> RatMatrix::solve(const RatVector& b) const {
    if (static_cast<int>(b.size()) != rows_) throw error("RatMatrix::solve: size mismatch");
    RatMatrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = b[static_cast<size_t>(i)];
    }
    auto pivots = rref(m, 1);
    if (static_cast<int>(pivots.size()) != cols_) return std::nullopt;
    for (int i = static_cast<int>(pivots.size()); i < rows_; ++i)
        if (m.at(i, cols_) != 0) return std::nullopt;
    RatVector x(static_cast<size_t>(cols_));
    for (int i = 0; i < cols_; ++i) x[static_cast<size_t>(i)] = m.at(i, cols_);
    return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (!rows_ || rows_ != cols_) throw error("RatMatrix::inverse: non-square");
    RatMatrix m(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_ + i) = 1;
    }
    auto pivots = rref(m, cols_);
    if (static_cast<int>(pivots.size()) != cols_) return std::nullopt;
    RatMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = m.at(i, cols_ + j);
    return r;
}

RatMatrix RatMatrix::null_space() const {
    RatMatrix m = *this;
    auto pivots = rref(m);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < cols_; ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    if (free_cols.empty()) return RatMatrix(cols_, 1);  // zero column: trivial kernel
    RatMatrix basis(cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        basis.at(free_cols[k], static_cast<int>(k)) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(pivots[pi], static_cast<int>(k)) = -m.at(static_cast<int>(pi), free_cols[k]);
    }
    return basis;
}

} // namespace tilecoh
