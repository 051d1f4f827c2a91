#ifndef TILECOH_INTMATRIX_HPP
#define TILECOH_INTMATRIX_HPP

#include <optional>
#include <vector>

#include "tilecoh/numbers.hpp"

namespace tilecoh {

using RatVector = std::vector<Rat>;

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    IntMatrix pow(int n) const;
    IntMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool all_positive() const;
    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);
    static RatMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;
    bool operator==(const RatMatrix& o) const = default;
    RatVector apply(const RatVector& v) const;
    RatMatrix transpose() const;
    bool is_zero() const;

    int rank() const;
    // Unique solution of (*this) x = b; nullopt when the system is singular
    // or inconsistent.
    std::optional<RatVector> solve(const RatVector& b) const;
    std::optional<RatMatrix> inverse() const;
    // Basis of the (right) null space, one column per basis vector.
    RatMatrix null_space() const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

} // namespace tilecoh

#endif
