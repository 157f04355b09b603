#pragma once

#include <vector>

#include "bezsub/error.hpp"
#include "bezsub/polynomial.hpp"
#include "bezsub/rational.hpp"

namespace bezsub {

/// Dense row-major matrix. Default-constructs entries; fully populated.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw Error(ErrorCode::shape, "negative matrix dimension");
        data_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    }
    Matrix(int rows, int cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
            throw Error(ErrorCode::shape, "matrix data size mismatch");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& at(int r, int c) { return data_[index(r, c)]; }
    const T& at(int r, int c) const { return data_[index(r, c)]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    /// Rows [0, count) of this matrix.
    Matrix top_rows(int count) const {
        if (count < 0 || count > rows_) throw Error(ErrorCode::range, "row count out of range");
        Matrix out(count, cols_);
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        return out;
    }

private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw Error(ErrorCode::range, "matrix index out of range");
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

/// Vertical concatenation; column counts must agree.
template <typename T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
    if (top.cols() != bottom.cols())
        throw Error(ErrorCode::shape, "vstack column mismatch");
    Matrix<T> out(top.rows() + bottom.rows(), top.cols());
    for (int r = 0; r < top.rows(); ++r)
        for (int c = 0; c < top.cols(); ++c) out.at(r, c) = top.at(r, c);
    for (int r = 0; r < bottom.rows(); ++r)
        for (int c = 0; c < bottom.cols(); ++c) out.at(top.rows() + r, c) = bottom.at(r, c);
    return out;
}

/// Promotes rational entries to constant polynomials.
PolyMatrix to_poly_matrix(const RationalMatrix& m);

}  // namespace bezsub
