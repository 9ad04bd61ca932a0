#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace saekit {

// Dense row-major matrix of doubles. All training math runs in 64-bit;
// file formats downcast to f32 at the storage boundary.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix filled(std::size_t rows, std::size_t cols, double value);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }
    std::span<const double> row_span(std::size_t r) const {
        return {row(r), cols_};
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B with 64-bit accumulation. Throws DimensionError naming both
// shapes when a.cols != b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

// C = A * B^T. Both operand rows are contiguous, so this is the fast path
// for z = x * W_enc^T and x_hat = f * W_dec^T.
Matrix matmul_transb(const Matrix& a, const Matrix& b);

// C = A^T * B. Used for gradient accumulation (dz^T * x etc.).
Matrix matmul_transa(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

// Entry i = Euclidean norm of column i.
std::vector<double> column_norms(const Matrix& m);

// u.v / (|u||v|); returns 0 if either norm < 1e-12 so dead decoder
// columns cannot poison MMCS averages. Throws DimensionError on length
// mismatch.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

// Throws NumericError naming `name` if any entry is NaN or Inf.
void check_finite(const Matrix& m, const char* name);

} // namespace saekit
