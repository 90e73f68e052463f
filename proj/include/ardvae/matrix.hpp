#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ardvae {

using Vec = std::vector<double>;

// Dense row-major matrix of doubles. All core arithmetic runs in 64-bit;
// reductions use a fixed summation order so repeated runs are bitwise equal.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, Vec data);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    Vec& data() { return data_; }
    const Vec& data() const { return data_; }

    Vec row(std::size_t r) const;
    void set_row(std::size_t r, const Vec& v);

    // Throws RuntimeError naming `context` if any entry is NaN/Inf.
    void assert_finite(const std::string& context) const;

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

// a (r x k) * b (k x c). Dimension mismatch throws with both shapes spelled out.
Matrix matmul(const Matrix& a, const Matrix& b);
// a * b^T and a^T * b without materializing the transpose.
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);

// Adds `v` to every row of `m` in place.
void add_row_vector(Matrix& m, const Vec& v);
// Sum of the rows of `m`, as a vector of length m.cols().
Vec column_sums(const Matrix& m);

double dot(const Vec& a, const Vec& b);
double l2_norm(const Vec& v);
void axpy(double a, const Vec& x, Vec& y);

} // namespace ardvae
