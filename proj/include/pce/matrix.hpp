#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pce {

// Dense row-major matrix of 64-bit reals. The universal carrier for
// features, parameters, activations and gradients.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    double* row_ptr(std::size_t r) { return data.data() + r * cols; }
    const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }

    std::size_t size() const { return rows * cols; }
    bool empty() const { return rows == 0 || cols == 0; }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    std::string shape_str() const;

    void fill(double v) { data.assign(rows * cols, v); }
    bool all_finite() const;
};

// Summation order per output element is k-ascending, so results are
// bit-identical to a naive triple loop.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
void add_inplace(Matrix& dst, const Matrix& src);
void axpy_inplace(Matrix& dst, double a, const Matrix& x);

// Broadcast a 1 x cols row vector over every row.
Matrix add_row_broadcast(const Matrix& a, const Matrix& row);
Matrix col_sums(const Matrix& a);

Matrix concat_cols(const Matrix& a, const Matrix& b);
Matrix rows_subset(const Matrix& m, std::span<const int> idx);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix slice_cols(const Matrix& m, std::size_t begin, std::size_t end);
Matrix slice_rows(const Matrix& m, std::size_t begin, std::size_t end);

double row_dot(const Matrix& a, std::size_t ra, const Matrix& b, std::size_t rb);
double row_norm(const Matrix& m, std::size_t r);

// LeakyReLU: max(x, slope*x). Tie at x == 0 takes the slope branch.
Matrix leaky_relu(const Matrix& x, double slope);
Matrix leaky_relu_backward(const Matrix& x, const Matrix& grad_out, double slope);
// Derivative mask alone: 1 where x > 0, slope where x <= 0.
Matrix leaky_relu_mask(const Matrix& x, double slope);

// Rows scaled to unit Euclidean norm. Rows with norm <= 1e-12 are rejected.
Matrix l2_normalize_rows(const Matrix& x);
// Full per-row Jacobian (I - y y^T)/||x||; `normalized` is the forward output.
Matrix l2_normalize_rows_backward(const Matrix& x, const Matrix& normalized,
                                  const Matrix& grad_out);

// log(sum_i exp(t_i)) with max-subtraction.
double logsumexp_stable(std::span<const double> terms);

}  // namespace pce
