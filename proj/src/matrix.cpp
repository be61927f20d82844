#include "pce/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pce {

std::string Matrix::shape_str() const {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

bool Matrix::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw std::runtime_error(std::string(op) + ": shape mismatch " + a.shape_str() +
                                 " vs " + b.shape_str());
    }
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) {
        throw std::runtime_error("matmul: incompatible shapes " + a.shape_str() + " x " +
                                 b.shape_str());
    }
    Matrix out(a.rows, b.cols, 0.0);
    // ikj order: per output element the k-sum still runs ascending, so the
    // result is bit-identical to the jik naive loop.
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row_ptr(i);
        double* orow = out.row_ptr(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols; ++j) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            out(j, i) = m(i, j);
        }
    }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] + b.data[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] - b.data[i];
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "hadamard");
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] * b.data[i];
    return out;
}

Matrix scale(const Matrix& a, double s) {
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] * s;
    return out;
}

void add_inplace(Matrix& dst, const Matrix& src) {
    require_same_shape(dst, src, "add_inplace");
    for (std::size_t i = 0; i < dst.size(); ++i) dst.data[i] += src.data[i];
}

void axpy_inplace(Matrix& dst, double a, const Matrix& x) {
    require_same_shape(dst, x, "axpy_inplace");
    for (std::size_t i = 0; i < dst.size(); ++i) dst.data[i] += a * x.data[i];
}

Matrix add_row_broadcast(const Matrix& a, const Matrix& row) {
    if (row.rows != 1 || row.cols != a.cols) {
        throw std::runtime_error("add_row_broadcast: row " + row.shape_str() +
                                 " does not broadcast over " + a.shape_str());
    }
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            out(i, j) = a(i, j) + row(0, j);
        }
    }
    return out;
}

Matrix col_sums(const Matrix& a) {
    Matrix out(1, a.cols, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            out(0, j) += a(i, j);
        }
    }
    return out;
}

Matrix concat_cols(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) {
        throw std::runtime_error("concat_cols: row mismatch " + a.shape_str() + " vs " +
                                 b.shape_str());
    }
    Matrix out(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols, out.row_ptr(i));
        std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols, out.row_ptr(i) + a.cols);
    }
    return out;
}

Matrix rows_subset(const Matrix& m, std::span<const int> idx) {
    Matrix out(idx.size(), m.cols);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        int r = idx[i];
        if (r < 0 || static_cast<std::size_t>(r) >= m.rows) {
            throw std::runtime_error("rows_subset: index " + std::to_string(r) +
                                     " out of range for " + m.shape_str());
        }
        std::copy(m.row_ptr(r), m.row_ptr(r) + m.cols, out.row_ptr(i));
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.cols != b.cols) {
        throw std::runtime_error("vstack: column mismatch " + a.shape_str() + " vs " +
                                 b.shape_str());
    }
    Matrix out(a.rows + b.rows, a.cols);
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(), out.data.begin() + a.size());
    return out;
}

Matrix slice_cols(const Matrix& m, std::size_t begin, std::size_t end) {
    if (begin > end || end > m.cols) {
        throw std::runtime_error("slice_cols: bad range [" + std::to_string(begin) + "," +
                                 std::to_string(end) + ") for " + m.shape_str());
    }
    Matrix out(m.rows, end - begin);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::copy(m.row_ptr(i) + begin, m.row_ptr(i) + end, out.row_ptr(i));
    }
    return out;
}

Matrix slice_rows(const Matrix& m, std::size_t begin, std::size_t end) {
    if (begin > end || end > m.rows) {
        throw std::runtime_error("slice_rows: bad range [" + std::to_string(begin) + "," +
                                 std::to_string(end) + ") for " + m.shape_str());
    }
    Matrix out(end - begin, m.cols);
    std::copy(m.row_ptr(begin), m.row_ptr(begin) + out.size(), out.data.begin());
    return out;
}

double row_dot(const Matrix& a, std::size_t ra, const Matrix& b, std::size_t rb) {
    if (a.cols != b.cols) {
        throw std::runtime_error("row_dot: width mismatch " + a.shape_str() + " vs " +
                                 b.shape_str());
    }
    const double* pa = a.row_ptr(ra);
    const double* pb = b.row_ptr(rb);
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) s += pa[j] * pb[j];
    return s;
}

double row_norm(const Matrix& m, std::size_t r) {
    return std::sqrt(row_dot(m, r, m, r));
}

Matrix leaky_relu(const Matrix& x, double slope) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.size(); ++i) {
        double v = x.data[i];
        out.data[i] = v > 0.0 ? v : slope * v;
    }
    return out;
}

Matrix leaky_relu_mask(const Matrix& x, double slope) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.data[i] = x.data[i] > 0.0 ? 1.0 : slope;
    }
    return out;
}

Matrix leaky_relu_backward(const Matrix& x, const Matrix& grad_out, double slope) {
    require_same_shape(x, grad_out, "leaky_relu_backward");
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.data[i] = grad_out.data[i] * (x.data[i] > 0.0 ? 1.0 : slope);
    }
    return out;
}

Matrix l2_normalize_rows(const Matrix& x) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        double n = row_norm(x, i);
        if (n <= 1e-12) {
            throw std::runtime_error("l2_normalize_rows: degenerate row " +
                                     std::to_string(i) + " with norm " + std::to_string(n));
        }
        const double* src = x.row_ptr(i);
        double* dst = out.row_ptr(i);
        for (std::size_t j = 0; j < x.cols; ++j) dst[j] = src[j] / n;
    }
    return out;
}

Matrix l2_normalize_rows_backward(const Matrix& x, const Matrix& normalized,
                                  const Matrix& grad_out) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        double n = row_norm(x, i);
        const double* y = normalized.row_ptr(i);
        const double* g = grad_out.row_ptr(i);
        double yg = 0.0;
        for (std::size_t j = 0; j < x.cols; ++j) yg += y[j] * g[j];
        double* dst = out.row_ptr(i);
        for (std::size_t j = 0; j < x.cols; ++j) dst[j] = (g[j] - y[j] * yg) / n;
    }
    return out;
}

double logsumexp_stable(std::span<const double> terms) {
    if (terms.empty()) {
        throw std::runtime_error("logsumexp_stable: empty input");
    }
    double mx = *std::max_element(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - mx);
    return mx + std::log(acc);
}

}  // namespace pce
