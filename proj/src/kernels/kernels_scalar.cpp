#include "wavelab/kernels.hpp"

namespace wavelab::kernels {

namespace {

double dot_scalar(const double *a, const double *b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i] * b[i];
    return s;
}

double dot3_scalar(const double *a, const double *b, const double *c, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i] * b[i] * c[i];
    return s;
}

void axpy_scalar(double alpha, const double *x, double *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += alpha * x[i];
}

void mul_scalar(const double *a, const double *b, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] * b[i];
}

void gemv_scalar(const double *a, const double *x, double *y, std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r)
        y[r] = dot_scalar(a + r * cols, x, cols);
}

void fd_step_scalar(const double *u, const double *up, const double *v, const double *f,
                    double inv_dx2, double dt2, double *out, std::size_t n) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double lap = (u[i - 1] - 2.0 * u[i] + u[i + 1]) * inv_dx2;
        double src = f ? f[i] : 0.0;
        out[i] = 2.0 * u[i] - up[i] + dt2 * (lap - v[i] * u[i] + src);
    }
}

} // namespace

const KernelTable &scalar_table() {
    static const KernelTable table = {dot_scalar, dot3_scalar, axpy_scalar,
                                      mul_scalar, gemv_scalar, fd_step_scalar, "scalar"};
    return table;
}

} // namespace wavelab::kernels
