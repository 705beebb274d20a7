#pragma once

#include <cstddef>
#include <string>

// Dense double-precision inner loops shared by the spectral and finite
// difference paths. Every kernel has a scalar reference implementation and,
// on x86-64, an AVX2+FMA variant. The active table is chosen once at load
// time from CPU features; WAVELAB_KERNELS=scalar|avx2 overrides the choice.
// SIMD variants may reassociate sums, so they match the scalar reference to
// roundoff, not bitwise; a fixed table keeps any single run deterministic.

namespace wavelab::kernels {

struct KernelTable {
    // sum_i a[i] * b[i]
    double (*dot)(const double *a, const double *b, std::size_t n);
    // sum_i a[i] * b[i] * c[i]   (quadrature inner products)
    double (*dot3)(const double *a, const double *b, const double *c, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double *x, double *y, std::size_t n);
    // out[i] = a[i] * b[i]
    void (*mul)(const double *a, const double *b, double *out, std::size_t n);
    // y = A x for row-major rows x cols
    void (*gemv)(const double *a, const double *x, double *y, std::size_t rows, std::size_t cols);
    // interior leapfrog update on nodes 1..n-2 of arrays of length n:
    // out[i] = 2 u[i] - up[i] + dt2 * ((u[i-1] - 2 u[i] + u[i+1]) * inv_dx2 - v[i] u[i] + f[i])
    // f may be null (treated as zero).
    void (*fd_step)(const double *u, const double *up, const double *v, const double *f,
                    double inv_dx2, double dt2, double *out, std::size_t n);
    const char *name;
};

const KernelTable &scalar_table();
#if defined(__x86_64__)
const KernelTable &avx2_table();
bool avx2_supported();
#endif

/// Table selected at load time (CPU features + WAVELAB_KERNELS override).
const KernelTable &active();

/// Name of the active table ("scalar" or "avx2").
std::string active_name();

inline double dot(const double *a, const double *b, std::size_t n) {
    return active().dot(a, b, n);
}
inline double dot3(const double *a, const double *b, const double *c, std::size_t n) {
    return active().dot3(a, b, c, n);
}
inline void axpy(double alpha, const double *x, double *y, std::size_t n) {
    active().axpy(alpha, x, y, n);
}
inline void mul(const double *a, const double *b, double *out, std::size_t n) {
    active().mul(a, b, out, n);
}
inline void gemv(const double *a, const double *x, double *y, std::size_t rows, std::size_t cols) {
    active().gemv(a, x, y, rows, cols);
}
inline void fd_step(const double *u, const double *up, const double *v, const double *f,
                    double inv_dx2, double dt2, double *out, std::size_t n) {
    active().fd_step(u, up, v, f, inv_dx2, dt2, out, n);
}

} // namespace wavelab::kernels
