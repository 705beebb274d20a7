#if defined(__x86_64__)

#include "wavelab/kernels.hpp"

#include <immintrin.h>

namespace wavelab::kernels {

namespace {

__attribute__((target("avx2,fma"))) double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

__attribute__((target("avx2,fma"))) double dot_avx2(const double *a, const double *b,
                                                    std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        s += a[i] * b[i];
    return s;
}

__attribute__((target("avx2,fma"))) double dot3_avx2(const double *a, const double *b,
                                                     const double *c, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d t0 = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        __m256d t1 = _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
        acc0 = _mm256_fmadd_pd(t0, _mm256_loadu_pd(c + i), acc0);
        acc1 = _mm256_fmadd_pd(t1, _mm256_loadu_pd(c + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc0 = _mm256_fmadd_pd(t, _mm256_loadu_pd(c + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        s += a[i] * b[i] * c[i];
    return s;
}

__attribute__((target("avx2,fma"))) void axpy_avx2(double alpha, const double *x, double *y,
                                                   std::size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

__attribute__((target("avx2,fma"))) void mul_avx2(const double *a, const double *b, double *out,
                                                  std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i)
        out[i] = a[i] * b[i];
}

__attribute__((target("avx2,fma"))) void gemv_avx2(const double *a, const double *x, double *y,
                                                   std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r)
        y[r] = dot_avx2(a + r * cols, x, cols);
}

__attribute__((target("avx2,fma"))) void fd_step_avx2(const double *u, const double *up,
                                                      const double *v, const double *f,
                                                      double inv_dx2, double dt2, double *out,
                                                      std::size_t n) {
    if (n < 3)
        return;
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d vdx = _mm256_set1_pd(inv_dx2);
    const __m256d vdt = _mm256_set1_pd(dt2);
    std::size_t i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        __m256d uc = _mm256_loadu_pd(u + i);
        __m256d lap = _mm256_add_pd(_mm256_loadu_pd(u + i - 1), _mm256_loadu_pd(u + i + 1));
        lap = _mm256_mul_pd(_mm256_fnmadd_pd(two, uc, lap), vdx);
        __m256d rhs = _mm256_fnmadd_pd(_mm256_loadu_pd(v + i), uc, lap);
        if (f)
            rhs = _mm256_add_pd(rhs, _mm256_loadu_pd(f + i));
        __m256d res = _mm256_fmsub_pd(two, uc, _mm256_loadu_pd(up + i));
        res = _mm256_fmadd_pd(vdt, rhs, res);
        _mm256_storeu_pd(out + i, res);
    }
    for (; i + 1 < n; ++i) {
        double lap = (u[i - 1] - 2.0 * u[i] + u[i + 1]) * inv_dx2;
        double src = f ? f[i] : 0.0;
        out[i] = 2.0 * u[i] - up[i] + dt2 * (lap - v[i] * u[i] + src);
    }
}

} // namespace

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelTable &avx2_table() {
    static const KernelTable table = {dot_avx2, dot3_avx2, axpy_avx2,
                                      mul_avx2, gemv_avx2, fd_step_avx2, "avx2"};
    return table;
}

} // namespace wavelab::kernels

#endif // __x86_64__
