#include "cfa/kernels.hpp"

#include <cstring>

namespace cfa {

namespace serial {

void matmul(std::size_t m, std::size_t k, std::size_t n,
            const double* a, const double* b, double* c) {
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c + i * n;
        std::memset(crow, 0, n * sizeof(double));
        for (std::size_t p = 0; p < k; ++p) {
            const double av = a[i * k + p];
            const double* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void matmul_nt(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c) {
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const double* brow = b + j * k;
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            c[i * n + j] = acc;
        }
    }
}

void matmul_tn(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c) {
    for (std::size_t i = 0; i < k; ++i) {
        double* crow = c + i * n;
        std::memset(crow, 0, n * sizeof(double));
        for (std::size_t r = 0; r < m; ++r) {
            const double av = a[r * k + i];
            const double* brow = b + r * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

}  // namespace serial

namespace par {

// Below this many multiply-adds the OpenMP fork costs more than it saves.
static constexpr std::size_t kParallelThreshold = 1u << 15;

void matmul(std::size_t m, std::size_t k, std::size_t n,
            const double* a, const double* b, double* c) {
    if (m * k * n < kParallelThreshold || m == 1) {
        serial::matmul(m, k, n, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        double* crow = c + i * n;
        std::memset(crow, 0, n * sizeof(double));
        for (std::size_t p = 0; p < k; ++p) {
            const double av = a[i * k + p];
            const double* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void matmul_nt(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c) {
    if (m * k * n < kParallelThreshold || m == 1) {
        serial::matmul_nt(m, k, n, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const double* arow = a + i * k;
        for (std::size_t j = 0; j < n; ++j) {
            const double* brow = b + j * k;
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            c[i * n + j] = acc;
        }
    }
}

void matmul_tn(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c) {
    if (m * k * n < kParallelThreshold || k == 1) {
        serial::matmul_tn(m, k, n, a, b, c);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(k); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        double* crow = c + i * n;
        std::memset(crow, 0, n * sizeof(double));
        for (std::size_t r = 0; r < m; ++r) {
            const double av = a[r * k + i];
            const double* brow = b + r * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

}  // namespace par

}  // namespace cfa
