#pragma once

#include <cstddef>

namespace cfa {

// Low-level matrix kernels. cfa::serial holds plain reference loops used as
// the oracle in tests and the benchmark baseline; cfa::par holds the OpenMP
// versions used by the library. Both compute each output element as the same
// ordered sum over k, so results are bit-identical across implementations
// and thread counts.

namespace serial {

// C[m,n] = A[m,k] * B[k,n]
void matmul(std::size_t m, std::size_t k, std::size_t n,
            const double* a, const double* b, double* c);

// C[m,n] = A[m,k] * B[n,k]^T
void matmul_nt(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c);

// C[k,n] = A[m,k]^T * B[m,n]
void matmul_tn(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c);

}  // namespace serial

namespace par {

void matmul(std::size_t m, std::size_t k, std::size_t n,
            const double* a, const double* b, double* c);

void matmul_nt(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c);

void matmul_tn(std::size_t m, std::size_t k, std::size_t n,
               const double* a, const double* b, double* c);

}  // namespace par

}  // namespace cfa
