#pragma once

#include <filesystem>

#include "cfa/tensor.hpp"

namespace cfa {

// TensorFile (.cfat): magic "CFAT", version 0x01, dtype 0x02 (f64),
// u32 LE ndim, ndim x u64 LE dims, row-major f64 LE payload.
// Round-trips are bit-exact.

void save_tensor(const Tensor& t, const std::filesystem::path& path);
Tensor load_tensor(const std::filesystem::path& path);

}  // namespace cfa
