#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cfa {

// Dense row-major f64 tensor with an optional gradient buffer.
//
// Copying a Tensor copies the handle, not the storage: two copies alias the
// same data, which is what the autodiff tape relies on to accumulate
// gradients into leaves. Use clone() for a deep copy. By convention tensor
// contents are immutable after construction; the only sanctioned in-place
// mutation is an optimizer step on trainable parameters.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);  // zero-filled
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor full(std::vector<std::size_t> shape, double value);
    static Tensor scalar(double value);

    bool defined() const { return impl_ != nullptr; }
    const std::vector<std::size_t>& shape() const;
    std::size_t ndim() const { return shape().size(); }
    std::size_t size() const;
    // 2-D accessors; throw on rank mismatch.
    std::size_t rows() const;
    std::size_t cols() const;

    double* data();
    const double* data() const;
    double& operator()(std::size_t i, std::size_t j);
    double operator()(std::size_t i, std::size_t j) const;
    double& operator[](std::size_t i);
    double operator[](std::size_t i) const;

    // Value of a single-element tensor.
    double item() const;

    bool requires_grad() const;
    Tensor& set_requires_grad(bool v);

    bool has_grad() const;
    // Allocates a zeroed gradient buffer if absent.
    void ensure_grad();
    void zero_grad();
    void drop_grad();
    double* grad_data();
    const double* grad_data() const;
    // Gradient copied out as a plain tensor (throws if absent).
    Tensor grad() const;

    Tensor clone() const;
    // Deep copy of values into a new tensor with a different shape of equal
    // size (used for flatten/reshape of images).
    Tensor reshaped(std::vector<std::size_t> shape) const;

    bool same_storage(const Tensor& other) const { return impl_ == other.impl_; }
    const void* storage_id() const { return impl_.get(); }

    // Throws NumericError naming `context` if any element is non-finite.
    void check_finite(const char* context) const;

private:
    struct Impl {
        std::vector<std::size_t> shape;
        std::vector<double> data;
        bool requires_grad = false;
        std::vector<double> grad;  // empty until needed; size()==data.size() when present
    };
    std::shared_ptr<Impl> impl_;
    Impl& impl();
    const Impl& impl() const;
};

std::string shape_to_string(const std::vector<std::size_t>& shape);

}  // namespace cfa
