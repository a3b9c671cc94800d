#include "cfa/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "cfa/errors.hpp"

namespace cfa {

static std::size_t shape_product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

Tensor::Tensor(std::vector<std::size_t> shape) {
    impl_ = std::make_shared<Impl>();
    impl_->data.assign(shape_product(shape), 0.0);
    impl_->shape = std::move(shape);
}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data) {
    if (shape_product(shape) != data.size()) {
        throw DimensionError("Tensor: data length " + std::to_string(data.size()) +
                             " does not match shape " + shape_to_string(shape));
    }
    impl_ = std::make_shared<Impl>();
    impl_->shape = std::move(shape);
    impl_->data = std::move(data);
    check_finite("Tensor construction");
}

Tensor Tensor::zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<std::size_t> shape, double value) {
    Tensor t(std::move(shape));
    for (auto& v : t.impl_->data) v = value;
    t.check_finite("Tensor::full");
    return t;
}

Tensor Tensor::scalar(double value) { return Tensor({1, 1}, {value}); }

Tensor::Impl& Tensor::impl() {
    if (!impl_) throw ContractError("use of undefined Tensor");
    return *impl_;
}

const Tensor::Impl& Tensor::impl() const {
    if (!impl_) throw ContractError("use of undefined Tensor");
    return *impl_;
}

const std::vector<std::size_t>& Tensor::shape() const { return impl().shape; }

std::size_t Tensor::size() const { return impl().data.size(); }

std::size_t Tensor::rows() const {
    if (ndim() != 2) throw DimensionError("rows(): tensor is not 2-D");
    return shape()[0];
}

std::size_t Tensor::cols() const {
    if (ndim() != 2) throw DimensionError("cols(): tensor is not 2-D");
    return shape()[1];
}

double* Tensor::data() { return impl().data.data(); }
const double* Tensor::data() const { return impl().data.data(); }

double& Tensor::operator()(std::size_t i, std::size_t j) {
    return impl().data[i * cols() + j];
}

double Tensor::operator()(std::size_t i, std::size_t j) const {
    return impl().data[i * cols() + j];
}

double& Tensor::operator[](std::size_t i) { return impl().data[i]; }
double Tensor::operator[](std::size_t i) const { return impl().data[i]; }

double Tensor::item() const {
    if (size() != 1) {
        throw ContractError("item(): tensor has " + std::to_string(size()) + " elements");
    }
    return impl().data[0];
}

bool Tensor::requires_grad() const { return impl().requires_grad; }

Tensor& Tensor::set_requires_grad(bool v) {
    impl().requires_grad = v;
    return *this;
}

bool Tensor::has_grad() const { return !impl().grad.empty(); }

void Tensor::ensure_grad() {
    auto& im = impl();
    if (im.grad.empty()) im.grad.assign(im.data.size(), 0.0);
}

void Tensor::zero_grad() {
    auto& im = impl();
    if (!im.grad.empty()) im.grad.assign(im.data.size(), 0.0);
}

void Tensor::drop_grad() { impl().grad.clear(); }

double* Tensor::grad_data() {
    if (!has_grad()) throw ContractError("grad_data(): gradient not populated");
    return impl().grad.data();
}

const double* Tensor::grad_data() const {
    if (!has_grad()) throw ContractError("grad_data(): gradient not populated");
    return impl().grad.data();
}

Tensor Tensor::grad() const {
    if (!has_grad()) throw ContractError("grad(): gradient not populated");
    return Tensor(impl().shape, impl().grad);
}

Tensor Tensor::clone() const {
    Tensor t;
    t.impl_ = std::make_shared<Impl>(impl());
    return t;
}

Tensor Tensor::reshaped(std::vector<std::size_t> shape) const {
    if (shape_product(shape) != size()) {
        throw DimensionError("reshaped(): new shape " + shape_to_string(shape) +
                             " has wrong element count");
    }
    return Tensor(std::move(shape), impl().data);
}

void Tensor::check_finite(const char* context) const {
    for (double v : impl().data) {
        if (!std::isfinite(v)) {
            throw NumericError(std::string(context) + ": non-finite value in tensor");
        }
    }
}

std::string shape_to_string(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << "x";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

}  // namespace cfa
