#include "fedsim/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "fedsim/errors.hpp"

namespace fedsim {

namespace {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_product(shape_) != data_.size()) {
    throw InvalidArgumentError("tensor data length " +
                               std::to_string(data_.size()) +
                               " does not match shape " + shape_str());
  }
  if (!all_finite()) {
    throw NonFiniteError("tensor constructed with non-finite elements");
  }
}

Tensor Tensor::scalar(double value) {
  return Tensor({}, std::vector<double>{value});
}

Tensor Tensor::from_vector(std::vector<double> values) {
  std::vector<std::size_t> shape{values.size()};
  return Tensor(std::move(shape), std::move(values));
}

std::size_t Tensor::row_size() const {
  return shape_.empty() ? 1 : data_.size() / (shape_[0] == 0 ? 1 : shape_[0]);
}

double Tensor::at2(std::size_t i, std::size_t j) const {
  return data_[i * row_size() + j];
}

double& Tensor::at2(std::size_t i, std::size_t j) {
  return data_[i * row_size() + j];
}

std::span<const double> Tensor::row(std::size_t i) const {
  const std::size_t w = row_size();
  return {data_.data() + i * w, w};
}

std::span<double> Tensor::row(std::size_t i) {
  const std::size_t w = row_size();
  return {data_.data() + i * w, w};
}

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << ',';
    os << shape_[i];
  }
  os << ']';
  return os.str();
}

}  // namespace fedsim
