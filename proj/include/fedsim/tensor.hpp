#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fedsim {

// Dense row-major tensor of 64-bit floats. Immutable by convention once it
// leaves the function that built it; nothing in the library mutates a tensor
// it did not create.
class Tensor {
 public:
  Tensor() = default;

  // Zero-filled tensor of the given shape.
  explicit Tensor(std::vector<std::size_t> shape);

  // Takes ownership of `data`; validates length and finiteness.
  Tensor(std::vector<std::size_t> shape, std::vector<double> data);

  static Tensor scalar(double value);
  static Tensor from_vector(std::vector<double> values);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  // Leading extent; 1 for a rank-0 tensor.
  std::size_t leading_dim() const { return shape_.empty() ? 1 : shape_[0]; }
  // Elements per leading-dim slice.
  std::size_t row_size() const;

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double at2(std::size_t i, std::size_t j) const;
  double& at2(std::size_t i, std::size_t j);

  std::span<const double> row(std::size_t i) const;
  std::span<double> row(std::size_t i);

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;

  bool operator==(const Tensor& other) const {
    return shape_ == other.shape_ && data_ == other.data_;
  }

  std::string shape_str() const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

}  // namespace fedsim
