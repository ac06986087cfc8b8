#pragma once

#include <cstddef>
#include <vector>

#include "asymclust/values.hpp"

namespace asymclust {

/// Dense square matrix of extended reals, row-major. Comparison is exact.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, Value fill = 0.0) : n_(n), data_(n * n, fill) {}

  static SquareMatrix from_rows(const std::vector<std::vector<Value>>& rows);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Value operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Value& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  const Value* row(std::size_t i) const { return data_.data() + i * n_; }
  Value* row(std::size_t i) { return data_.data() + i * n_; }

  SquareMatrix transposed() const;
  bool is_symmetric() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Value> data_;
};

}  // namespace asymclust
