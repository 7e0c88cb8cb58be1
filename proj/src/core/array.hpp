#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace upcmr {

using cd = std::complex<double>;
using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) {
    if (d < 0) throw UsageError("negative array dimension");
    n *= d;
  }
  return n;
}

// Dense row-major n-d array with value semantics. This is the storage type
// for k-space, images, masks and network activations; all math lives in the
// functions that operate on it.
template <typename T>
class NdArray {
 public:
  NdArray() = default;
  explicit NdArray(Shape shape) : shape_(std::move(shape)), data_(shape_numel(shape_)) {}
  NdArray(Shape shape, T fill) : shape_(std::move(shape)), data_(shape_numel(shape_), fill) {}
  NdArray(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<int64_t>(data_.size()) != shape_numel(shape_))
      throw UsageError("NdArray: data size does not match shape");
  }

  static NdArray zeros(Shape shape) { return NdArray(std::move(shape), T{}); }

  const Shape& shape() const { return shape_; }
  int64_t ndim() const { return static_cast<int64_t>(shape_.size()); }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  // dim(-1) is the last dimension.
  int64_t dim(int i) const {
    int n = static_cast<int>(shape_.size());
    if (i < 0) i += n;
    if (i < 0 || i >= n) throw UsageError("NdArray::dim index out of range");
    return shape_[i];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& vec() { return data_; }
  const std::vector<T>& vec() const { return data_; }

  T& operator[](int64_t i) { return data_[i]; }
  const T& operator[](int64_t i) const { return data_[i]; }

  template <typename... I>
  int64_t offset(I... idx) const {
    const int64_t ix[] = {static_cast<int64_t>(idx)...};
    constexpr int n = sizeof...(I);
    if (n != static_cast<int>(shape_.size())) throw UsageError("NdArray: wrong index arity");
    int64_t off = 0;
    for (int k = 0; k < n; ++k) off = off * shape_[k] + ix[k];
    return off;
  }

  template <typename... I>
  T& at(I... idx) {
    return data_[offset(idx...)];
  }
  template <typename... I>
  const T& at(I... idx) const {
    return data_[offset(idx...)];
  }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  // In-place reinterpretation; element count must match.
  void reshape(Shape shape) {
    if (shape_numel(shape) != numel()) throw UsageError("NdArray::reshape: element count mismatch");
    shape_ = std::move(shape);
  }
  NdArray reshaped(Shape shape) const {
    NdArray out = *this;
    out.reshape(std::move(shape));
    return out;
  }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  Shape shape_;
  std::vector<T> data_;
};

using Arr = NdArray<double>;
using CArr = NdArray<cd>;
using MaskArr = NdArray<uint8_t>;

inline bool same_shape(const Shape& a, const Shape& b) { return a == b; }

template <typename T>
bool all_finite(const NdArray<T>& a) {
  for (const T& v : a) {
    if constexpr (std::is_same_v<T, cd>) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    } else {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
  }
  return true;
}

}  // namespace upcmr
