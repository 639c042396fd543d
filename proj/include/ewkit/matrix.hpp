#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ewkit/errors.hpp"
#include "ewkit/numeric.hpp"

namespace ewkit {

// Dense matrix with exact integer entries. Row-major storage.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat zero(std::size_t n) { return IntMat(n, n); }
  // All-ones matrix (J).
  static IntMat ones(std::size_t rows, std::size_t cols);
  static IntMat ones(std::size_t n) { return ones(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMat transpose() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const Int& c, const IntMat& a);
  friend bool operator==(const IntMat& a, const IntMat& b);
  friend bool operator!=(const IntMat& a, const IntMat& b) {
    return !(a == b);
  }

  Vec operator*(const Vec& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ewkit
