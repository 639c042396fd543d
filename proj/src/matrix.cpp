#include "ewkit/matrix.hpp"

namespace ewkit {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(0) {
  for (const auto& r : rows) {
    if (cols_ == 0) cols_ = r.size();
    if (r.size() != cols_ && rows_ > 0)
      throw input_error("matrix literal has ragged rows");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows)
    for (long v : r) data_.emplace_back(v);
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::ones(std::size_t rows, std::size_t cols) {
  IntMat m(rows, cols);
  for (auto& v : m.data_) v = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMat::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMat::is_skew_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

namespace {
void require_same_shape(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("matrix shape mismatch");
}
}  // namespace

IntMat operator+(const IntMat& a, const IntMat& b) {
  require_same_shape(a, b);
  IntMat r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.data_.size(); ++i)
    r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  require_same_shape(a, b);
  IntMat r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.data_.size(); ++i)
    r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw input_error("matrix shape mismatch");
  IntMat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMat operator*(const Int& c, const IntMat& a) {
  IntMat r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = c * a.data_[i];
  return r;
}

bool operator==(const IntMat& a, const IntMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec IntMat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw input_error("matrix shape mismatch");
  Vec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

}  // namespace ewkit
