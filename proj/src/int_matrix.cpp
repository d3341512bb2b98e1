#include "weylbraid/int_matrix.hpp"

#include <cstdlib>

#include "weylbraid/errors.hpp"

namespace weylbraid {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw InvalidArgumentError("negative matrix size");
}

IntMatrix::IntMatrix(const std::vector<std::vector<long long>>& rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows[0].size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw InvalidArgumentError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgumentError("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const long long a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw InvalidArgumentError("vector length mismatch");
  IntVec out(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

RatVec IntMatrix::apply(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw InvalidArgumentError("vector length mismatch");
  RatVec out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += Rat(at(i, j)) * v[j];
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& idx) const {
  IntMatrix out(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(idx[i], idx[j]);
  return out;
}

long long IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgumentError("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;

  // Bareiss fraction-free elimination: every division below is exact.
  std::vector<std::vector<long long>> a = to_rows();
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long long>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    out[i].assign(data_.begin() + static_cast<std::size_t>(i) * cols_,
                  data_.begin() + static_cast<std::size_t>(i + 1) * cols_);
  return out;
}

uint64_t IntMatrix::fnv_hash(uint64_t seed) const {
  uint64_t h = seed;
  auto mix = [&h](uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(rows_));
  mix(static_cast<uint64_t>(cols_));
  for (long long x : data_) mix(static_cast<uint64_t>(x));
  return h;
}

std::size_t IntVecHash::operator()(const std::vector<long long>& v) const {
  uint64_t h = 1469598103934665603ull;
  for (long long x : v) {
    uint64_t u = static_cast<uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace weylbraid
