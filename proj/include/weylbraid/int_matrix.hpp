#pragma once

#include <cstdint>
#include <vector>

#include "weylbraid/rational.hpp"

namespace weylbraid {

using IntVec = std::vector<long long>;

// Dense integer matrix, small ranks only.  All arithmetic is exact; the
// determinant uses fraction-free (Bareiss) elimination.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);  // zero-filled
  explicit IntMatrix(const std::vector<std::vector<long long>>& rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  long long at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec apply(const IntVec& v) const;  // this * column(v)
  RatVec apply(const RatVec& v) const;
  IntMatrix transposed() const;
  IntMatrix submatrix(const std::vector<int>& idx) const;  // principal
  long long determinant() const;
  bool is_identity() const;

  const std::vector<long long>& flat() const { return data_; }
  std::vector<std::vector<long long>> to_rows() const;

  uint64_t fnv_hash(uint64_t seed) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

struct IntVecHash {
  std::size_t operator()(const std::vector<long long>& v) const;
};

}  // namespace weylbraid
