#pragma once

#include <cstdint>
#include <vector>

#include "burnside/error.hpp"

namespace burnside {

// Dense integer matrix; entry (r, c) at data[r*cols + c].
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> data;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
  long long& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  bool operator==(const IntMat&) const = default;

  static IntMat eye(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw InternalCheckFailed("matrix shape mismatch");
  IntMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const long long v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

inline IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw InternalCheckFailed("matrix shape mismatch");
  IntMat c(a.rows, a.cols);
  for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
  return c;
}

}  // namespace burnside
