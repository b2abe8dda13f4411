// Copyright 2026 The eqknot Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact number types, a small dense matrix, and the library's error type.

#ifndef EQKNOT_BASE_HPP_
#define EQKNOT_BASE_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "boost/multiprecision/cpp_int.hpp"

namespace eqknot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  kInvalidArgument,
  kSchema,
  kNotSymmetric,
  kLoopEdge,
  kDisconnected,
  kNotAutomorphism,
  kInconsistentSignature,
  kNotDefinite,
  kNotInvolution,
  kNotIsometry,
  kOutOfRange,
  kDimensionMismatch,
  kIo,
};

// Stable upper-case identifier, e.g. "LOOP_EDGE".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Dense row-major matrix. Comparison is (rows, cols, then row-major entries).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative matrix dimension");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix Identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool IsSquare() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[Index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<const T> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<T> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::vector<T> column(int c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  const std::vector<T>& data() const { return data_; }

  bool IsSymmetric() const {
    if (!IsSquare()) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  Matrix Transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix product shape");
    }
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
      }
    }
    return out;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix out = a;
    for (T& x : out.data_) x = -x;
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix difference shape");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(),
                                        b.data_.begin(), b.data_.end());
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using BigMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using SmallMatrix = Matrix<std::int64_t>;
using RationalVector = std::vector<Rational>;

// Throws kOutOfRange when the value does not fit.
std::int64_t ToInt64(const BigInt& value);

template <typename To, typename From>
Matrix<To> MatrixCast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<To, std::int64_t> &&
                    std::is_same_v<From, BigInt>) {
        out(r, c) = ToInt64(m(r, c));
      } else {
        out(r, c) = To(m(r, c));
      }
    }
  }
  return out;
}

// Block-diagonal a ⊕ b.
template <typename T>
Matrix<T> DirectSum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

// Smallest integer >= q.
BigInt Ceil(const Rational& q);

// "p" for integers, "p/q" otherwise.
std::string RationalToString(const Rational& q);

// Accepts "p" or "p/q" with optional sign; throws kInvalidArgument.
Rational ParseRational(std::string_view text);

}  // namespace eqknot

#endif  // EQKNOT_BASE_HPP_
