#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rtva/rational.hpp"

namespace rtva {

/// Dense row vector of exact rationals. All machine state vectors are row
/// vectors and are only ever multiplied on the right by a square matrix.
class RowVector {
 public:
  RowVector() = default;
  explicit RowVector(int dim) : entries_(check_dim(dim)) {}
  RowVector(std::initializer_list<Rational> xs) : entries_(xs) {}
  explicit RowVector(std::vector<Rational> xs) : entries_(std::move(xs)) {}

  int dim() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int i) const { return entries_[i]; }
  Rational& operator[](int i) { return entries_[i]; }

  const std::vector<Rational>& entries() const { return entries_; }

  std::size_t max_bits() const;
  std::uint64_t hash() const;
  std::string str() const;

  friend bool operator==(const RowVector& a, const RowVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  static std::size_t check_dim(int dim);
  std::vector<Rational> entries_;
};

/// Dense square matrix of exact rationals, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : dim_(dim), cells_(check_dim(dim) * dim) {}
  /// Row-major construction from nested lists; rows must be square.
  SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  int dim() const { return dim_; }
  const Rational& at(int row, int col) const { return cells_[row * dim_ + col]; }
  Rational& at(int row, int col) { return cells_[row * dim_ + col]; }

  bool is_identity() const;
  std::size_t max_bits() const;
  std::uint64_t hash() const;
  std::string str() const;

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.cells_ == b.cells_;
  }

 private:
  static std::size_t check_dim(int dim);
  int dim_ = 0;
  std::vector<Rational> cells_;
};

/// k x k identity.
SquareMatrix identity_matrix(int k);

/// Identity with the (i, 1) entry set to c, indices 1-based. Right-multiplying
/// a row vector by it adds c times entry i to entry 1 (scales entry 1 when
/// i == 1).
SquareMatrix elementary_matrix(int i, int k, const Rational& c);

/// Permutation exchanging coordinates 1 and i (1-based); i == 1 gives the
/// identity. Involution.
SquareMatrix swap_matrix(int i, int k);

/// v' = v M under the row convention: v'_j = sum_i v_i M[i][j].
RowVector vec_mat_mul(const RowVector& v, const SquareMatrix& m);

/// Exact matrix product A B.
SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);

/// Inner product of two equal-length vectors (used for final-vector folds).
Rational dot(const RowVector& a, const RowVector& b);

inline RowVector operator*(const RowVector& v, const SquareMatrix& m) {
  return vec_mat_mul(v, m);
}

inline SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  return mat_mul(a, b);
}

}  // namespace rtva
