#include "rtva/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace rtva {

std::size_t RowVector::check_dim(int dim) {
  if (dim < 1) throw DimensionError("vector dimension must be positive");
  return static_cast<std::size_t>(dim);
}

std::size_t RowVector::max_bits() const {
  std::size_t b = 0;
  for (const auto& x : entries_) b = std::max(b, x.bits());
  return b;
}

std::uint64_t RowVector::hash() const {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (const auto& x : entries_) h = hash_mix(h, x.hash());
  return h;
}

std::string RowVector::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ']';
  return os.str();
}

SquareMatrix::SquareMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  dim_ = static_cast<int>(rows.size());
  check_dim(dim_);
  cells_.reserve(static_cast<std::size_t>(dim_) * dim_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) {
      throw DimensionError("matrix rows must all have the matrix dimension");
    }
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

std::size_t SquareMatrix::check_dim(int dim) {
  if (dim < 1) throw DimensionError("matrix dimension must be positive");
  return static_cast<std::size_t>(dim);
}

bool SquareMatrix::is_identity() const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  }
  return true;
}

std::size_t SquareMatrix::max_bits() const {
  std::size_t b = 0;
  for (const auto& x : cells_) b = std::max(b, x.bits());
  return b;
}

std::uint64_t SquareMatrix::hash() const {
  std::uint64_t h = 0x9ce484222325cbf2ULL;
  h = hash_mix(h, static_cast<std::uint64_t>(dim_));
  for (const auto& x : cells_) h = hash_mix(h, x.hash());
  return h;
}

std::string SquareMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < dim_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < dim_; ++c) {
      if (c) os << ", ";
      os << at(r, c);
    }
  }
  os << ']';
  return os.str();
}

SquareMatrix identity_matrix(int k) {
  SquareMatrix m(k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

SquareMatrix elementary_matrix(int i, int k, const Rational& c) {
  if (i < 1 || i > k) throw DimensionError("elementary matrix index out of range");
  SquareMatrix m = identity_matrix(k);
  m.at(i - 1, 0) = c;
  return m;
}

SquareMatrix swap_matrix(int i, int k) {
  if (i < 1 || i > k) throw DimensionError("swap matrix index out of range");
  SquareMatrix m = identity_matrix(k);
  if (i != 1) {
    m.at(0, 0) = 0;
    m.at(i - 1, i - 1) = 0;
    m.at(0, i - 1) = 1;
    m.at(i - 1, 0) = 1;
  }
  return m;
}

RowVector vec_mat_mul(const RowVector& v, const SquareMatrix& m) {
  const int k = v.dim();
  if (k != m.dim()) {
    throw DimensionError("vector/matrix dimension mismatch: " +
                         std::to_string(k) + " vs " + std::to_string(m.dim()));
  }
  RowVector out(k);
  for (int i = 0; i < k; ++i) {
    const Rational& vi = v[i];
    if (vi.is_zero()) continue;
    for (int j = 0; j < k; ++j) {
      const Rational& mij = m.at(i, j);
      if (mij.is_zero()) continue;
      if (mij.is_one()) {
        out[j] += vi;
      } else {
        out[j] += vi * mij;
      }
    }
  }
  return out;
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
  const int k = a.dim();
  if (k != b.dim()) {
    throw DimensionError("matrix/matrix dimension mismatch: " +
                         std::to_string(k) + " vs " + std::to_string(b.dim()));
  }
  SquareMatrix out(k);
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      const Rational& ail = a.at(i, l);
      if (ail.is_zero()) continue;
      for (int j = 0; j < k; ++j) {
        const Rational& blj = b.at(l, j);
        if (!blj.is_zero()) out.at(i, j) += ail * blj;
      }
    }
  }
  return out;
}

Rational dot(const RowVector& a, const RowVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dot product dimension mismatch");
  }
  Rational s;
  for (int i = 0; i < a.dim(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace rtva
