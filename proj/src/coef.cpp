#include "polydom/coef.hpp"

#include <algorithm>

namespace polydom {

RatMatrix::RatMatrix(std::size_t order) : order_(order), entries_(order * order, Rational(0)) {
  if (order == 0) {
    throw Error("matrix order must be >= 1");
  }
}

RatMatrix RatMatrix::identity(std::size_t order) {
  RatMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

namespace {

void require_same_order(const RatMatrix& a, const RatMatrix& b) {
  if (a.order() != b.order()) {
    throw Error("matrix orders differ");
  }
}

}  // namespace

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  require_same_order(*this, other);
  RatMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  require_same_order(*this, other);
  RatMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = -entries_[i];
  }
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  require_same_order(*this, other);
  RatMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t k = 0; k < order_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < order_; ++j) {
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] * s;
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      out.at(j, i) = at(i, j);
    }
  }
  return out;
}

Rational RatMatrix::determinant() const {
  // Gaussian elimination with exact rational pivots.
  RatMatrix work(*this);
  Rational det(1);
  for (std::size_t col = 0; col < order_; ++col) {
    std::size_t pivot = col;
    while (pivot < order_ && work.at(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == order_) {
      return Rational(0);
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < order_; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
      }
      det = -det;
    }
    det *= work.at(col, col);
    for (std::size_t row = col + 1; row < order_; ++row) {
      if (work.at(row, col) == 0) {
        continue;
      }
      Rational factor = work.at(row, col) / work.at(col, col);
      for (std::size_t j = col; j < order_; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
      }
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  // Gauss-Jordan on [this | I].
  RatMatrix work(*this);
  RatMatrix inv = identity(order_);
  for (std::size_t col = 0; col < order_; ++col) {
    std::size_t pivot = col;
    while (pivot < order_ && work.at(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == order_) {
      throw SingularMatrixError("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < order_; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rational scale = Rational(1) / work.at(col, col);
    for (std::size_t j = 0; j < order_; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t row = 0; row < order_; ++row) {
      if (row == col || work.at(row, col) == 0) {
        continue;
      }
      Rational factor = work.at(row, col);
      for (std::size_t j = 0; j < order_; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0; });
}

const mpz_class& Coef::integer() const {
  if (!holds_integer()) {
    throw Error("coefficient is not an integer value");
  }
  return std::get<mpz_class>(value_);
}

const RatMatrix& Coef::matrix() const {
  if (!holds_matrix()) {
    throw Error("coefficient is not a matrix value");
  }
  return std::get<RatMatrix>(value_);
}

}  // namespace polydom
