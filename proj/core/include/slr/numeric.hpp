#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slr {

using Integer = mpz_class;

Integer pow(const Integer& base, unsigned long exponent);

// Exact rational number, always in canonical form.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = static_cast<long>(v);
    } else {
      q_ = static_cast<unsigned long>(v);
    }
  }
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);
  std::string str() const;

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r = a; r /= b; return r; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// value + weight * iota, where iota is a formal positive infinitesimal.
struct PerturbedValue {
  Rational value;
  Rational weight;

  PerturbedValue() = default;
  PerturbedValue(Rational v, Rational w = Rational()) : value(std::move(v)), weight(std::move(w)) {}  // NOLINT

  int sign() const { return value.sign() != 0 ? value.sign() : weight.sign(); }
  bool is_positive() const { return sign() > 0; }
  PerturbedValue abs() const { return sign() < 0 ? -*this : *this; }
  // Replaces iota by a concrete positive rational.
  Rational instantiate(const Rational& iota) const { return value + weight * iota; }

  friend PerturbedValue operator+(const PerturbedValue& a, const PerturbedValue& b) {
    return {a.value + b.value, a.weight + b.weight};
  }
  friend PerturbedValue operator-(const PerturbedValue& a, const PerturbedValue& b) {
    return {a.value - b.value, a.weight - b.weight};
  }
  friend PerturbedValue operator-(const PerturbedValue& a) { return {-a.value, -a.weight}; }
  friend PerturbedValue operator*(const PerturbedValue& a, const Rational& c) { return {a.value * c, a.weight * c}; }
  friend PerturbedValue operator*(const Rational& c, const PerturbedValue& a) { return a * c; }

  friend bool operator==(const PerturbedValue& a, const PerturbedValue& b) = default;
  friend std::strong_ordering operator<=>(const PerturbedValue& a, const PerturbedValue& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.weight <=> b.weight;
  }
  friend std::ostream& operator<<(std::ostream& os, const PerturbedValue& p) {
    return os << "(" << p.value << ", " << p.weight << ")";
  }
};

// Unique e with base^e <= x < base^(e+1). Throws PreconditionError for x <= 0
// or base < 2.
long floor_log(const Integer& base, const Rational& x);

// Smallest integer c >= 0 with c^k >= x, for x >= 0 and k >= 1.
Integer ceil_root(const Integer& x, unsigned long k);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      m.data_.insert(m.data_.end(), row.begin(), row.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix out(rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = (*this)(i, columns[j]);
    return out;
  }
  Matrix select_rows(std::size_t first, std::size_t count) const {
    Matrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
  }
  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Entry (i, j) (1-based) gains weight ((i-1)N + j) / (rN).
Matrix<PerturbedValue> perturb_matrix(const Matrix<Rational>& m);

}  // namespace slr
