#include "etensor/cochain.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "etensor/errors.hpp"

namespace etensor {

namespace {

std::atomic<std::size_t> g_entry_cap{10'000'000};

}  // namespace

const char* to_string(Space s) {
  switch (s) {
    case Space::full:
      return "FULL";
    case Space::f:
      return "F";
    case Space::plain:
      return "PLAIN";
  }
  return "?";
}

std::size_t entry_cap() { return g_entry_cap.load(); }
void set_entry_cap(std::size_t cap) { g_entry_cap.store(cap); }

Cochain::Cochain(Space space, int degree, std::size_t in_dim, std::size_t out_dim)
    : space_(space), degree_(degree), in_dim_(in_dim), out_dim_(out_dim) {
  if (degree < 0) throw ShapeError("cochain degree must be non-negative");
  const std::size_t cap = entry_cap();
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity(); ++i) {
    count *= in_dim;
    if (count * std::max<std::size_t>(out_dim, 1) > cap) {
      throw SizeCapError("degree-" + std::to_string(degree) + " cochain on a " + std::to_string(in_dim) +
                         "-dimensional space exceeds the entry cap of " + std::to_string(cap));
    }
  }
  tuple_count_ = count;
  coeffs_.resize(count * out_dim);
}

Cochain Cochain::from_matrix(const Matrix& m, Space space) {
  Cochain c(space, 0, m.cols(), m.rows());
  for (std::size_t u = 0; u < m.cols(); ++u)
    for (std::size_t o = 0; o < m.rows(); ++o) c.coeffs_[u * c.out_dim_ + o] = m(o, u);
  return c;
}

Matrix Cochain::to_matrix() const {
  if (degree_ != 0) throw ShapeError("to_matrix: cochain is not of degree 0");
  Matrix m(out_dim_, in_dim_);
  for (std::size_t u = 0; u < in_dim_; ++u)
    for (std::size_t o = 0; o < out_dim_; ++o) m(o, u) = coeffs_[u * out_dim_ + o];
  return m;
}

std::size_t Cochain::tuple_index(std::span<const int> args) const {
  std::size_t index = 0;
  for (int a : args) index = index * in_dim_ + static_cast<std::size_t>(a);
  return index;
}

void Cochain::decode_tuple(std::size_t index, std::span<int> args) const {
  for (std::size_t i = args.size(); i-- > 0;) {
    args[i] = static_cast<int>(index % in_dim_);
    index /= in_dim_;
  }
}

Vector Cochain::value(std::span<const int> args) const {
  const std::size_t base = tuple_index(args) * out_dim_;
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(base),
                coeffs_.begin() + static_cast<std::ptrdiff_t>(base + out_dim_));
}

bool Cochain::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& x) { return etensor::is_zero(x); });
}

bool Cochain::same_shape(const Cochain& other) const {
  return space_ == other.space_ && degree_ == other.degree_ && in_dim_ == other.in_dim_ &&
         out_dim_ == other.out_dim_;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (!same_shape(other)) throw ShapeError("cochain sum: shapes differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!etensor::is_zero(other.coeffs_[i])) coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (!same_shape(other)) throw ShapeError("cochain difference: shapes differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!etensor::is_zero(other.coeffs_[i])) coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
  for (auto& x : coeffs_) {
    if (!etensor::is_zero(x)) x *= s;
  }
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

}  // namespace etensor
