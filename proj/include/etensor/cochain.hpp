#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etensor/linalg.hpp"

namespace etensor {

/// Which cochain space a tensor lives in.
///  - full:  maps (⊗²E)^⊗n ⊗ E -> E for E = g (+) V (g-basis first)
///  - f:     maps (⊗²V)^⊗n ⊗ V -> g
///  - plain: maps (⊗²L)^⊗n ⊗ L -> M for an arbitrary 3-Leibniz algebra L and module M
enum class Space { full, f, plain };

const char* to_string(Space s);

/// Upper bound on the number of stored coefficients of any dense cochain.
std::size_t entry_cap();
void set_entry_cap(std::size_t cap);

/// Homogeneous multilinear map of degree n: n ordered pairs of inputs followed by one more
/// input, all from an in_dim-dimensional space, with values in an out_dim-dimensional space.
/// Coefficients are stored densely; argument tuples are row-major with the output index fastest.
class Cochain {
 public:
  Cochain() = default;
  /// Zero cochain. Throws SizeCapError if the dense tensor would exceed entry_cap().
  Cochain(Space space, int degree, std::size_t in_dim, std::size_t out_dim);

  /// Degree-0 cochain from a linear map (out_dim x in_dim matrix).
  static Cochain from_matrix(const Matrix& m, Space space = Space::f);
  /// Degree-0 cochains only.
  Matrix to_matrix() const;

  Space space() const { return space_; }
  int degree() const { return degree_; }
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  /// Number of inputs, 2n + 1.
  std::size_t arity() const { return 2 * static_cast<std::size_t>(degree_) + 1; }
  /// Number of input tuples, in_dim^arity.
  std::size_t tuple_count() const { return tuple_count_; }
  std::size_t size() const { return coeffs_.size(); }

  std::size_t tuple_index(std::span<const int> args) const;
  void decode_tuple(std::size_t index, std::span<int> args) const;

  Scalar& at(std::span<const int> args, std::size_t out) { return coeffs_[tuple_index(args) * out_dim_ + out]; }
  const Scalar& at(std::span<const int> args, std::size_t out) const {
    return coeffs_[tuple_index(args) * out_dim_ + out];
  }

  /// Output vector on a basis tuple.
  Vector value(std::span<const int> args) const;

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  std::vector<Scalar>& coeffs() { return coeffs_; }

  /// Calls fn(args, out, value) for every nonzero coefficient, in storage order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    std::vector<int> args(arity());
    for (std::size_t t = 0; t < tuple_count_; ++t) {
      bool decoded = false;
      for (std::size_t o = 0; o < out_dim_; ++o) {
        const Scalar& x = coeffs_[t * out_dim_ + o];
        if (etensor::is_zero(x)) continue;
        if (!decoded) {
          decode_tuple(t, args);
          decoded = true;
        }
        fn(std::span<const int>(args), o, x);
      }
    }
  }

  bool is_zero() const;
  bool same_shape(const Cochain& other) const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Scalar& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  Cochain operator-() const;

  bool operator==(const Cochain& other) const = default;

 private:
  Space space_ = Space::f;
  int degree_ = 0;
  std::size_t in_dim_ = 0;
  std::size_t out_dim_ = 0;
  std::size_t tuple_count_ = 0;
  std::vector<Scalar> coeffs_;
};

}  // namespace etensor
