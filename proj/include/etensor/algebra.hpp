#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "etensor/linalg.hpp"
#include "etensor/report.hpp"

namespace etensor {

/// A trilinear map on a finite-dimensional space, stored densely:
/// [e_i, e_j, e_k] = sum_l c(i,j,k,l) e_l.
class TrilinearMap {
 public:
  TrilinearMap() = default;
  explicit TrilinearMap(std::size_t dim) : dim_(dim), data_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

  /// Coordinates of [e_i, e_j, e_k].
  Vector basis_value(std::size_t i, std::size_t j, std::size_t k) const;

  /// Trilinear extension to arbitrary coordinate vectors.
  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;

  bool is_zero() const;
  bool operator==(const TrilinearMap&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// Makes c totally skew in its three inputs, reading each orbit from its sorted representative
/// c(i,j,k,.) with i<j<k. Entries with a repeated input index become zero. Idempotent.
TrilinearMap skew_normalize(const TrilinearMap& c);

/// Sorted input triple (i<j<k) -> coordinates of [e_i,e_j,e_k].
using SortedBracketTable = std::map<std::array<int, 3>, Vector>;

/// 3-Lie algebra given by totally skew structure constants.
class ThreeLieAlgebra {
 public:
  ThreeLieAlgebra() = default;
  /// Normalizes `constants` by skew_normalize.
  ThreeLieAlgebra(std::vector<std::string> labels, const TrilinearMap& constants);
  ThreeLieAlgebra(std::vector<std::string> labels, const SortedBracketTable& table);

  static ThreeLieAlgebra abelian(std::size_t dim);
  /// [e_i,e_j,e_k] = eps_{ijkl} e_l on a 4-dimensional space.
  static ThreeLieAlgebra levi_civita4();

  std::size_t dim() const { return constants_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const TrilinearMap& constants() const { return constants_; }

  Vector bracket(const Vector& x, const Vector& y, const Vector& z) const {
    return constants_.apply(x, y, z);
  }
  Vector basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_.basis_value(i, j, k);
  }

  bool operator==(const ThreeLieAlgebra&) const = default;

 private:
  std::vector<std::string> labels_;
  TrilinearMap constants_;
};

/// 3-Leibniz algebra: arbitrary trilinear bracket.
class ThreeLeibnizAlgebra {
 public:
  ThreeLeibnizAlgebra() = default;
  ThreeLeibnizAlgebra(std::vector<std::string> labels, TrilinearMap constants);

  static ThreeLeibnizAlgebra from(const ThreeLieAlgebra& g);

  std::size_t dim() const { return constants_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const TrilinearMap& constants() const { return constants_; }

  Vector bracket(const Vector& x, const Vector& y, const Vector& z) const {
    return constants_.apply(x, y, z);
  }
  Vector basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_.basis_value(i, j, k);
  }

 private:
  std::vector<std::string> labels_;
  TrilinearMap constants_;
};

/// rho: wedge^2 g -> gl(V), stored for every ordered pair with rho(j,i) = -rho(i,j).
class Representation {
 public:
  Representation() = default;
  /// Zero representation.
  Representation(std::size_t algebra_dim, std::size_t carrier_dim);
  /// `upper` maps pairs (i,j), i<j, to carrier_dim x carrier_dim matrices; missing pairs are zero.
  Representation(std::size_t algebra_dim, std::size_t carrier_dim,
                 const std::map<std::pair<int, int>, Matrix>& upper);

  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t carrier_dim() const { return carrier_dim_; }

  const Matrix& operator()(std::size_t i, std::size_t j) const { return ops_[i * algebra_dim_ + j]; }

  /// rho(x, y) for coordinate vectors x, y in g.
  Matrix at(const Vector& x, const Vector& y) const;
  /// rho(e_i, y).
  Matrix at(std::size_t i, const Vector& y) const;

  bool operator==(const Representation&) const = default;

 private:
  std::size_t algebra_dim_ = 0;
  std::size_t carrier_dim_ = 0;
  std::vector<Matrix> ops_;
};

/// Residuals of the fundamental identity over all basis 5-tuples.
/// Works on any trilinear map, skew or not.
Report check_fundamental_identity(const TrilinearMap& c);
Report check_fundamental_identity(const ThreeLieAlgebra& g);

/// Residuals of [x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3] + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]].
Report check_3leibniz(const TrilinearMap& c);
Report check_3leibniz(const ThreeLeibnizAlgebra& l);

/// Witnesses labelled "rep1" (rho(x1,x2)rho(x3,x4) law) and "rep2" (rho(x1,[x2,x3,x4]) law),
/// indexed by basis 4-tuples; residual matrices are flattened row-major.
Report check_representation(const ThreeLieAlgebra& g, const Representation& rho);

/// ad_{x,y} z = [x,y,z].
Representation adjoint_representation(const ThreeLieAlgebra& g);

/// The bracket [x+u, y+v, z+w] = [x,y,z]_g + rho(x,y) w on g (+) V, g-basis first.
ThreeLeibnizAlgebra hemisemidirect_product(const ThreeLieAlgebra& g, const Representation& rho);

/// Residuals of D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz] on basis triples ("derivation").
Report check_derivation(const ThreeLieAlgebra& g, const Matrix& d);

/// Residuals of phi[x,y,z]_src = [phi x, phi y, phi z]_dst on basis triples of src ("homomorphism").
Report check_algebra_homomorphism(const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst, const Matrix& phi);
Report check_algebra_homomorphism(const ThreeLeibnizAlgebra& src, const ThreeLeibnizAlgebra& dst,
                                  const Matrix& phi);

}  // namespace etensor
