#include "etensor/algebra.hpp"

#include <algorithm>

#include "etensor/errors.hpp"

namespace etensor {

namespace {

int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

// c with the vector v substituted into input slot `slot` and basis vectors a, b in the
// remaining slots (in order).
Vector contract(const TrilinearMap& c, int slot, std::size_t a, std::size_t b, const Vector& v) {
  const std::size_t d = c.dim();
  Vector out(d);
  for (std::size_t l = 0; l < d; ++l) {
    if (is_zero(v[l])) continue;
    for (std::size_t o = 0; o < d; ++o) {
      const Scalar& x = slot == 0 ? c(l, a, b, o) : slot == 1 ? c(a, l, b, o) : c(a, b, l, o);
      if (!is_zero(x)) out[o] += v[l] * x;
    }
  }
  return out;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

Vector TrilinearMap::basis_value(std::size_t i, std::size_t j, std::size_t k) const {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(((i * dim_ + j) * dim_ + k) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector TrilinearMap::apply(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) throw ShapeError("TrilinearMap::apply: dimension");
  Vector out(dim_);
  Scalar xy, xyz;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (etensor::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (etensor::is_zero(y[j])) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (etensor::is_zero(z[k])) continue;
        xyz = xy * z[k];
        for (std::size_t l = 0; l < dim_; ++l) {
          const auto& c = (*this)(i, j, k, l);
          if (!etensor::is_zero(c)) out[l] += xyz * c;
        }
      }
    }
  }
  return out;
}

bool TrilinearMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return etensor::is_zero(x); });
}

TrilinearMap skew_normalize(const TrilinearMap& c) {
  const std::size_t d = c.dim();
  TrilinearMap out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (i == j || j == k || i == k) continue;
        std::array<std::size_t, 3> s{i, j, k};
        std::sort(s.begin(), s.end());
        // sign of the permutation taking (i,j,k) to sorted order
        int inv = (i > j) + (i > k) + (j > k);
        const int sign = inv % 2 == 0 ? 1 : -1;
        for (std::size_t l = 0; l < d; ++l) out(i, j, k, l) = sign * c(s[0], s[1], s[2], l);
      }
    }
  }
  return out;
}

ThreeLieAlgebra::ThreeLieAlgebra(std::vector<std::string> labels, const TrilinearMap& constants)
    : labels_(std::move(labels)), constants_(skew_normalize(constants)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < constants_.dim(); ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != constants_.dim()) throw ShapeError("ThreeLieAlgebra: label count differs from dimension");
}

namespace {

TrilinearMap from_table(std::size_t dim, const SortedBracketTable& table) {
  TrilinearMap c(dim);
  for (const auto& [key, value] : table) {
    const auto [i, j, k] = key;
    if (!(0 <= i && i < j && j < k && static_cast<std::size_t>(k) < dim))
      throw ShapeError("bracket table keys must be sorted triples i<j<k within the dimension");
    if (value.size() != dim) throw ShapeError("bracket table value has wrong length");
    for (std::size_t l = 0; l < dim; ++l) c(i, j, k, l) = value[l];
  }
  return c;
}

}  // namespace

ThreeLieAlgebra::ThreeLieAlgebra(std::vector<std::string> labels, const SortedBracketTable& table)
    : ThreeLieAlgebra(labels, from_table(labels.size(), table)) {}

ThreeLieAlgebra ThreeLieAlgebra::abelian(std::size_t dim) { return ThreeLieAlgebra({}, TrilinearMap(dim)); }

ThreeLieAlgebra ThreeLieAlgebra::levi_civita4() {
  TrilinearMap c(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) c(i, j, k, l) = permutation_sign({i, j, k, l});
  return ThreeLieAlgebra({}, c);
}

ThreeLeibnizAlgebra::ThreeLeibnizAlgebra(std::vector<std::string> labels, TrilinearMap constants)
    : labels_(std::move(labels)), constants_(std::move(constants)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < constants_.dim(); ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != constants_.dim()) throw ShapeError("ThreeLeibnizAlgebra: label count differs from dimension");
}

ThreeLeibnizAlgebra ThreeLeibnizAlgebra::from(const ThreeLieAlgebra& g) {
  return ThreeLeibnizAlgebra(g.labels(), g.constants());
}

Representation::Representation(std::size_t algebra_dim, std::size_t carrier_dim)
    : algebra_dim_(algebra_dim),
      carrier_dim_(carrier_dim),
      ops_(algebra_dim * algebra_dim, Matrix(carrier_dim, carrier_dim)) {}

Representation::Representation(std::size_t algebra_dim, std::size_t carrier_dim,
                               const std::map<std::pair<int, int>, Matrix>& upper)
    : Representation(algebra_dim, carrier_dim) {
  for (const auto& [key, m] : upper) {
    const auto [i, j] = key;
    if (!(0 <= i && i < j && static_cast<std::size_t>(j) < algebra_dim))
      throw ShapeError("representation keys must be pairs i<j within the algebra dimension");
    if (m.rows() != carrier_dim || m.cols() != carrier_dim) throw ShapeError("representation matrix has wrong shape");
    ops_[i * algebra_dim + j] = m;
    ops_[j * algebra_dim + i] = -m;
  }
}

Matrix Representation::at(std::size_t i, const Vector& y) const {
  Matrix out(carrier_dim_, carrier_dim_);
  for (std::size_t j = 0; j < algebra_dim_; ++j) {
    if (!is_zero(y[j])) out += y[j] * (*this)(i, j);
  }
  return out;
}

Matrix Representation::at(const Vector& x, const Vector& y) const {
  if (x.size() != algebra_dim_ || y.size() != algebra_dim_) throw ShapeError("Representation::at: dimension");
  Matrix out(carrier_dim_, carrier_dim_);
  for (std::size_t i = 0; i < algebra_dim_; ++i) {
    if (!is_zero(x[i])) out += x[i] * at(i, y);
  }
  return out;
}

Report check_fundamental_identity(const TrilinearMap& c) {
  Report report;
  const std::size_t d = c.dim();
  for (std::size_t x1 = 0; x1 < d; ++x1)
    for (std::size_t x2 = 0; x2 < d; ++x2)
      for (std::size_t x3 = 0; x3 < d; ++x3)
        for (std::size_t x4 = 0; x4 < d; ++x4)
          for (std::size_t x5 = 0; x5 < d; ++x5) {
            // [x1,x2,[x3,x4,x5]] - [[x1,x2,x3],x4,x5] - [x3,[x1,x2,x4],x5] - [x3,x4,[x1,x2,x5]]
            Vector r = contract(c, 2, x1, x2, c.basis_value(x3, x4, x5));
            axpy(r, -1, contract(c, 0, x4, x5, c.basis_value(x1, x2, x3)));
            axpy(r, -1, contract(c, 1, x3, x5, c.basis_value(x1, x2, x4)));
            axpy(r, -1, contract(c, 2, x3, x4, c.basis_value(x1, x2, x5)));
            if (!is_zero(r)) {
              report.add("fundamental_identity",
                         {int(x1), int(x2), int(x3), int(x4), int(x5)}, std::move(r));
            }
          }
  return report;
}

Report check_fundamental_identity(const ThreeLieAlgebra& g) { return check_fundamental_identity(g.constants()); }

Report check_3leibniz(const TrilinearMap& c) {
  Report report;
  const std::size_t d = c.dim();
  for (std::size_t x1 = 0; x1 < d; ++x1)
    for (std::size_t x2 = 0; x2 < d; ++x2)
      for (std::size_t y1 = 0; y1 < d; ++y1)
        for (std::size_t y2 = 0; y2 < d; ++y2)
          for (std::size_t y3 = 0; y3 < d; ++y3) {
            Vector r = contract(c, 2, x1, x2, c.basis_value(y1, y2, y3));
            axpy(r, -1, contract(c, 0, y2, y3, c.basis_value(x1, x2, y1)));
            axpy(r, -1, contract(c, 1, y1, y3, c.basis_value(x1, x2, y2)));
            axpy(r, -1, contract(c, 2, y1, y2, c.basis_value(x1, x2, y3)));
            if (!is_zero(r)) {
              report.add("3leibniz", {int(x1), int(x2), int(y1), int(y2), int(y3)}, std::move(r));
            }
          }
  return report;
}

Report check_3leibniz(const ThreeLeibnizAlgebra& l) { return check_3leibniz(l.constants()); }

Report check_representation(const ThreeLieAlgebra& g, const Representation& rho) {
  if (rho.algebra_dim() != g.dim()) throw ShapeError("check_representation: representation is for another algebra");
  Report report;
  const std::size_t d = g.dim();
  for (std::size_t x1 = 0; x1 < d; ++x1)
    for (std::size_t x2 = 0; x2 < d; ++x2)
      for (std::size_t x3 = 0; x3 < d; ++x3)
        for (std::size_t x4 = 0; x4 < d; ++x4) {
          // rho(x1,x2)rho(x3,x4) = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4]) + rho(x3,x4)rho(x1,x2)
          Matrix r1 = rho(x1, x2) * rho(x3, x4);
          r1 += rho.at(x4, g.basis_bracket(x1, x2, x3));  // -rho([x1,x2,x3],x4)
          r1 -= rho.at(x3, g.basis_bracket(x1, x2, x4));
          r1 -= rho(x3, x4) * rho(x1, x2);
          if (!r1.is_zero()) report.add("rep1", {int(x1), int(x2), int(x3), int(x4)}, flatten(r1));

          // rho(x1,[x2,x3,x4]) = rho(x3,x4)rho(x1,x2) - rho(x2,x4)rho(x1,x3) + rho(x2,x3)rho(x1,x4)
          Matrix r2 = rho.at(x1, g.basis_bracket(x2, x3, x4));
          r2 -= rho(x3, x4) * rho(x1, x2);
          r2 += rho(x2, x4) * rho(x1, x3);
          r2 -= rho(x2, x3) * rho(x1, x4);
          if (!r2.is_zero()) report.add("rep2", {int(x1), int(x2), int(x3), int(x4)}, flatten(r2));
        }
  return report;
}

Representation adjoint_representation(const ThreeLieAlgebra& g) {
  const std::size_t d = g.dim();
  std::map<std::pair<int, int>, Matrix> upper;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix m(d, d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) m(l, k) = g.constants()(i, j, k, l);
      upper.emplace(std::pair{int(i), int(j)}, std::move(m));
    }
  return Representation(d, d, upper);
}

ThreeLeibnizAlgebra hemisemidirect_product(const ThreeLieAlgebra& g, const Representation& rho) {
  if (rho.algebra_dim() != g.dim()) throw ShapeError("hemisemidirect_product: representation is for another algebra");
  const std::size_t dg = g.dim();
  const std::size_t dv = rho.carrier_dim();
  TrilinearMap c(dg + dv);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j < dg; ++j) {
      for (std::size_t k = 0; k < dg; ++k)
        for (std::size_t l = 0; l < dg; ++l) c(i, j, k, l) = g.constants()(i, j, k, l);
      const Matrix& op = rho(i, j);
      for (std::size_t w = 0; w < dv; ++w)
        for (std::size_t l = 0; l < dv; ++l) c(i, j, dg + w, dg + l) = op(l, w);
    }
  std::vector<std::string> labels = g.labels();
  for (std::size_t w = 0; w < dv; ++w) labels.push_back("v" + std::to_string(w + 1));
  return ThreeLeibnizAlgebra(std::move(labels), std::move(c));
}

Report check_derivation(const ThreeLieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw ShapeError("check_derivation: map has wrong shape");
  Report report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = d.apply(g.basis_bracket(i, j, k));
        const auto& c = g.constants();
        axpy(r, -1, contract(c, 0, j, k, d.column(i)));
        axpy(r, -1, contract(c, 1, i, k, d.column(j)));
        axpy(r, -1, contract(c, 2, i, j, d.column(k)));
        if (!is_zero(r)) report.add("derivation", {int(i), int(j), int(k)}, std::move(r));
      }
  return report;
}

namespace {

Report homomorphism_report(const TrilinearMap& src, const TrilinearMap& dst, const Matrix& phi) {
  if (phi.cols() != src.dim() || phi.rows() != dst.dim()) throw ShapeError("homomorphism: map has wrong shape");
  Report report;
  const std::size_t n = src.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = phi.apply(src.basis_value(i, j, k));
        axpy(r, -1, dst.apply(phi.column(i), phi.column(j), phi.column(k)));
        if (!is_zero(r)) report.add("homomorphism", {int(i), int(j), int(k)}, std::move(r));
      }
  return report;
}

}  // namespace

Report check_algebra_homomorphism(const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst, const Matrix& phi) {
  return homomorphism_report(src.constants(), dst.constants(), phi);
}

Report check_algebra_homomorphism(const ThreeLeibnizAlgebra& src, const ThreeLeibnizAlgebra& dst,
                                  const Matrix& phi) {
  return homomorphism_report(src.constants(), dst.constants(), phi);
}

}  // namespace etensor
