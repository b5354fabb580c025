#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "etensor/cochain.hpp"
#include "etensor/embedding.hpp"

namespace etensor {

/// Representation (l, m, r) of a 3-Leibniz algebra L on a carrier space.
/// Each family holds one carrier-sized matrix per ordered basis pair (i, j) at index i * dim L + j.
struct LeibnizRepresentation {
  ThreeLeibnizAlgebra algebra;
  std::size_t carrier_dim = 0;
  std::vector<Matrix> l, m, r;

  /// All-zero l, m, r.
  static LeibnizRepresentation zero(ThreeLeibnizAlgebra algebra, std::size_t carrier_dim);

  std::size_t dim() const { return algebra.dim(); }
  const Matrix& l_at(std::size_t i, std::size_t j) const { return l[i * dim() + j]; }
  const Matrix& m_at(std::size_t i, std::size_t j) const { return m[i * dim() + j]; }
  const Matrix& r_at(std::size_t i, std::size_t j) const { return r[i * dim() + j]; }
};

/// (l_T, m_T, r_T) on g for the induced algebra (V, [.,.,.]_T). Requires a verified tensor.
LeibnizRepresentation induced_rep(const EmbeddingTensor& e);

/// The five representation axioms over basis 4-tuples ("leibniz_rep1" ... "leibniz_rep5");
/// residual matrices are flattened row-major.
Report check_leibniz_rep(const LeibnizRepresentation& rep);

/// Coboundary of a cochain on rep.algebra with values in the carrier. A cochain with n pairs
/// is a Leibniz (n+1)-cochain; the result has n+1 pairs and lives in the same space as f.
Cochain leibniz_coboundary(const LeibnizRepresentation& rep, const Cochain& f);

/// Matrix of leibniz_coboundary from cochains with `degree` pairs to those with degree+1,
/// in the coordinates given by Cochain::coeffs().
Matrix leibniz_coboundary_matrix(const LeibnizRepresentation& rep, int degree, Space space);

/// Number of basis elements e_i ^ e_j (i < j) of g ^ g, listed lexicographically.
std::size_t wedge_dim(std::size_t dim_g);

/// ad_X on g for X in wedge coordinates.
Matrix wedge_ad(const Ambient& ambient, const Vector& x);
/// rho(X) on V for X in wedge coordinates.
Matrix wedge_rho(const Ambient& ambient, const Vector& x);

/// delta(X) v = T rho(X) v - [X, Tv]_g, with X given in wedge coordinates.
Cochain delta(const EmbeddingTensor& e, const Vector& x);

/// The cohomology complex of an embedding tensor. Level k = 1 is g ^ g; level k >= 2 holds
/// F-cochains with k - 2 pairs. Differentials are built on first use and cached.
class ETComplex {
 public:
  /// Throws UnverifiedError unless e is verified.
  explicit ETComplex(EmbeddingTensor e);

  const EmbeddingTensor& tensor() const { return e_; }
  const LeibnizRepresentation& rep() const { return rep_; }

  /// Dimension of C^k.
  std::size_t cochain_dim(int k) const;

  /// d_k : C^k -> C^{k+1}. Throws SizeCapError when rows * cols exceeds entry_cap().
  const Matrix& differential(int k) const;

  /// d applied to a level-k cochain, k >= 2 (k is degree + 2).
  Cochain apply(const Cochain& c) const;

  /// Cochain view of a coordinate vector at level k >= 2.
  Cochain cochain(int k, const Vector& coords) const;

  /// Some x with d_{k-1} x = c, or nullopt when c is not a coboundary. B^1 = 0.
  std::optional<Vector> coboundary_preimage(int k, const Vector& coords) const;

 private:
  EmbeddingTensor e_;
  LeibnizRepresentation rep_;
  mutable std::mutex mutex_;
  mutable std::map<int, Matrix> cache_;
};

struct CohomologyGroup {
  int k = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
  /// Cocycles reduced modulo B^k, one per class of a basis of H^k, as coordinate vectors of C^k.
  std::vector<Vector> representatives;
};

/// H^k = Z^k / B^k for k >= 1, with B^1 = 0.
CohomologyGroup cohomology_group(const ETComplex& complex, int k);

}  // namespace etensor
