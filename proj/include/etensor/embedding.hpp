#pragma once

#include <memory>

#include "etensor/algebra.hpp"

namespace etensor {

/// A 3-Lie algebra together with a representation, both verified on construction.
class Ambient {
 public:
  /// Throws RejectedError (fundamental identity or representation witnesses) on failure.
  Ambient(ThreeLieAlgebra g, Representation rho);

  static std::shared_ptr<const Ambient> make(ThreeLieAlgebra g, Representation rho) {
    return std::make_shared<const Ambient>(std::move(g), std::move(rho));
  }

  const ThreeLieAlgebra& algebra() const { return g_; }
  const Representation& rep() const { return rho_; }
  std::size_t dim_g() const { return g_.dim(); }
  std::size_t dim_v() const { return rho_.carrier_dim(); }

  /// rho(x, y) applied to w, all given in coordinates.
  Vector act(const Vector& x, const Vector& y, const Vector& w) const { return rho_.at(x, y).apply(w); }

 private:
  ThreeLieAlgebra g_;
  Representation rho_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

/// A linear map T: V -> g (dim g x dim V matrix) over a verified ambient pair.
/// Whether [Tu,Tv,Tw] = T(rho(Tu,Tv)w) holds is decided once, on construction.
class EmbeddingTensor {
 public:
  /// Throws ShapeError when T does not have shape dim g x dim V.
  EmbeddingTensor(AmbientPtr ambient, Matrix t);

  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  const Matrix& map() const { return t_; }

  bool verified() const { return verified_; }
  /// Throws UnverifiedError unless verified().
  void require_verified(const char* operation) const;

  /// T applied to the basis vector e_u of V.
  Vector image(std::size_t u) const { return t_.column(u); }

 private:
  AmbientPtr ambient_;
  Matrix t_;
  bool verified_ = false;
};

/// Residuals [Tu,Tv,Tw]_g - T(rho(Tu,Tv)w) over basis triples of V ("embedding_tensor").
Report check_embedding_tensor(const Ambient& ambient, const Matrix& t);
Report check_embedding_tensor(const EmbeddingTensor& e);

/// Closure of the graph {Tu + u} inside the hemisemidirect product: for each basis triple the
/// bracket of graph vectors is (x, w) in g (+) V, and the residual is x - T w ("graph_closure").
Report graph_subalgebra_check(const EmbeddingTensor& e);

/// [u,v,w]_T = rho(Tu,Tv) w on V. Requires a verified tensor.
ThreeLeibnizAlgebra induced_3leibniz(const EmbeddingTensor& e);

/// Homomorphism (phi_g, phi_V) from `source` to `target` (both over the same ambient pair).
/// Throws RejectedError when phi_g is not a 3-Lie endomorphism. Witness labels:
/// "intertwining" (T phi_V = phi_g T'), "equivariance" (phi_V rho(x,y) = rho(phi_g x, phi_g y) phi_V),
/// and, when those pass, "induced_homomorphism" for the induced 3-Leibniz brackets.
Report check_et_homomorphism(const EmbeddingTensor& source, const EmbeddingTensor& target, const Matrix& phi_g,
                             const Matrix& phi_v);

/// A square-zero derivation D of g is an embedding tensor for the adjoint representation.
/// Throws RejectedError with "derivation" or "square_zero" witnesses.
EmbeddingTensor from_square_zero_derivation(const ThreeLieAlgebra& g, const Matrix& d);

/// Crossed module (h, g, mu: g -> h, alpha: wedge^2 h -> Der(g)) gives the embedding tensor mu
/// on h with respect to (g; alpha). Throws RejectedError listing every failed axiom; labels are
/// "fundamental_identity", "rep1", "rep2", "homomorphism", "alpha_derivation", "crossed1",
/// "crossed2", "crossed3".
EmbeddingTensor from_crossed_module(const ThreeLieAlgebra& h, const ThreeLieAlgebra& g, const Matrix& mu,
                                    const Representation& alpha);

/// Residuals T(rho(x,Tu)v) - [x,Tu,Tv]_g over basis x in g and u, v in V ("strong_condition").
Report check_strong_condition(const EmbeddingTensor& e);

}  // namespace etensor
