#pragma once

#include <optional>
#include <vector>

#include "etensor/cohomology.hpp"
#include "etensor/graded.hpp"

namespace etensor {

/// Truncated series T_t = tau_0 + tau_1 t + ... + tau_n t^n with tau_0 = T.
class DeformationSeries {
 public:
  /// Throws UnverifiedError for an unverified tensor and ShapeError for an empty list,
  /// a mis-shaped tau_i, or tau_0 != T.
  DeformationSeries(EmbeddingTensor e, std::vector<Matrix> taus);

  const EmbeddingTensor& tensor() const { return e_; }
  int order() const { return static_cast<int>(taus_.size()) - 1; }
  const std::vector<Matrix>& taus() const { return taus_; }
  const Matrix& tau(int i) const { return taus_.at(static_cast<std::size_t>(i)); }

  /// The order n+1 series with the given top coefficient.
  DeformationSeries extended(Matrix next) const;

 private:
  EmbeddingTensor e_;
  std::vector<Matrix> taus_;
};

/// Coefficient of t^s in [T_t u, T_t v, T_t w] - T_t(rho(T_t u, T_t v) w), using only
/// tau_i with i <= max_index, as an F-cochain with one pair.
Cochain series_residual(const DeformationSeries& d, int s, int max_index);

/// Witnesses "order" with indices (s, u, v, w) for every s <= n and basis triple whose
/// t^s coefficient does not vanish.
Report check_order_n(const DeformationSeries& d);

/// tau_1 as a cochain; refuses (UnverifiedError) unless n >= 1 and check_order_n passes.
Cochain infinitesimal(const DeformationSeries& d);

/// Ob(u,v,w) = sum over i+j+k = n+1, all indices <= n, of [tau_i u, tau_j v, tau_k w] - tau_k(rho(tau_i u, tau_j v) w).
/// Refuses unverified series.
Cochain obstruction(const DeformationSeries& d);

/// (1/6) sum over i+j+k = n+1, all indices <= n, of {tau_i, tau_j, tau_k}.
Cochain obstruction_via_brackets(const DerivedBracket& bracket, const DeformationSeries& d);

struct Extension {
  /// Set when the obstruction is a coboundary.
  std::optional<Matrix> tau_next;
  Cochain obstruction;
};

/// Looks for tau_{n+1} making T_t + tau_{n+1} t^{n+1} an order n+1 deformation.
/// The t^{n+1} coefficient is Ob + dT tau_{n+1}, so tau_{n+1} = -x for a solution of dT x = Ob.
Extension extend(const ETComplex& complex, const DeformationSeries& d);
Extension extend(const DeformationSeries& d);

/// phi_t = Id + t ad_X + sum_{i>=2} t^i phis[i-2], psi_t = Id + t rho(X) + sum_{i>=2} t^i psis[i-2].
/// Empty phis/psis stand for all-zero higher terms.
struct EquivalenceData {
  Vector x;
  std::vector<Matrix> phis;
  std::vector<Matrix> psis;
};

/// Checks, for each s <= n, the t^s coefficients of
///   phi_t[x,y,z] = [phi_t x, phi_t y, phi_t z]           ("equivalence_endomorphism", (s,x,y,z))
///   rho(phi_t x, phi_t y) psi_t u = psi_t rho(x,y) u      ("equivalence_action", (s,x,y,u))
///   T_t psi_t = phi_t T~_t                                ("equivalence_intertwining", (s,u))
/// and, when those pass and n >= 1, tau~_1 = tau_1 + delta(X) ("equivalence_order1", (u)).
/// Throws ShapeError when the series differ in tensor or order, or the data has the wrong shape.
Report check_equivalence(const DeformationSeries& d, const DeformationSeries& other, const EquivalenceData& eq);

/// True when tau~_1 - tau_1 lies in B^2.
bool same_infinitesimal_class(const ETComplex& complex, const DeformationSeries& d, const DeformationSeries& other);

}  // namespace etensor
