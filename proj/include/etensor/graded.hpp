#pragma once

#include <span>
#include <vector>

#include "etensor/cochain.hpp"
#include "etensor/embedding.hpp"

namespace etensor {

/// An (i, n-i)-shuffle sigma: perm[t] = sigma(t+1) - 1, increasing on [0,i) and on [i,n).
struct Shuffle {
  std::vector<int> perm;
  int sign = 1;
};

/// All (first, second)-shuffles in lexicographic order of their first block.
std::vector<Shuffle> shuffles(int first, int second);

/// Koszul sign of listing elements of the given degrees in the order perm[0], perm[1], ...
int koszul_sign(std::span<const int> degrees, std::span<const int> perm);

/// The Rotkiewicz composition P o Q in C^{p+q}(E, E). Both cochains must be FULL over the
/// same space.
Cochain leibniz_compose(const Cochain& p, const Cochain& q);

/// [P, Q] = P o Q - (-1)^{pq} Q o P.
Cochain graded_bracket(const Cochain& p, const Cochain& q);

/// The degree-1 FULL cochain (x+u, y+v, z+w) -> [x,y,z]_g + rho(x,y) w on g (+) V.
Cochain mu_box_rho(const Ambient& ambient);

/// Extends an F-cochain by zero to g (+) V; values land in the g-block.
Cochain embed_f(const Cochain& f, std::size_t dim_g);

/// Restricts a FULL cochain on g (+) V to V-inputs and keeps the g-component of its values.
Cochain project_f(const Cochain& p, std::size_t dim_g, std::size_t dim_v);

/// Higher derived brackets of the data (C*(g(+)V), C*(V,g), projection, mu_box_rho).
class DerivedBracket {
 public:
  explicit DerivedBracket(AmbientPtr ambient);

  const Ambient& ambient() const { return *ambient_; }
  const Cochain& delta() const { return delta_; }

  /// {P, Q, R} = project [[[Delta, P], Q], R] for F-cochains.
  Cochain operator()(const Cochain& p, const Cochain& q, const Cochain& r) const;

  /// project [...[[Delta, a_1], a_2], ..., a_k] for any number of F-cochains.
  Cochain derived(std::span<const Cochain> args) const;

  /// (1/6){T, T, T}; zero exactly when T is an embedding tensor.
  Cochain mc_defect(const Matrix& t) const;

  /// F-cochain from a linear map V -> g, checking the shape.
  Cochain as_cochain(const Matrix& t) const;

 private:
  void require_f(const Cochain& c) const;

  AmbientPtr ambient_;
  Cochain delta_;
};

/// {P, Q, R} for the ambient pair of `bracket`.
inline Cochain lie3_bracket(const DerivedBracket& bracket, const Cochain& p, const Cochain& q, const Cochain& r) {
  return bracket(p, q, r);
}

/// The L-infinity operations obtained by twisting {.,.,.} with an embedding tensor T:
/// l1(P) = 1/2 {T,T,P}, l2(P,Q) = {T,P,Q}, l3(P,Q,R) = {P,Q,R}.
class TwistedBrackets {
 public:
  /// Throws UnverifiedError unless e is an embedding tensor.
  TwistedBrackets(const DerivedBracket& bracket, const EmbeddingTensor& e);

  Cochain l1(const Cochain& p) const;
  Cochain l2(const Cochain& p, const Cochain& q) const;
  Cochain l3(const Cochain& p, const Cochain& q, const Cochain& r) const;

  /// l1(T') + 1/2 l2(T',T') + 1/6 l3(T',T',T').
  Cochain mc_residual(const Matrix& t_prime) const;

 private:
  const DerivedBracket& bracket_;
  Cochain t_;
};

}  // namespace etensor
