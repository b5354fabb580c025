#include "etensor/embedding.hpp"

#include <string>

#include "etensor/errors.hpp"

namespace etensor {

namespace {

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

Ambient::Ambient(ThreeLieAlgebra g, Representation rho) : g_(std::move(g)), rho_(std::move(rho)) {
  if (rho_.algebra_dim() != g_.dim()) throw ShapeError("Ambient: representation is for another algebra");
  Report report = check_fundamental_identity(g_);
  if (!report.pass()) throw RejectedError("the bracket violates the fundamental identity", std::move(report));
  report = check_representation(g_, rho_);
  if (!report.pass()) throw RejectedError("rho is not a representation", std::move(report));
}

EmbeddingTensor::EmbeddingTensor(AmbientPtr ambient, Matrix t) : ambient_(std::move(ambient)), t_(std::move(t)) {
  if (t_.rows() != ambient_->dim_g() || t_.cols() != ambient_->dim_v())
    throw ShapeError("embedding tensor must be a dim g x dim V matrix");
  verified_ = check_embedding_tensor(*ambient_, t_).pass();
}

void EmbeddingTensor::require_verified(const char* operation) const {
  if (!verified_) throw UnverifiedError(std::string(operation) + ": T is not an embedding tensor");
}

Report check_embedding_tensor(const Ambient& ambient, const Matrix& t) {
  if (t.rows() != ambient.dim_g() || t.cols() != ambient.dim_v())
    throw ShapeError("embedding tensor must be a dim g x dim V matrix");
  Report report;
  const std::size_t dv = ambient.dim_v();
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t v = 0; v < dv; ++v) {
      const Vector tu = t.column(u);
      const Vector tv = t.column(v);
      const Matrix act = ambient.rep().at(tu, tv);
      for (std::size_t w = 0; w < dv; ++w) {
        Vector r = ambient.algebra().bracket(tu, tv, t.column(w));
        axpy(r, -1, t.apply(act.column(w)));
        if (!is_zero(r)) report.add("embedding_tensor", {int(u), int(v), int(w)}, std::move(r));
      }
    }
  return report;
}

Report check_embedding_tensor(const EmbeddingTensor& e) { return check_embedding_tensor(e.ambient(), e.map()); }

Report graph_subalgebra_check(const EmbeddingTensor& e) {
  const Ambient& a = e.ambient();
  const std::size_t dg = a.dim_g();
  const std::size_t dv = a.dim_v();
  const ThreeLeibnizAlgebra product = hemisemidirect_product(a.algebra(), a.rep());
  auto graph_vector = [&](std::size_t u) {
    Vector x(dg + dv);
    const Vector tu = e.image(u);
    for (std::size_t i = 0; i < dg; ++i) x[i] = tu[i];
    x[dg + u] = 1;
    return x;
  };
  Report report;
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t w = 0; w < dv; ++w) {
        const Vector b = product.bracket(graph_vector(u), graph_vector(v), graph_vector(w));
        Vector g_part(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(dg));
        const Vector v_part(b.begin() + static_cast<std::ptrdiff_t>(dg), b.end());
        axpy(g_part, -1, e.map().apply(v_part));
        if (!is_zero(g_part)) report.add("graph_closure", {int(u), int(v), int(w)}, std::move(g_part));
      }
  return report;
}

ThreeLeibnizAlgebra induced_3leibniz(const EmbeddingTensor& e) {
  e.require_verified("induced_3leibniz");
  const std::size_t dv = e.ambient().dim_v();
  TrilinearMap c(dv);
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t v = 0; v < dv; ++v) {
      const Matrix act = e.ambient().rep().at(e.image(u), e.image(v));
      for (std::size_t w = 0; w < dv; ++w)
        for (std::size_t l = 0; l < dv; ++l) c(u, v, w, l) = act(l, w);
    }
  std::vector<std::string> labels;
  for (std::size_t w = 0; w < dv; ++w) labels.push_back("v" + std::to_string(w + 1));
  return ThreeLeibnizAlgebra(std::move(labels), std::move(c));
}

Report check_et_homomorphism(const EmbeddingTensor& source, const EmbeddingTensor& target, const Matrix& phi_g,
                             const Matrix& phi_v) {
  const Ambient& a = target.ambient();
  if (source.ambient_ptr() != target.ambient_ptr() &&
      !(source.ambient().algebra() == a.algebra() && source.ambient().rep() == a.rep()))
    throw ShapeError("check_et_homomorphism: tensors live over different (g, rho)");
  const std::size_t dg = a.dim_g();
  const std::size_t dv = a.dim_v();
  if (phi_g.rows() != dg || phi_g.cols() != dg || phi_v.rows() != dv || phi_v.cols() != dv)
    throw ShapeError("check_et_homomorphism: maps have wrong shape");

  Report endo = check_algebra_homomorphism(a.algebra(), a.algebra(), phi_g);
  if (!endo.pass()) throw RejectedError("phi_g is not a 3-Lie algebra endomorphism", std::move(endo));

  Report report;
  const Matrix lhs = target.map() * phi_v;
  const Matrix rhs = phi_g * source.map();
  for (std::size_t u = 0; u < dv; ++u) {
    Vector r = lhs.column(u);
    axpy(r, -1, rhs.column(u));
    if (!is_zero(r)) report.add("intertwining", {int(u)}, std::move(r));
  }
  for (std::size_t x = 0; x < dg; ++x)
    for (std::size_t y = 0; y < dg; ++y) {
      const Matrix left = phi_v * a.rep()(x, y);
      const Matrix right = a.rep().at(phi_g.column(x), phi_g.column(y)) * phi_v;
      for (std::size_t u = 0; u < dv; ++u) {
        Vector r = left.column(u);
        axpy(r, -1, right.column(u));
        if (!is_zero(r)) report.add("equivariance", {int(x), int(y), int(u)}, std::move(r));
      }
    }
  if (report.pass() && source.verified() && target.verified()) {
    Report induced = check_algebra_homomorphism(induced_3leibniz(source), induced_3leibniz(target), phi_v);
    for (auto& w : induced.witnesses) w.axiom = "induced_homomorphism";
    report.merge(induced);
  }
  return report;
}

EmbeddingTensor from_square_zero_derivation(const ThreeLieAlgebra& g, const Matrix& d) {
  Report report = check_derivation(g, d);
  const Matrix square = d * d;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    Vector r = square.column(x);
    if (!is_zero(r)) report.add("square_zero", {int(x)}, std::move(r));
  }
  if (!report.pass()) throw RejectedError("D is not a square-zero derivation", std::move(report));
  EmbeddingTensor e(Ambient::make(g, adjoint_representation(g)), d);
  if (!e.verified()) throw std::logic_error("square-zero derivation failed the embedding tensor identity");
  return e;
}

EmbeddingTensor from_crossed_module(const ThreeLieAlgebra& h, const ThreeLieAlgebra& g, const Matrix& mu,
                                    const Representation& alpha) {
  const std::size_t dh = h.dim();
  const std::size_t dg = g.dim();
  if (mu.rows() != dh || mu.cols() != dg) throw ShapeError("from_crossed_module: mu must be dim h x dim g");
  if (alpha.algebra_dim() != dh || alpha.carrier_dim() != dg)
    throw ShapeError("from_crossed_module: alpha must represent h on g");

  Report report = check_fundamental_identity(h);
  report.merge(check_fundamental_identity(g));
  report.merge(check_representation(h, alpha));
  report.merge(check_algebra_homomorphism(g, h, mu));
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = x + 1; y < dh; ++y) {
      Report der = check_derivation(g, alpha(x, y));
      for (auto& w : der.witnesses) {
        w.axiom = "alpha_derivation";
        w.indices.insert(w.indices.begin(), {int(x), int(y)});
      }
      report.merge(der);
    }

  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = 0; y < dh; ++y)
      for (std::size_t f = 0; f < dg; ++f) {
        // mu(alpha(x,y) f) = [x, y, mu f]_h
        Vector r = mu.apply(alpha(x, y).column(f));
        axpy(r, -1, h.bracket(basis_vector(dh, x), basis_vector(dh, y), mu.column(f)));
        if (!is_zero(r)) report.add("crossed1", {int(x), int(y), int(f)}, std::move(r));
      }
  for (std::size_t f = 0; f < dg; ++f)
    for (std::size_t k = 0; k < dg; ++k) {
      const Matrix act = alpha.at(mu.column(f), mu.column(k));
      for (std::size_t l = 0; l < dg; ++l) {
        // alpha(mu f, mu k) l = [f, k, l]_g
        Vector r = act.column(l);
        axpy(r, -1, g.basis_bracket(f, k, l));
        if (!is_zero(r)) report.add("crossed2", {int(f), int(k), int(l)}, std::move(r));
      }
    }
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t f = 0; f < dg; ++f)
      for (std::size_t k = 0; k < dg; ++k) {
        // alpha(x, mu f) k = -alpha(x, mu k) f
        Vector r = alpha.at(x, mu.column(f)).column(k);
        axpy(r, 1, alpha.at(x, mu.column(k)).column(f));
        if (!is_zero(r)) report.add("crossed3", {int(x), int(f), int(k)}, std::move(r));
      }
  if (!report.pass()) throw RejectedError("not a crossed module of 3-Lie algebras", std::move(report));

  EmbeddingTensor e(Ambient::make(h, alpha), mu);
  if (!e.verified()) throw std::logic_error("crossed module failed the embedding tensor identity");
  return e;
}

Report check_strong_condition(const EmbeddingTensor& e) {
  const Ambient& a = e.ambient();
  const std::size_t dg = a.dim_g();
  const std::size_t dv = a.dim_v();
  Report report;
  for (std::size_t x = 0; x < dg; ++x) {
    const Vector ex = basis_vector(dg, x);
    for (std::size_t u = 0; u < dv; ++u) {
      const Vector tu = e.image(u);
      const Matrix act = a.rep().at(ex, tu);
      for (std::size_t v = 0; v < dv; ++v) {
        Vector r = e.map().apply(act.column(v));
        axpy(r, -1, a.algebra().bracket(ex, tu, e.image(v)));
        if (!is_zero(r)) report.add("strong_condition", {int(x), int(u), int(v)}, std::move(r));
      }
    }
  }
  return report;
}

}  // namespace etensor
