#include "etensor/deformation.hpp"

#include <stdexcept>

#include "etensor/errors.hpp"

namespace etensor {

namespace {

// Coefficient list of a truncated series of maps; index i holds the t^i term.
Matrix coefficient(const std::vector<Matrix>& series, int i, std::size_t rows, std::size_t cols) {
  if (i >= 0 && static_cast<std::size_t>(i) < series.size()) return series[i];
  return Matrix(rows, cols);
}

bool same_tensor(const EmbeddingTensor& a, const EmbeddingTensor& b) {
  if (a.ambient_ptr() != b.ambient_ptr()) {
    if (!(a.ambient().algebra() == b.ambient().algebra() && a.ambient().rep() == b.ambient().rep())) return false;
  }
  return a.map() == b.map();
}

}  // namespace

DeformationSeries::DeformationSeries(EmbeddingTensor e, std::vector<Matrix> taus)
    : e_(std::move(e)), taus_(std::move(taus)) {
  e_.require_verified("DeformationSeries");
  if (taus_.empty()) throw ShapeError("a deformation needs at least tau_0");
  for (const Matrix& t : taus_)
    if (t.rows() != e_.map().rows() || t.cols() != e_.map().cols())
      throw ShapeError("deformation coefficient has wrong shape");
  if (!(taus_[0] == e_.map())) throw ShapeError("tau_0 must equal the embedding tensor");
}

DeformationSeries DeformationSeries::extended(Matrix next) const {
  std::vector<Matrix> taus = taus_;
  taus.push_back(std::move(next));
  return DeformationSeries(e_, std::move(taus));
}

Cochain series_residual(const DeformationSeries& d, int s, int max_index) {
  const Ambient& amb = d.tensor().ambient();
  const std::size_t dg = amb.dim_g();
  const std::size_t dv = amb.dim_v();
  const int top = std::min(max_index, d.order());
  Cochain out(Space::f, 1, dv, dg);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      const int k = s - i - j;
      if (k < 0 || k > top) continue;
      const Matrix& ti = d.tau(i);
      const Matrix& tj = d.tau(j);
      const Matrix& tk = d.tau(k);
      for (std::size_t u = 0; u < dv; ++u)
        for (std::size_t v = 0; v < dv; ++v) {
          const Vector x = ti.column(u);
          const Vector y = tj.column(v);
          if (is_zero(x) || is_zero(y)) continue;
          const Matrix act = amb.rep().at(x, y);
          for (std::size_t w = 0; w < dv; ++w) {
            Vector r = amb.algebra().bracket(x, y, tk.column(w));
            axpy(r, -1, tk.apply(act.column(w)));
            const int args[3] = {int(u), int(v), int(w)};
            for (std::size_t o = 0; o < dg; ++o) out.at(args, o) += r[o];
          }
        }
    }
  return out;
}

Report check_order_n(const DeformationSeries& d) {
  Report report;
  for (int s = 0; s <= d.order(); ++s) {
    const Cochain r = series_residual(d, s, d.order());
    std::vector<int> args(3);
    for (std::size_t t = 0; t < r.tuple_count(); ++t) {
      r.decode_tuple(t, args);
      Vector v = r.value(args);
      if (!is_zero(v)) report.add("order", {s, args[0], args[1], args[2]}, std::move(v));
    }
  }
  return report;
}

Cochain infinitesimal(const DeformationSeries& d) {
  if (d.order() < 1) throw UnverifiedError("infinitesimal: the series has no t^1 term");
  if (!check_order_n(d).pass()) throw UnverifiedError("infinitesimal: the series is not an order-n deformation");
  Cochain tau1 = Cochain::from_matrix(d.tau(1), Space::f);
  if (!ETComplex(d.tensor()).apply(tau1).is_zero())
    throw std::logic_error("infinitesimal: tau_1 is not a cocycle");
  return tau1;
}

Cochain obstruction(const DeformationSeries& d) {
  if (!check_order_n(d).pass()) throw UnverifiedError("obstruction: the series is not an order-n deformation");
  Cochain ob = series_residual(d, d.order() + 1, d.order());
  if (!ETComplex(d.tensor()).apply(ob).is_zero()) throw std::logic_error("obstruction: Ob is not a cocycle");
  return ob;
}

Cochain obstruction_via_brackets(const DerivedBracket& bracket, const DeformationSeries& d) {
  const int n = d.order();
  const Ambient& amb = d.tensor().ambient();
  std::vector<Cochain> taus;
  for (const Matrix& t : d.taus()) taus.push_back(Cochain::from_matrix(t, Space::f));
  Cochain sum(Space::f, 1, amb.dim_v(), amb.dim_g());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const int k = n + 1 - i - j;
      if (k < 0 || k > n) continue;
      sum += bracket(taus[i], taus[j], taus[k]);
    }
  return Scalar(1, 6) * sum;
}

Extension extend(const ETComplex& complex, const DeformationSeries& d) {
  if (!same_tensor(complex.tensor(), d.tensor())) throw ShapeError("extend: complex belongs to another tensor");
  Extension out;
  out.obstruction = obstruction(d);
  if (const auto x = solve(complex.differential(2), out.obstruction.coeffs())) {
    out.tau_next = -complex.cochain(2, *x).to_matrix();
  }
  return out;
}

Extension extend(const DeformationSeries& d) { return extend(ETComplex(d.tensor()), d); }

Report check_equivalence(const DeformationSeries& d, const DeformationSeries& other, const EquivalenceData& eq) {
  if (!same_tensor(d.tensor(), other.tensor())) throw ShapeError("check_equivalence: series deform different tensors");
  if (d.order() != other.order()) throw ShapeError("check_equivalence: series have different orders");
  const int n = d.order();
  const Ambient& amb = d.tensor().ambient();
  const std::size_t dg = amb.dim_g();
  const std::size_t dv = amb.dim_v();
  const std::size_t higher = n >= 2 ? static_cast<std::size_t>(n - 1) : 0;
  if (!(eq.phis.empty() || eq.phis.size() == higher) || !(eq.psis.empty() || eq.psis.size() == higher))
    throw ShapeError("check_equivalence: expected phi_2..phi_n and psi_2..psi_n");

  std::vector<Matrix> phi{Matrix::identity(dg), wedge_ad(amb, eq.x)};
  std::vector<Matrix> psi{Matrix::identity(dv), wedge_rho(amb, eq.x)};
  for (std::size_t i = 0; i < higher; ++i) {
    Matrix p = eq.phis.empty() ? Matrix(dg, dg) : eq.phis[i];
    Matrix q = eq.psis.empty() ? Matrix(dv, dv) : eq.psis[i];
    if (p.rows() != dg || p.cols() != dg || q.rows() != dv || q.cols() != dv)
      throw ShapeError("check_equivalence: phi_i or psi_i has wrong shape");
    phi.push_back(std::move(p));
    psi.push_back(std::move(q));
  }

  Report report;
  const auto& g = amb.algebra();
  for (int s = 0; s <= n; ++s) {
    const Matrix phi_s = coefficient(phi, s, dg, dg);
    const Matrix psi_s = coefficient(psi, s, dv, dv);
    for (std::size_t x = 0; x < dg; ++x)
      for (std::size_t y = 0; y < dg; ++y) {
        for (std::size_t z = 0; z < dg; ++z) {
          Vector r = phi_s.apply(g.basis_bracket(x, y, z));
          for (int i = 0; i <= s; ++i)
            for (int j = 0; i + j <= s; ++j) {
              const int k = s - i - j;
              axpy(r, -1,
                   g.bracket(coefficient(phi, i, dg, dg).column(x), coefficient(phi, j, dg, dg).column(y),
                             coefficient(phi, k, dg, dg).column(z)));
            }
          if (!is_zero(r)) report.add("equivalence_endomorphism", {s, int(x), int(y), int(z)}, std::move(r));
        }
        Matrix act = -(psi_s * amb.rep()(x, y));
        for (int i = 0; i <= s; ++i)
          for (int j = 0; i + j <= s; ++j) {
            const int k = s - i - j;
            act += amb.rep().at(coefficient(phi, i, dg, dg).column(x), coefficient(phi, j, dg, dg).column(y)) *
                   coefficient(psi, k, dv, dv);
          }
        for (std::size_t u = 0; u < dv; ++u) {
          Vector r = act.column(u);
          if (!is_zero(r)) report.add("equivalence_action", {s, int(x), int(y), int(u)}, std::move(r));
        }
      }
    Matrix lhs(dg, dv);
    for (int i = 0; i <= s; ++i) {
      lhs += d.tau(i) * coefficient(psi, s - i, dv, dv);
      lhs -= coefficient(phi, s - i, dg, dg) * other.tau(i);
    }
    for (std::size_t u = 0; u < dv; ++u) {
      Vector r = lhs.column(u);
      if (!is_zero(r)) report.add("equivalence_intertwining", {s, int(u)}, std::move(r));
    }
  }

  if (report.pass() && n >= 1) {
    const Matrix expected = d.tau(1) + delta(d.tensor(), eq.x).to_matrix();
    for (std::size_t u = 0; u < dv; ++u) {
      Vector r = other.tau(1).column(u);
      axpy(r, -1, expected.column(u));
      if (!is_zero(r)) report.add("equivalence_order1", {int(u)}, std::move(r));
    }
  }
  return report;
}

bool same_infinitesimal_class(const ETComplex& complex, const DeformationSeries& d, const DeformationSeries& other) {
  if (d.order() < 1 || other.order() < 1) throw ShapeError("same_infinitesimal_class: series need a t^1 term");
  const Cochain diff = Cochain::from_matrix(other.tau(1) - d.tau(1), Space::f);
  return complex.coboundary_preimage(2, diff.coeffs()).has_value();
}

}  // namespace etensor
