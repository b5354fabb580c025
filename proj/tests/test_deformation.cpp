#include "doctest.h"

#include "etensor/deformation.hpp"
#include "etensor/errors.hpp"
#include "support.hpp"

using namespace etensor;
using namespace etensor::testing;

namespace {

AmbientPtr a4_adjoint() {
  const auto g = ThreeLieAlgebra::levi_civita4();
  return Ambient::make(g, adjoint_representation(g));
}

// Ob(u,v,w) evaluated term by term from its defining sum.
Cochain obstruction_oracle(const DeformationSeries& d) {
  const Ambient& a = d.tensor().ambient();
  const int n = d.order();
  const std::size_t dv = a.dim_v();
  Cochain out(Space::f, 1, dv, a.dim_g());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const int k = n + 1 - i - j;
      if (k < 0 || k > n) continue;
      for (std::size_t u = 0; u < dv; ++u)
        for (std::size_t v = 0; v < dv; ++v)
          for (std::size_t w = 0; w < dv; ++w) {
            const Vector tu = d.tau(i).column(u), tv = d.tau(j).column(v);
            Vector r = a.algebra().bracket(tu, tv, d.tau(k).column(w));
            axpy(r, -1, d.tau(k).apply(a.act(tu, tv, unit(dv, w))));
            const std::vector<int> args{int(u), int(v), int(w)};
            for (std::size_t o = 0; o < r.size(); ++o) out.at(args, o) += r[o];
          }
    }
  return out;
}

}  // namespace

TEST_SUITE("deformation") {
  TEST_CASE("construction") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    CHECK_THROWS_AS(DeformationSeries(id, {}), ShapeError);
    CHECK_THROWS_AS(DeformationSeries(id, {Matrix(4, 4)}), ShapeError);
    CHECK_THROWS_AS(DeformationSeries(id, {Matrix::identity(4), Matrix(3, 4)}), ShapeError);
    Matrix bad(4, 4);
    bad(0, 0) = bad(1, 1) = bad(2, 2) = 1;
    CHECK_THROWS_AS(DeformationSeries(EmbeddingTensor(amb, bad), {bad}), UnverifiedError);
    const DeformationSeries d(id, {Matrix::identity(4)});
    CHECK(d.order() == 0);
    CHECK(check_order_n(d).pass());
    CHECK(d.extended(Matrix(4, 4)).order() == 1);
  }

  TEST_CASE("trivial series pass at every order") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    for (int n = 1; n <= 3; ++n) {
      std::vector<Matrix> taus{Matrix::identity(4)};
      for (int i = 1; i <= n; ++i) taus.push_back(Matrix(4, 4));
      const DeformationSeries d(id, taus);
      CHECK(check_order_n(d).pass());
      CHECK(obstruction(d).is_zero());
      const Extension x = extend(d);
      REQUIRE(x.tau_next);
      CHECK(x.tau_next->is_zero());
    }
  }

  TEST_CASE("order-1 residual is d tau_1 and matches the displayed relation") {
    Rng rng(97);
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const ETComplex complex(c.tensor);
      const Ambient& a = c.tensor.ambient();
      const Matrix& t = c.tensor.map();
      const std::size_t dv = a.dim_v();
      const Matrix tau1 = random_matrix(rng, a.dim_g(), dv);
      const DeformationSeries d(c.tensor, {t, tau1});
      const Cochain res = series_residual(d, 1, 1);
      CHECK(res == complex.apply(Cochain::from_matrix(tau1)));
      for (std::size_t u = 0; u < dv; ++u)
        for (std::size_t v = 0; v < dv; ++v)
          for (std::size_t w = 0; w < dv; ++w) {
            const Vector tu = t.column(u), tv = t.column(v), tw = t.column(w);
            const Vector su = tau1.column(u), sv = tau1.column(v), sw = tau1.column(w);
            const Vector ew = unit(dv, w);
            Vector lhs = a.algebra().bracket(tu, tv, sw);
            axpy(lhs, 1, a.algebra().bracket(su, tv, tw));
            axpy(lhs, 1, a.algebra().bracket(tu, sv, tw));
            axpy(lhs, -1, tau1.apply(a.act(tu, tv, ew)));
            axpy(lhs, -1, t.apply(a.act(su, tv, ew)));
            axpy(lhs, -1, t.apply(a.act(tu, sv, ew)));
            CHECK(res.value(std::vector<int>{int(u), int(v), int(w)}) == lhs);
          }
      const Report r = check_order_n(d);
      CHECK(r.pass() == res.is_zero());
    }
  }

  TEST_CASE("infinitesimals are cocycles") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    const DeformationSeries zero(id, {Matrix::identity(4), Matrix(4, 4)});
    CHECK(infinitesimal(zero).is_zero());
    const DeformationSeries line(id, {Matrix::identity(4), Matrix::identity(4)});
    CHECK(infinitesimal(line) == Cochain::from_matrix(Matrix::identity(4)));
    const ETComplex complex(id);
    CHECK(complex.apply(infinitesimal(line)).is_zero());
    CHECK_THROWS_AS(infinitesimal(DeformationSeries(id, {Matrix::identity(4)})), UnverifiedError);
    Matrix off(4, 4);
    off(0, 1) = 1;
    CHECK_THROWS_AS(infinitesimal(DeformationSeries(id, {Matrix::identity(4), off})), UnverifiedError);

    // tau_1 = delta(X) on the rank-2 tensor.
    for (const auto& c : corpus_tensors()) {
      if (c.name != "a4_trivial_rank2") continue;
      const Cochain dx = delta(c.tensor, Vector{1, -1, 0, 2, 0, 1});
      const DeformationSeries d(c.tensor, {c.tensor.map(), dx.to_matrix()});
      CHECK(check_order_n(d).pass());
      CHECK(ETComplex(c.tensor).apply(infinitesimal(d)).is_zero());
    }
  }

  TEST_CASE("obstruction agrees with its definition and with derived brackets") {
    for (const auto& c : corpus_tensors()) {
      if (!c.file.deformation) continue;
      CAPTURE(c.name);
      const DeformationSeries d(c.tensor, c.file.deformation->taus);
      REQUIRE(check_order_n(d).pass());
      const Cochain ob = obstruction(d);
      CHECK(ob == obstruction_oracle(d));
      CHECK(ob == obstruction_via_brackets(DerivedBracket(c.tensor.ambient_ptr()), d));
      CHECK(ETComplex(c.tensor).apply(ob).is_zero());
    }
  }

  TEST_CASE("extension of (1 + t) Id and of the obstructed series") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    DeformationSeries d(id, {Matrix::identity(4), Matrix::identity(4)});
    for (int n = 1; n <= 3; ++n) {
      const Extension x = extend(d);
      REQUIRE(x.tau_next);
      d = d.extended(*x.tau_next);
      CHECK(check_order_n(d).pass());
    }

    for (const auto& c : corpus_tensors()) {
      if (c.name != "deform_obstructed") continue;
      const DeformationSeries ob(c.tensor, c.file.deformation->taus);
      const Extension x = extend(ob);
      CHECK(!x.tau_next);
      CHECK(!x.obstruction.is_zero());
      const ETComplex complex(c.tensor);
      CHECK(!complex.coboundary_preimage(3, x.obstruction.coeffs()));
    }
  }

  TEST_CASE("extension is sound and complete on random order-1 series") {
    Rng rng(101);
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const ETComplex complex(c.tensor);
      const auto z = kernel_basis(complex.differential(2));
      for (int trial = 0; trial < 2; ++trial) {
        Vector coords(complex.cochain_dim(2));
        for (const auto& v : z) axpy(coords, small(rng), v);
        const DeformationSeries d(c.tensor, {c.tensor.map(), complex.cochain(2, coords).to_matrix()});
        REQUIRE(check_order_n(d).pass());
        const Extension x = extend(complex, d);
        const bool solvable = solve(complex.differential(2), obstruction(d).coeffs()).has_value();
        CHECK(x.tau_next.has_value() == solvable);
        if (x.tau_next) CHECK(check_order_n(d.extended(*x.tau_next)).pass());
      }
    }
  }

  TEST_CASE("vanishing H^3: every order-1 deformation extends to order 3") {
    Rng rng(103);
    std::size_t instances = 0;
    for (const auto& c : corpus_tensors()) {
      const ETComplex complex(c.tensor);
      const auto h3 = cohomology_group(complex, 3);
      if (h3.dim_h != 0) {
        // A failed extension is always certified by a class in H^3.
        CHECK(h3.representatives.size() == h3.dim_h);
        continue;
      }
      ++instances;
      CAPTURE(c.name);
      Vector coords(complex.cochain_dim(2));
      for (const auto& v : kernel_basis(complex.differential(2))) axpy(coords, small(rng), v);
      DeformationSeries d(c.tensor, {c.tensor.map(), complex.cochain(2, coords).to_matrix()});
      for (int n = 1; n <= 3; ++n) {
        const Extension x = extend(complex, d);
        REQUIRE(x.tau_next);
        d = d.extended(*x.tau_next);
        CHECK(check_order_n(d).pass());
      }
    }
    MESSAGE("corpus instances with H^3 = 0: " << instances);
  }

  TEST_CASE("equivalences") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    const DeformationSeries d(id, {Matrix::identity(4), Matrix::identity(4)});
    CHECK(check_equivalence(d, d, {Vector(6), {}, {}}).pass());
    CHECK_THROWS_AS(check_equivalence(d, DeformationSeries(id, {Matrix::identity(4)}), {Vector(6), {}, {}}),
                    ShapeError);
    CHECK_THROWS_AS(check_equivalence(d, d, {Vector(5), {}, {}}), ShapeError);

    for (const auto& c : corpus_tensors()) {
      if (!c.file.equivalence) continue;
      CAPTURE(c.name);
      const DeformationSeries a(c.tensor, c.file.deformation->taus);
      const DeformationSeries b(c.tensor, c.file.equivalent->taus);
      CHECK(check_equivalence(a, b, *c.file.equivalence).pass());
      Matrix tilde = a.tau(1) + delta(c.tensor, c.file.equivalence->x).to_matrix();
      CHECK(b.tau(1) == tilde);
      const ETComplex complex(c.tensor);
      CHECK(same_infinitesimal_class(complex, a, b));
      // Swapping the roles needs -X.
      Vector minus = c.file.equivalence->x;
      for (auto& s : minus) s = -s;
      CHECK(check_equivalence(b, a, {minus, {}, {}}).pass());
      CHECK(!check_equivalence(b, a, *c.file.equivalence).pass());
    }
  }
}
