#include "doctest.h"

#include "etensor/cohomology.hpp"
#include "etensor/errors.hpp"
#include "etensor/graded.hpp"
#include "support.hpp"

using namespace etensor;
using namespace etensor::testing;

namespace {

AmbientPtr a4_adjoint() {
  const auto g = ThreeLieAlgebra::levi_civita4();
  return Ambient::make(g, adjoint_representation(g));
}

// Representations of 3-Leibniz algebras of dimension 2: an abelian algebra with commuting l
// and m = r = 0, or the induced representation of a rank-1 tensor on the abelian algebra of
// dimension 2 acting on Q^2 through a single operator.
LeibnizRepresentation dim2_instance(Rng& rng, int kind) {
  if (kind == 0) {
    const Matrix a = random_matrix(rng, 2, 2);
    auto rep = LeibnizRepresentation::zero(ThreeLeibnizAlgebra::from(ThreeLieAlgebra::abelian(2)), 2);
    for (auto& m : rep.l) m = small(rng) * a;
    return rep;
  }
  const auto amb = Ambient::make(ThreeLieAlgebra::abelian(2), Representation(2, 2, {{{0, 1}, random_matrix(rng, 2, 2)}}));
  const Vector a = random_vector(rng, 2), b = random_vector(rng, 2);
  Matrix t(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t(i, j) = a[i] * b[j];
  return induced_rep(EmbeddingTensor(amb, t));
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("induced representation formulas") {
    const auto amb = a4_adjoint();
    const auto& g = amb->algebra();
    const auto zero = induced_rep(EmbeddingTensor(amb, Matrix(4, 4)));
    for (std::size_t p = 0; p < 16; ++p) {
      CHECK(zero.l[p].is_zero());
      CHECK(zero.m[p].is_zero());
      CHECK(zero.r[p].is_zero());
    }
    const auto id = induced_rep(EmbeddingTensor(amb, Matrix::identity(4)));
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v) {
        CHECK(id.m_at(u, v).is_zero());
        for (std::size_t x = 0; x < 4; ++x) CHECK(id.l_at(u, v).column(x) == g.basis_bracket(u, v, x));
      }
    Matrix bad(4, 4);
    bad(0, 0) = bad(1, 1) = bad(2, 2) = 1;
    CHECK_THROWS_AS(induced_rep(EmbeddingTensor(amb, bad)), UnverifiedError);
  }

  TEST_CASE("r = -m and the induced representation passes on the corpus") {
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const auto rep = induced_rep(c.tensor);
      for (std::size_t p = 0; p < rep.m.size(); ++p) CHECK(rep.r[p] == -rep.m[p]);
      CHECK(check_leibniz_rep(rep).pass());
    }
    CHECK(check_leibniz_rep(LeibnizRepresentation::zero(ThreeLeibnizAlgebra::from(ThreeLieAlgebra::levi_civita4()), 3))
              .pass());
  }

  TEST_CASE("perturbing m breaks the second or fourth law") {
    const auto amb = a4_adjoint();
    const auto base = induced_rep(EmbeddingTensor(amb, Matrix::identity(4)));
    for (std::size_t p = 0; p < 16; ++p) {
      auto rep = base;
      rep.m[p](0, 1) += 1;
      const Report r = check_leibniz_rep(rep);
      CHECK(r.count("leibniz_rep2") + r.count("leibniz_rep4") > 0);
    }
  }

  TEST_CASE("n = 1 coboundary expansion") {
    Rng rng(61);
    const auto amb = a4_adjoint();
    const auto rep = induced_rep(EmbeddingTensor(amb, Scalar(2) * Matrix::identity(4)));
    const auto& c = rep.algebra;
    const Cochain f = random_cochain(rng, Space::plain, 0, 4, 4);
    const Matrix fm = f.to_matrix();
    const Cochain df = leibniz_coboundary(rep, f);
    CHECK(df.degree() == 1);
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y)
        for (std::size_t z = 0; z < 4; ++z) {
          Vector expected = fm.apply(c.basis_bracket(x, y, z));
          for (auto& s : expected) s = -s;
          axpy(expected, 1, rep.l_at(x, y).apply(fm.column(z)));
          axpy(expected, 1, rep.m_at(x, z).apply(fm.column(y)));
          axpy(expected, 1, rep.r_at(y, z).apply(fm.column(x)));
          CHECK(df.value(std::vector<int>{int(x), int(y), int(z)}) == expected);
        }
    CHECK(leibniz_coboundary(rep, Cochain(Space::plain, 1, 4, 4)).is_zero());
  }

  TEST_CASE("coboundary squares to zero on dim-2 instances") {
    Rng rng(67);
    for (int kind = 0; kind < 2; ++kind) {
      for (int trial = 0; trial < 3; ++trial) {
        const auto rep = dim2_instance(rng, kind);
        REQUIRE(check_leibniz_rep(rep).pass());
        const std::size_t dim = rep.dim(), carrier = rep.carrier_dim;
        for (int degree = 0; degree <= 1; ++degree) {
          const Cochain f = random_cochain(rng, Space::plain, degree, dim, carrier);
          CHECK(leibniz_coboundary(rep, leibniz_coboundary(rep, f)).is_zero());
        }
      }
    }
  }

  TEST_CASE("coboundary matrix agrees with the direct operator") {
    Rng rng(71);
    const auto amb = a4_adjoint();
    const auto rep = induced_rep(EmbeddingTensor(amb, Matrix::identity(4)));
    const Matrix d0 = leibniz_coboundary_matrix(rep, 0, Space::plain);
    const Cochain f = random_cochain(rng, Space::plain, 0, 4, 4);
    CHECK(d0.apply(f.coeffs()) == leibniz_coboundary(rep, f).coeffs());
  }

  TEST_CASE("delta") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    CHECK(wedge_dim(4) == 6);
    for (std::size_t p = 0; p < 6; ++p) CHECK(delta(id, unit(6, p)).is_zero());
    CHECK(delta(EmbeddingTensor(amb, Matrix(4, 4)), unit(6, 2)).is_zero());
    const auto flat = Ambient::make(ThreeLieAlgebra::abelian(3), Representation(3, 2));
    const EmbeddingTensor e(flat, Matrix(3, 2));
    Rng rng(73);
    CHECK(delta(e, random_vector(rng, 3)).is_zero());
    // e1^e2 acts by ad(e1,e2) on g and rho(e1,e2) on V.
    CHECK(wedge_ad(*amb, unit(6, 0)) == amb->rep()(0, 1));
    CHECK(wedge_rho(*amb, unit(6, 0)) == amb->rep()(0, 1));
  }

  TEST_CASE("complex property and the cocycle property of delta on the corpus") {
    Rng rng(79);
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const ETComplex complex(c.tensor);
      CHECK((complex.differential(2) * complex.differential(1)).is_zero());
      CHECK((complex.differential(3) * complex.differential(2)).is_zero());
      const std::size_t w = complex.cochain_dim(1);
      for (std::size_t p = 0; p < w; ++p) CHECK(complex.apply(delta(c.tensor, unit(w, p))).is_zero());
      CHECK(complex.apply(delta(c.tensor, random_vector(rng, w))).is_zero());
    }
  }

  TEST_CASE("closedness criterion for linear maps") {
    Rng rng(83);
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const ETComplex complex(c.tensor);
      const Ambient& a = c.tensor.ambient();
      const auto& g = a.algebra();
      const Matrix& t = c.tensor.map();
      const std::size_t dv = a.dim_v();
      std::vector<Matrix> thetas{random_matrix(rng, a.dim_g(), dv)};
      for (const Vector& z : kernel_basis(complex.differential(2))) thetas.push_back(complex.cochain(2, z).to_matrix());
      for (const Matrix& theta : thetas) {
        // [Tu,Tv,th w] + [th u,Tv,Tw] + [Tu,th v,Tw] - T(rho(th u,Tv)w) - T(rho(Tu,th v)w) - th(rho(Tu,Tv)w)
        Cochain criterion(Space::f, 1, dv, a.dim_g());
        for (std::size_t u = 0; u < dv; ++u)
          for (std::size_t v = 0; v < dv; ++v)
            for (std::size_t w = 0; w < dv; ++w) {
              const Vector tu = t.column(u), tv = t.column(v), tw = t.column(w);
              const Vector su = theta.column(u), sv = theta.column(v), sw = theta.column(w);
              const Vector ew = unit(dv, w);
              Vector r = g.bracket(tu, tv, sw);
              axpy(r, 1, g.bracket(su, tv, tw));
              axpy(r, 1, g.bracket(tu, sv, tw));
              axpy(r, -1, t.apply(a.act(su, tv, ew)));
              axpy(r, -1, t.apply(a.act(tu, sv, ew)));
              axpy(r, -1, theta.apply(a.act(tu, tv, ew)));
              for (std::size_t o = 0; o < r.size(); ++o) criterion.at(std::vector<int>{int(u), int(v), int(w)}, o) = r[o];
            }
        const Cochain d = complex.apply(Cochain::from_matrix(theta));
        CHECK(d == criterion);
        CHECK(d.is_zero() == criterion.is_zero());
      }
    }
  }

  TEST_CASE("degree shift: d theta = (-1)^(pairs) l1 theta") {
    Rng rng(89);
    const auto amb = a4_adjoint();
    const DerivedBracket bracket(amb);
    for (const Matrix& t : {Matrix::identity(4), Scalar(-1, 2) * Matrix::identity(4)}) {
      const EmbeddingTensor e(amb, t);
      const ETComplex complex(e);
      const TwistedBrackets tw(bracket, e);
      for (int pairs = 0; pairs <= 1; ++pairs) {
        const Cochain theta = random_cochain(rng, Space::f, pairs, 4, 4);
        const Cochain l1 = tw.l1(theta);
        CHECK(complex.apply(theta) == (pairs % 2 == 0 ? l1 : -l1));
      }
    }
  }

  TEST_CASE("cohomology of the abelian zero tensor") {
    const auto flat = Ambient::make(ThreeLieAlgebra::abelian(3), Representation(3, 2));
    const ETComplex complex(EmbeddingTensor(flat, Matrix(3, 2)));
    const auto h1 = cohomology_group(complex, 1);
    CHECK(h1.dim_h == 3);
    const auto h2 = cohomology_group(complex, 2);
    CHECK(h2.dim_z == 6);
    CHECK(h2.dim_b == 0);
    CHECK(h2.dim_h == 6);
    CHECK(h2.representatives.size() == 6);
  }

  TEST_CASE("Levi-Civita with T = Id: frozen dimensions") {
    const auto amb = a4_adjoint();
    const ETComplex complex(EmbeddingTensor(amb, Matrix::identity(4)));
    const auto h1 = cohomology_group(complex, 1);
    CHECK(h1.dim_z == 6);
    CHECK(h1.dim_b == 0);
    const auto h2 = cohomology_group(complex, 2);
    CHECK(h2.dim_z == 1);
    CHECK(h2.dim_b == 0);
    CHECK(h2.dim_h == 1);
    const auto h3 = cohomology_group(complex, 3);
    CHECK(h3.dim_z == 16);
    CHECK(h3.dim_b == 15);
    CHECK(h3.dim_h == 1);
    for (const auto& rep : h3.representatives) {
      CHECK(is_zero(complex.differential(3).apply(rep)));
      CHECK(!complex.coboundary_preimage(3, rep));
    }
  }

  TEST_CASE("cohomology invariants over the corpus") {
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const ETComplex complex(c.tensor);
      for (int k = 1; k <= 3; ++k) {
        const auto h = cohomology_group(complex, k);
        CHECK(h.dim_z >= h.dim_b);
        CHECK(h.dim_h == h.dim_z - h.dim_b);
        CHECK(h.representatives.size() == h.dim_h);
        for (const auto& rep : h.representatives) CHECK(!complex.coboundary_preimage(k, rep));
      }
    }
  }

  TEST_CASE("B^1 is zero and the size cap is enforced") {
    const auto amb = a4_adjoint();
    const ETComplex complex(EmbeddingTensor(amb, Matrix::identity(4)));
    CHECK(complex.coboundary_preimage(1, Vector(6)) == std::optional<Vector>(Vector{}));
    CHECK(!complex.coboundary_preimage(1, unit(6, 0)));
    CHECK_THROWS_AS(complex.cochain_dim(0), ShapeError);
    const std::size_t saved = entry_cap();
    set_entry_cap(1000);
    CHECK_THROWS_AS(complex.differential(3), SizeCapError);
    set_entry_cap(saved);
    Matrix bad(4, 4);
    bad(0, 0) = bad(1, 1) = bad(2, 2) = 1;
    CHECK_THROWS_AS(ETComplex(EmbeddingTensor(amb, bad)), UnverifiedError);
  }
}
