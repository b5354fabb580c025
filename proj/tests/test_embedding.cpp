#include "doctest.h"

#include "etensor/embedding.hpp"
#include "etensor/errors.hpp"
#include "support.hpp"

using namespace etensor;
using namespace etensor::testing;

namespace {

AmbientPtr a4_adjoint() {
  const auto g = ThreeLieAlgebra::levi_civita4();
  return Ambient::make(g, adjoint_representation(g));
}

Matrix diag1110() {
  Matrix t(4, 4);
  t(0, 0) = t(1, 1) = t(2, 2) = 1;
  return t;
}

// [Tu,Tv,Tw] - T(rho(Tu,Tv)w), straight from the definition.
Vector residual(const Ambient& a, const Matrix& t, std::size_t u, std::size_t v, std::size_t w) {
  Vector r = a.algebra().bracket(t.column(u), t.column(v), t.column(w));
  axpy(r, -1, t.apply(a.act(t.column(u), t.column(v), unit(a.dim_v(), w))));
  return r;
}

}  // namespace

TEST_SUITE("embedding") {
  TEST_CASE("ambient construction rejects a failing pair") {
    // [e1,e2,e3] = e1, [e1,e2,e4] = e3 violates the fundamental identity.
    const ThreeLieAlgebra broken({"a", "b", "c", "d"},
                                 SortedBracketTable{{{0, 1, 2}, Vector{1, 0, 0, 0}}, {{0, 1, 3}, Vector{0, 0, 1, 0}}});
    REQUIRE(!check_fundamental_identity(broken).pass());
    try {
      Ambient::make(broken, Representation(4, 1));
      FAIL("expected RejectedError");
    } catch (const RejectedError& e) {
      CHECK(!e.report().pass());
    }
    Matrix a(2, 2), b(2, 2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    try {
      Ambient::make(ThreeLieAlgebra::abelian(3), Representation(3, 2, {{{0, 1}, a}, {{0, 2}, b}}));
      FAIL("expected RejectedError");
    } catch (const RejectedError& e) {
      CHECK(e.report().count("rep1") > 0);
    }
  }

  TEST_CASE("shape and verification") {
    const auto amb = a4_adjoint();
    CHECK_THROWS_AS(EmbeddingTensor(amb, Matrix(4, 3)), ShapeError);
    CHECK(EmbeddingTensor(amb, Matrix::identity(4)).verified());
    CHECK(EmbeddingTensor(amb, Matrix(4, 4)).verified());
    const EmbeddingTensor bad(amb, diag1110());
    CHECK(!bad.verified());
    CHECK_THROWS_AS(bad.require_verified("test"), UnverifiedError);
    CHECK_THROWS_AS(induced_3leibniz(bad), UnverifiedError);
  }

  TEST_CASE("diag(1,1,1,0) on the Levi-Civita algebra") {
    const auto amb = a4_adjoint();
    const Report r = check_embedding_tensor(*amb, diag1110());
    // Six triples of distinct u,v,w < 3 and six of the form (u,v,3) with u != v < 3.
    CHECK(r.witnesses.size() == 12);
    std::size_t expected = 0;
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v)
        for (std::size_t w = 0; w < 4; ++w) expected += !is_zero(residual(*amb, diag1110(), u, v, w));
    CHECK(expected == 12);
    for (const auto& w : r.witnesses) {
      CHECK(w.axiom == "embedding_tensor");
      CHECK(w.residual == residual(*amb, diag1110(), w.indices[0], w.indices[1], w.indices[2]));
    }
  }

  TEST_CASE("graph criterion agrees with the embedding tensor identity") {
    Rng rng(23);
    const auto amb = a4_adjoint();
    std::vector<Matrix> ts{Matrix::identity(4), Matrix(4, 4), diag1110(), Scalar(3) * Matrix::identity(4)};
    for (int i = 0; i < 10; ++i) ts.push_back(random_matrix(rng, 4, 4));
    for (const auto& t : ts) {
      const EmbeddingTensor e(amb, t);
      CHECK(graph_subalgebra_check(e).pass() == check_embedding_tensor(e).pass());
      CHECK(graph_subalgebra_check(e).pass() == e.verified());
    }
  }

  TEST_CASE("induced 3-Leibniz algebra and T as a homomorphism") {
    const auto amb = a4_adjoint();
    for (const Matrix& t : {Matrix::identity(4), Scalar(2) * Matrix::identity(4)}) {
      const EmbeddingTensor e(amb, t);
      const auto l = induced_3leibniz(e);
      CHECK(check_3leibniz(l).pass());
      CHECK(check_algebra_homomorphism(l, ThreeLeibnizAlgebra::from(amb->algebra()), t).pass());
      CHECK(check_et_homomorphism(e, e, Matrix::identity(4), Matrix::identity(4)).pass());
    }
    for (const auto& c : corpus_tensors()) {
      CAPTURE(c.name);
      const auto l = induced_3leibniz(c.tensor);
      CHECK(check_3leibniz(l).pass());
      CHECK(check_algebra_homomorphism(l, ThreeLeibnizAlgebra::from(c.file.g), c.tensor.map()).pass());
    }
  }

  TEST_CASE("embedding tensor homomorphisms") {
    const auto amb = a4_adjoint();
    const EmbeddingTensor id(amb, Matrix::identity(4));
    const EmbeddingTensor twice(amb, Scalar(2) * Matrix::identity(4));
    // T phi_V = phi_g T' with phi_g = Id forces phi_V = 2 Id from T' = Id to T = 2 Id, but then
    // equivariance breaks.
    const Report r = check_et_homomorphism(id, twice, Matrix::identity(4), Scalar(2) * Matrix::identity(4));
    CHECK(r.count("intertwining") > 0);
    CHECK_THROWS_AS(check_et_homomorphism(id, id, Scalar(2) * Matrix::identity(4), Matrix::identity(4)),
                    RejectedError);
  }

  TEST_CASE("square-zero derivations") {
    const auto g3 = ThreeLieAlgebra({"a", "b", "c"}, SortedBracketTable{{{0, 1, 2}, Vector{1, 0, 0}}});
    Matrix d(3, 3);
    d(0, 1) = 1;
    const EmbeddingTensor e = from_square_zero_derivation(g3, d);
    CHECK(e.verified());
    CHECK(check_embedding_tensor(e).pass());

    Matrix not_derivation(3, 3);
    not_derivation(1, 0) = 1;
    try {
      from_square_zero_derivation(g3, not_derivation);
      FAIL("expected RejectedError");
    } catch (const RejectedError& ex) {
      CHECK(ex.report().count("derivation") > 0);
    }
    // Id is a derivation of an abelian algebra but not square-zero.
    try {
      from_square_zero_derivation(ThreeLieAlgebra::abelian(2), Matrix::identity(2));
      FAIL("expected RejectedError");
    } catch (const RejectedError& ex) {
      CHECK(ex.report().count("square_zero") > 0);
    }
  }

  TEST_CASE("crossed module from the adjoint action") {
    const auto a4 = ThreeLieAlgebra::levi_civita4();
    const EmbeddingTensor e = from_crossed_module(a4, a4, Matrix::identity(4), adjoint_representation(a4));
    CHECK(check_embedding_tensor(e).pass());
    try {
      from_crossed_module(a4, a4, Scalar(2) * Matrix::identity(4), adjoint_representation(a4));
      FAIL("expected RejectedError");
    } catch (const RejectedError& ex) {
      CHECK(!ex.report().pass());
      CHECK(ex.report().count("alpha_derivation") == 0);
    }
  }

  TEST_CASE("strong condition implies the embedding tensor identity") {
    const auto amb = a4_adjoint();
    Rng rng(29);
    std::vector<Matrix> ts{Matrix::identity(4), Matrix(4, 4), diag1110()};
    for (int i = 0; i < 6; ++i) ts.push_back(random_matrix(rng, 4, 4));
    for (const auto& t : ts) {
      const EmbeddingTensor e(amb, t);
      if (check_strong_condition(e).pass()) CHECK(e.verified());
    }
    CHECK(check_strong_condition(EmbeddingTensor(amb, Matrix::identity(4))).pass());
  }
}
