// Writes the bundled example files. Every derived value (equivalent series, flags) comes from
// the library, and each file is checked before it is written.
//
//   etensor_make_corpus <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "etensor/cohomology.hpp"
#include "etensor/deformation.hpp"
#include "etensor/errors.hpp"
#include "etensor/io.hpp"

namespace {

using namespace etensor;
namespace fs = std::filesystem;

io::AlgebraFile base(ThreeLieAlgebra g, Representation rho, Matrix t) {
  io::AlgebraFile f;
  f.g = std::move(g);
  f.rho = std::move(rho);
  for (std::size_t i = 0; i < f.rho.carrier_dim(); ++i) f.basis_v.push_back("v" + std::to_string(i + 1));
  f.t = std::move(t);
  return f;
}

Matrix units(std::size_t rows, std::size_t cols, std::initializer_list<std::pair<int, int>> ones) {
  Matrix m(rows, cols);
  for (auto [r, c] : ones) m(r, c) = 1;
  return m;
}

ThreeLieAlgebra one_bracket(std::size_t dim, std::array<int, 3> triple, std::size_t target) {
  Vector v(dim);
  v[target] = 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return ThreeLieAlgebra(labels, SortedBracketTable{{triple, v}});
}

EmbeddingTensor tensor_of(const io::AlgebraFile& f) { return EmbeddingTensor(Ambient::make(f.g, f.rho), *f.t); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("corpus check failed: " + what);
}

void write(const fs::path& dir, const std::string& name, const io::AlgebraFile& f) {
  std::ofstream out(dir / name);
  out << io::dump(io::to_json(f));
  std::cout << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: etensor_make_corpus <output-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  try {
    const ThreeLieAlgebra a4 = ThreeLieAlgebra::levi_civita4();
    const Representation ad4 = adjoint_representation(a4);

    auto abelian = base(ThreeLieAlgebra::abelian(2), Representation(2, 2), Matrix(2, 2));
    expect(tensor_of(abelian).verified(), "abelian");
    write(dir, "abelian2_zero.json", abelian);

    auto id = base(a4, ad4, Matrix::identity(4));
    expect(tensor_of(id).verified(), "a4 identity");
    write(dir, "a4_adjoint_identity.json", id);

    auto twice = base(a4, ad4, Scalar(2) * Matrix::identity(4));
    expect(tensor_of(twice).verified(), "a4 2 identity");
    write(dir, "a4_adjoint_double.json", twice);

    auto zero = base(a4, ad4, Matrix(4, 4));
    write(dir, "a4_adjoint_zero.json", zero);

    auto rank2 = base(a4, Representation(4, 2), units(4, 2, {{0, 0}, {1, 1}}));
    expect(tensor_of(rank2).verified(), "a4 trivial rank 2");
    write(dir, "a4_trivial_rank2.json", rank2);

    // D e2 = e1 on [e1,e2,e3] = e1: a derivation with D^2 = 0.
    const ThreeLieAlgebra g3 = one_bracket(3, {0, 1, 2}, 0);
    const Matrix d3 = units(3, 3, {{0, 1}});
    expect(from_square_zero_derivation(g3, d3).verified(), "g3 square-zero derivation");
    write(dir, "g3_square_zero.json", base(g3, adjoint_representation(g3), d3));

    // D e1 = e4 on [e1,e2,e3] = e4.
    const ThreeLieAlgebra g4 = one_bracket(4, {0, 1, 2}, 3);
    const Matrix d4 = units(4, 4, {{3, 0}});
    expect(from_square_zero_derivation(g4, d4).verified(), "g4 square-zero derivation");
    write(dir, "g4_square_zero.json", base(g4, adjoint_representation(g4), d4));

    auto not_et = base(a4, ad4, units(4, 4, {{0, 0}, {1, 1}, {2, 2}}));
    expect(!tensor_of(not_et).verified(), "a4 diag(1,1,1,0) is not an embedding tensor");
    write(dir, "a4_adjoint_not_et.json", not_et);

    // T = 0 with tau_1 the inclusion e_i -> e_i: the t^3 coefficient is [u,v,w] and B^3 = 0.
    auto obstructed = base(a4, Representation(4, 3), Matrix(4, 3));
    const Matrix inclusion = units(4, 3, {{0, 0}, {1, 1}, {2, 2}});
    obstructed.deformation = io::SeriesData{2, {Matrix(4, 3), inclusion, Matrix(4, 3)}};
    {
      const DeformationSeries d(tensor_of(obstructed), obstructed.deformation->taus);
      expect(check_order_n(d).pass(), "obstructed series is an order-2 deformation");
      expect(!extend(d).tau_next, "obstructed series does not extend");
    }
    write(dir, "deform_obstructed.json", obstructed);

    // T_t = (1 + t) Id.
    auto unobstructed = base(a4, ad4, Matrix::identity(4));
    unobstructed.deformation = io::SeriesData{1, {Matrix::identity(4), Matrix::identity(4)}};
    {
      const DeformationSeries d(tensor_of(unobstructed), unobstructed.deformation->taus);
      expect(check_order_n(d).pass(), "unobstructed series is an order-1 deformation");
      expect(extend(d).tau_next.has_value(), "unobstructed series extends");
    }
    write(dir, "deform_unobstructed.json", unobstructed);

    // tau~_1 = tau_1 + delta(X) for X = e1^e2 + 2 e3^e4, tau_1 a cocycle of the rank-2 tensor.
    auto equivalence = rank2;
    {
      const EmbeddingTensor e = tensor_of(equivalence);
      const ETComplex complex(e);
      const auto z = kernel_basis(complex.differential(2));
      Vector c(complex.cochain_dim(2));
      for (const auto& v : z) axpy(c, 1, v);
      const Matrix tau1 = complex.cochain(2, c).to_matrix();
      const Vector x{1, 0, 0, 0, 0, 2};
      const Matrix tilde = tau1 + delta(e, x).to_matrix();
      equivalence.deformation = io::SeriesData{1, {*equivalence.t, tau1}};
      equivalence.equivalent = io::SeriesData{1, {*equivalence.t, tilde}};
      equivalence.equivalence = EquivalenceData{x, {}, {}};
      const DeformationSeries a(e, equivalence.deformation->taus);
      const DeformationSeries b(e, equivalence.equivalent->taus);
      expect(check_order_n(a).pass() && check_order_n(b).pass(), "equivalence series are order-1 deformations");
      expect(!(tau1 == tilde), "equivalence fixture is not the identity");
      expect(check_equivalence(a, b, *equivalence.equivalence).pass(), "equivalence data");
    }
    write(dir, "equivalence_rank2.json", equivalence);
  } catch (const std::exception& e) {
    std::cerr << "etensor_make_corpus: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
