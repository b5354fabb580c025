#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "etensor/cohomology.hpp"
#include "etensor/deformation.hpp"

namespace etensor::io {

using Json = nlohmann::ordered_json;

/// Coefficients of a truncated series as stored on disk; taus[0] is T.
struct SeriesData {
  int order = 0;
  std::vector<Matrix> taus;
};

/// Contents of an algebra file. Indices are 0-based. Optional blocks:
///   "T": dim_g x dim_V matrix
///   "deformation", "equivalent": {"order": n, "taus": [tau_0, ..., tau_n]}
///   "equivalence": {"X": [wedge coordinates], "phis": [...], "psis": [...]}
struct AlgebraFile {
  ThreeLieAlgebra g;
  std::vector<std::string> basis_v;
  Representation rho;
  std::optional<Matrix> t;
  std::optional<SeriesData> deformation;
  std::optional<SeriesData> equivalent;
  std::optional<EquivalenceData> equivalence;

  std::size_t dim_g() const { return g.dim(); }
  std::size_t dim_v() const { return rho.carrier_dim(); }
};

/// Scalars are "p/q" strings; JSON integers are accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// Row lists: [["p/q", ...], ...].
Json to_json(const Matrix& m);
/// Throws ParseError unless j is a rectangular list of `rows` rows of `cols` scalars.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
/// Shape taken from the data; an empty list gives a 0 x 0 matrix.
Matrix matrix_from_json(const Json& j);

/// {"degree","space","in_dim","out_dim","entries":[{"index":[args..., out],"value"}]},
/// listing nonzero coefficients in storage order.
Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

/// g ^ g element as {"space":"WEDGE","entries":[{"index":[i,j],"value"}]} with i < j.
Json wedge_to_json(const Vector& x, std::size_t dim_g);

/// {"status":"pass"|"fail","witnesses":[{"axiom","indices","residual"}]}.
Json to_json(const Report& r);

/// {"k","dim_Z","dim_B","dim_H","representatives":[...]}.
Json to_json(const CohomologyGroup& h, const ETComplex& complex);

Json to_json(const SeriesData& s);

AlgebraFile parse_algebra(const Json& j);
Json to_json(const AlgebraFile& f);

/// Reads and parses a file; throws ParseError on I/O or syntax problems.
Json read_json(const std::filesystem::path& path);
AlgebraFile load_algebra(const std::filesystem::path& path);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace etensor::io
