#include "etensor/io.hpp"

#include <fstream>

#include "etensor/errors.hpp"

namespace etensor::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t as_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

int as_index(const Json& j, std::size_t bound, const char* what) {
  const std::size_t i = as_count(j, what);
  if (i >= bound) throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(i);
}

std::vector<std::string> default_labels(const char* stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

std::vector<std::string> labels_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw ParseError(std::string(what) + " must list one name per basis vector");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

// Key of a "coeffs" object: a decimal index or a basis name.
std::size_t output_index(const std::string& key, const std::vector<std::string>& labels) {
  if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
    const std::size_t i = std::stoul(key);
    if (i < labels.size()) return i;
    throw ParseError("bracket output index out of range: " + key);
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == key) return i;
  throw ParseError("unknown basis name: " + key);
}

SeriesData series_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  SeriesData s;
  s.order = static_cast<int>(as_count(require(j, "order"), "order"));
  const Json& taus = require(j, "taus");
  if (!taus.is_array() || taus.size() != static_cast<std::size_t>(s.order) + 1)
    throw ParseError("\"taus\" must hold order + 1 matrices");
  for (const auto& t : taus) s.taus.push_back(matrix_from_json(t, rows, cols));
  return s;
}

}  // namespace

Json to_json(const Scalar& s) { return format_scalar(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  throw ParseError("scalars must be \"p/q\" strings or integers");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of scalars");
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r]);
    if (row.size() != cols) throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  if (j.empty()) return Matrix();
  if (!j[0].is_array()) throw ParseError("matrix must be a list of rows");
  return matrix_from_json(j, j.size(), j[0].size());
}

Json to_json(const Cochain& c) {
  Json entries = Json::array();
  c.for_each_nonzero([&](std::span<const int> args, std::size_t out, const Scalar& value) {
    Json index = Json::array();
    for (int a : args) index.push_back(a);
    index.push_back(out);
    entries.push_back(Json{{"index", std::move(index)}, {"value", to_json(value)}});
  });
  return Json{{"degree", c.degree()},
              {"space", to_string(c.space())},
              {"in_dim", c.in_dim()},
              {"out_dim", c.out_dim()},
              {"entries", std::move(entries)}};
}

Cochain cochain_from_json(const Json& j) {
  const int degree = static_cast<int>(as_count(require(j, "degree"), "degree"));
  const Json& sp = require(j, "space");
  if (!sp.is_string()) throw ParseError("\"space\" must be a string");
  Space space;
  const std::string name = sp.get<std::string>();
  if (name == "F")
    space = Space::f;
  else if (name == "FULL")
    space = Space::full;
  else if (name == "PLAIN")
    space = Space::plain;
  else
    throw ParseError("unknown cochain space: " + name);
  const std::size_t in = as_count(require(j, "in_dim"), "in_dim");
  const std::size_t out = as_count(require(j, "out_dim"), "out_dim");
  Cochain c(space, degree, in, out);
  const Json& entries = require(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be a list");
  std::vector<int> args(c.arity());
  for (const auto& e : entries) {
    const Json& index = require(e, "index");
    if (!index.is_array() || index.size() != c.arity() + 1) throw ParseError("cochain index has wrong length");
    for (std::size_t a = 0; a < c.arity(); ++a) args[a] = as_index(index[a], in, "cochain argument");
    const int o = as_index(index[c.arity()], out, "cochain output");
    c.at(args, o) = scalar_from_json(require(e, "value"));
  }
  return c;
}

Json wedge_to_json(const Vector& x, std::size_t dim_g) {
  if (x.size() != wedge_dim(dim_g)) throw ShapeError("wedge vector has wrong length");
  Json entries = Json::array();
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim_g; ++i)
    for (std::size_t j = i + 1; j < dim_g; ++j, ++p)
      if (!is_zero(x[p])) entries.push_back(Json{{"index", {i, j}}, {"value", to_json(x[p])}});
  return Json{{"space", "WEDGE"}, {"entries", std::move(entries)}};
}

Json to_json(const Report& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses)
    ws.push_back(Json{{"axiom", w.axiom}, {"indices", w.indices}, {"residual", to_json(w.residual)}});
  return Json{{"status", r.pass() ? "pass" : "fail"}, {"witnesses", std::move(ws)}};
}

Json to_json(const CohomologyGroup& h, const ETComplex& complex) {
  Json reps = Json::array();
  for (const auto& v : h.representatives) {
    if (h.k == 1)
      reps.push_back(wedge_to_json(v, complex.tensor().ambient().dim_g()));
    else
      reps.push_back(to_json(complex.cochain(h.k, v)));
  }
  return Json{{"k", h.k}, {"dim_Z", h.dim_z}, {"dim_B", h.dim_b}, {"dim_H", h.dim_h}, {"representatives", reps}};
}

Json to_json(const SeriesData& s) {
  Json taus = Json::array();
  for (const auto& t : s.taus) taus.push_back(to_json(t));
  return Json{{"order", s.order}, {"taus", std::move(taus)}};
}

AlgebraFile parse_algebra(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  AlgebraFile f;
  const std::size_t dg = as_count(require(j, "dim_g"), "dim_g");
  std::vector<std::string> labels =
      j.contains("basis_g") ? labels_from_json(j["basis_g"], dg, "basis_g") : default_labels("e", dg);

  SortedBracketTable table;
  if (j.contains("bracket")) {
    const Json& br = j["bracket"];
    if (!br.is_array()) throw ParseError("\"bracket\" must be a list");
    for (const auto& e : br) {
      const int a = as_index(require(e, "i"), dg, "bracket index");
      const int b = as_index(require(e, "j"), dg, "bracket index");
      const int c = as_index(require(e, "k"), dg, "bracket index");
      if (!(a < b && b < c)) throw ParseError("bracket triples must be sorted: i < j < k");
      const Json& coeffs = require(e, "coeffs");
      if (!coeffs.is_object()) throw ParseError("\"coeffs\" must be an object");
      Vector v(dg);
      for (const auto& [key, value] : coeffs.items()) v[output_index(key, labels)] += scalar_from_json(value);
      if (!table.emplace(std::array<int, 3>{a, b, c}, std::move(v)).second)
        throw ParseError("bracket triple listed twice");
    }
  }
  f.g = ThreeLieAlgebra(labels, table);

  const std::size_t dv = j.contains("dim_V") ? as_count(j["dim_V"], "dim_V") : 0;
  f.basis_v = j.contains("basis_V") ? labels_from_json(j["basis_V"], dv, "basis_V") : default_labels("v", dv);
  std::map<std::pair<int, int>, Matrix> upper;
  if (j.contains("rho")) {
    const Json& rho = j["rho"];
    if (!rho.is_array()) throw ParseError("\"rho\" must be a list");
    for (const auto& e : rho) {
      const int a = as_index(require(e, "i"), dg, "rho index");
      const int b = as_index(require(e, "j"), dg, "rho index");
      if (!(a < b)) throw ParseError("rho pairs must be sorted: i < j");
      if (!upper.emplace(std::pair{a, b}, matrix_from_json(require(e, "matrix"), dv, dv)).second)
        throw ParseError("rho pair listed twice");
    }
  }
  f.rho = Representation(dg, dv, upper);

  if (j.contains("T")) f.t = matrix_from_json(j["T"], dg, dv);
  if (j.contains("deformation")) f.deformation = series_from_json(j["deformation"], dg, dv);
  if (j.contains("equivalent")) f.equivalent = series_from_json(j["equivalent"], dg, dv);
  if (j.contains("equivalence")) {
    const Json& e = j["equivalence"];
    EquivalenceData eq;
    eq.x = vector_from_json(require(e, "X"));
    if (eq.x.size() != wedge_dim(dg)) throw ParseError("\"X\" must have one coordinate per pair i < j");
    if (e.contains("phis"))
      for (const auto& m : e["phis"]) eq.phis.push_back(matrix_from_json(m, dg, dg));
    if (e.contains("psis"))
      for (const auto& m : e["psis"]) eq.psis.push_back(matrix_from_json(m, dv, dv));
    f.equivalence = std::move(eq);
  }
  return f;
}

Json to_json(const AlgebraFile& f) {
  const std::size_t dg = f.dim_g();
  const std::size_t dv = f.dim_v();
  Json bracket = Json::array();
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j)
      for (std::size_t k = j + 1; k < dg; ++k) {
        const Vector v = f.g.basis_bracket(i, j, k);
        if (is_zero(v)) continue;
        Json coeffs = Json::object();
        for (std::size_t l = 0; l < dg; ++l)
          if (!is_zero(v[l])) coeffs[std::to_string(l)] = to_json(v[l]);
        bracket.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"coeffs", std::move(coeffs)}});
      }
  Json rho = Json::array();
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j)
      if (!f.rho(i, j).is_zero()) rho.push_back(Json{{"i", i}, {"j", j}, {"matrix", to_json(f.rho(i, j))}});

  Json out{{"dim_g", dg}, {"basis_g", f.g.labels()}, {"bracket", std::move(bracket)},
           {"dim_V", dv}, {"basis_V", f.basis_v},    {"rho", std::move(rho)}};
  if (f.t) out["T"] = to_json(*f.t);
  if (f.deformation) out["deformation"] = to_json(*f.deformation);
  if (f.equivalent) out["equivalent"] = to_json(*f.equivalent);
  if (f.equivalence) {
    Json phis = Json::array();
    for (const auto& m : f.equivalence->phis) phis.push_back(to_json(m));
    Json psis = Json::array();
    for (const auto& m : f.equivalence->psis) psis.push_back(to_json(m));
    out["equivalence"] = Json{{"X", to_json(f.equivalence->x)}, {"phis", std::move(phis)}, {"psis", std::move(psis)}};
  }
  return out;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AlgebraFile load_algebra(const std::filesystem::path& path) {
  try {
    return parse_algebra(read_json(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace etensor::io
