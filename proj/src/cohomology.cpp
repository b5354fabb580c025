#include "etensor/cohomology.hpp"

#include "etensor/errors.hpp"

namespace etensor {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

// sum_a v[a] fam(a, j)
Matrix first_slot(const std::vector<Matrix>& fam, std::size_t dim, const Vector& v, std::size_t j) {
  Matrix out(fam[0].rows(), fam[0].cols());
  for (std::size_t a = 0; a < dim; ++a)
    if (!is_zero(v[a])) out += v[a] * fam[a * dim + j];
  return out;
}

// sum_a v[a] fam(i, a)
Matrix second_slot(const std::vector<Matrix>& fam, std::size_t dim, std::size_t i, const Vector& v) {
  Matrix out(fam[0].rows(), fam[0].cols());
  for (std::size_t a = 0; a < dim; ++a)
    if (!is_zero(v[a])) out += v[a] * fam[i * dim + a];
  return out;
}

// Copies the pairs of args other than `skip` (or all of the first `keep` pairs when skip < 0)
// into fargs, followed by `last`.
void fill_without(std::span<const int> args, int pairs, int skip, int last, std::vector<int>& fargs) {
  std::size_t pos = 0;
  for (int p = 0; p < pairs; ++p) {
    if (p == skip) continue;
    fargs[pos++] = args[2 * p];
    fargs[pos++] = args[2 * p + 1];
  }
  fargs[pos] = last;
}

// Enumerates the terms of (df)(args) = sum coef * A f(fargs), A = identity when action is null.
// args holds n pairs followed by z; f has n - 1 pairs.
template <class Fn>
void coboundary_terms(const LeibnizRepresentation& rep, std::span<const int> args, std::vector<int>& fargs,
                      Fn&& fn) {
  const TrilinearMap& c = rep.algebra.constants();
  const std::size_t dim = rep.dim();
  const int n = static_cast<int>(args.size() / 2);
  const int z = args[2 * n];
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };

  for (int j = 0; j < n; ++j) {
    const int xj = args[2 * j];
    const int yj = args[2 * j + 1];
    const int sj = sign(j + 1);  // (-1)^j, 1-based j
    for (int k = j + 1; k < n; ++k) {
      const int xk = args[2 * k];
      const int yk = args[2 * k + 1];
      const std::size_t slot = 2 * static_cast<std::size_t>(k - 1);
      fill_without(args, n, j, z, fargs);
      for (std::size_t l = 0; l < dim; ++l) {
        const Scalar& a = c(xj, yj, xk, l);
        if (is_zero(a)) continue;
        fargs[slot] = static_cast<int>(l);
        fn(Scalar(sj * a), fargs, nullptr);
      }
      fargs[slot] = xk;
      for (std::size_t l = 0; l < dim; ++l) {
        const Scalar& a = c(xj, yj, yk, l);
        if (is_zero(a)) continue;
        fargs[slot + 1] = static_cast<int>(l);
        fn(Scalar(sj * a), fargs, nullptr);
      }
    }
    fill_without(args, n, j, z, fargs);
    const std::size_t last = fargs.size() - 1;
    for (std::size_t l = 0; l < dim; ++l) {
      const Scalar& a = c(xj, yj, z, l);
      if (is_zero(a)) continue;
      fargs[last] = static_cast<int>(l);
      fn(Scalar(sj * a), fargs, nullptr);
    }
    fargs[last] = z;
    fn(Scalar(-sj), fargs, &rep.l_at(xj, yj));
  }

  const int s = sign(n + 1);
  const int xn = args[2 * (n - 1)];
  const int yn = args[2 * (n - 1) + 1];
  fill_without(args, n - 1, -1, yn, fargs);
  fn(Scalar(s), fargs, &rep.m_at(xn, z));
  fargs.back() = xn;
  fn(Scalar(s), fargs, &rep.r_at(yn, z));
}

void check_coboundary_input(const LeibnizRepresentation& rep, const Cochain& f) {
  if (f.in_dim() != rep.dim() || f.out_dim() != rep.carrier_dim)
    throw ShapeError("leibniz_coboundary: cochain does not match the representation");
  if (f.degree() < 0) throw ShapeError("leibniz_coboundary: negative degree");
}

std::size_t checked_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > entry_cap() / a) throw SizeCapError("dense matrix exceeds the entry cap");
  return a * b;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = checked_product(out, base);
  return out;
}

}  // namespace

LeibnizRepresentation LeibnizRepresentation::zero(ThreeLeibnizAlgebra algebra, std::size_t carrier_dim) {
  const std::size_t d = algebra.dim();
  std::vector<Matrix> zeros(d * d, Matrix(carrier_dim, carrier_dim));
  return {std::move(algebra), carrier_dim, zeros, zeros, zeros};
}

LeibnizRepresentation induced_rep(const EmbeddingTensor& e) {
  e.require_verified("induced_rep");
  const Ambient& amb = e.ambient();
  const std::size_t dg = amb.dim_g();
  const std::size_t dv = amb.dim_v();
  LeibnizRepresentation rep = LeibnizRepresentation::zero(induced_3leibniz(e), dg);
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t v = 0; v < dv; ++v) {
      const Vector tu = e.image(u);
      const Vector tv = e.image(v);
      const Vector ev = unit(dv, v);
      Matrix& l = rep.l[u * dv + v];
      Matrix& m = rep.m[u * dv + v];
      for (std::size_t x = 0; x < dg; ++x) {
        const Vector ex = unit(dg, x);
        const Vector lx = amb.algebra().bracket(tu, tv, ex);
        Vector mx = amb.algebra().bracket(tu, ex, tv);
        axpy(mx, -1, e.map().apply(amb.act(tu, ex, ev)));
        for (std::size_t o = 0; o < dg; ++o) {
          l(o, x) = lx[o];
          m(o, x) = mx[o];
        }
      }
      rep.r[u * dv + v] = -m;
    }
  return rep;
}

Report check_leibniz_rep(const LeibnizRepresentation& rep) {
  const std::size_t d = rep.dim();
  if (rep.l.size() != d * d || rep.m.size() != d * d || rep.r.size() != d * d)
    throw ShapeError("check_leibniz_rep: wrong number of operators");
  Report report;
  if (d == 0) return report;
  const auto& L = rep.algebra;
  const auto& l = rep.l;
  const auto& m = rep.m;
  const auto& r = rep.r;
  for (std::size_t x1 = 0; x1 < d; ++x1)
    for (std::size_t x2 = 0; x2 < d; ++x2)
      for (std::size_t x3 = 0; x3 < d; ++x3)
        for (std::size_t x4 = 0; x4 < d; ++x4) {
          const std::vector<int> idx{int(x1), int(x2), int(x3), int(x4)};
          const Vector b123 = L.basis_bracket(x1, x2, x3);
          const Vector b124 = L.basis_bracket(x1, x2, x4);
          const Vector b234 = L.basis_bracket(x2, x3, x4);
          const Matrix& l12 = l[x1 * d + x2];

          const std::vector<Matrix>* fams[3] = {&l, &m, &r};
          const char* labels[3] = {"leibniz_rep1", "leibniz_rep2", "leibniz_rep3"};
          for (int f = 0; f < 3; ++f) {
            const auto& fam = *fams[f];
            Matrix res = l12 * fam[x3 * d + x4];
            res -= first_slot(fam, d, b123, x4);
            res -= second_slot(fam, d, x3, b124);
            res -= fam[x3 * d + x4] * l12;
            if (!res.is_zero()) report.add(labels[f], idx, flatten(res));
          }

          Matrix r4 = second_slot(m, d, x1, b234);
          r4 -= r[x3 * d + x4] * m[x1 * d + x2];
          r4 -= m[x2 * d + x4] * m[x1 * d + x3];
          r4 -= l[x2 * d + x3] * m[x1 * d + x4];
          if (!r4.is_zero()) report.add("leibniz_rep4", idx, flatten(r4));

          Matrix r5 = second_slot(r, d, x1, b234);
          r5 -= r[x3 * d + x4] * r[x1 * d + x2];
          r5 -= m[x2 * d + x4] * r[x1 * d + x3];
          r5 -= l[x2 * d + x3] * r[x1 * d + x4];
          if (!r5.is_zero()) report.add("leibniz_rep5", idx, flatten(r5));
        }
  return report;
}

Cochain leibniz_coboundary(const LeibnizRepresentation& rep, const Cochain& f) {
  check_coboundary_input(rep, f);
  const std::size_t od = f.out_dim();
  Cochain out(f.space(), f.degree() + 1, f.in_dim(), od);
  std::vector<int> args(out.arity());
  std::vector<int> fargs(f.arity());
  Vector acc(od);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    out.decode_tuple(t, args);
    for (auto& a : acc) a = 0;
    coboundary_terms(rep, args, fargs, [&](const Scalar& coef, const std::vector<int>& fa, const Matrix* action) {
      if (action == nullptr) {
        for (std::size_t o = 0; o < od; ++o) acc[o] += coef * f.at(fa, o);
      } else {
        axpy(acc, coef, action->apply(f.value(fa)));
      }
    });
    for (std::size_t o = 0; o < od; ++o) out.coeffs()[t * od + o] = acc[o];
  }
  return out;
}

Matrix leibniz_coboundary_matrix(const LeibnizRepresentation& rep, int degree, Space space) {
  if (degree < 0) throw ShapeError("leibniz_coboundary_matrix: negative degree");
  const std::size_t od = rep.carrier_dim;
  const Cochain src(space, degree, rep.dim(), od);
  const Cochain dst(space, degree + 1, rep.dim(), od);
  Matrix d(dst.size(), src.size());
  checked_product(dst.size(), src.size());
  std::vector<int> args(dst.arity());
  std::vector<int> fargs(src.arity());
  for (std::size_t t = 0; t < dst.tuple_count(); ++t) {
    dst.decode_tuple(t, args);
    coboundary_terms(rep, args, fargs, [&](const Scalar& coef, const std::vector<int>& fa, const Matrix* action) {
      const std::size_t col = src.tuple_index(fa) * od;
      for (std::size_t o = 0; o < od; ++o) {
        if (action == nullptr) {
          d(t * od + o, col + o) += coef;
          continue;
        }
        for (std::size_t p = 0; p < od; ++p) {
          const Scalar& a = (*action)(o, p);
          if (!is_zero(a)) d(t * od + o, col + p) += coef * a;
        }
      }
    });
  }
  return d;
}

std::size_t wedge_dim(std::size_t dim_g) { return dim_g * (dim_g - (dim_g > 0 ? 1 : 0)) / 2; }

Matrix wedge_ad(const Ambient& amb, const Vector& x) {
  const std::size_t dg = amb.dim_g();
  if (x.size() != wedge_dim(dg)) throw ShapeError("wedge vector has wrong length");
  Matrix ad(dg, dg);
  std::size_t p = 0;
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j, ++p) {
      if (is_zero(x[p])) continue;
      for (std::size_t k = 0; k < dg; ++k) {
        const Vector b = amb.algebra().basis_bracket(i, j, k);
        for (std::size_t l = 0; l < dg; ++l) ad(l, k) += x[p] * b[l];
      }
    }
  return ad;
}

Matrix wedge_rho(const Ambient& amb, const Vector& x) {
  const std::size_t dg = amb.dim_g();
  if (x.size() != wedge_dim(dg)) throw ShapeError("wedge vector has wrong length");
  Matrix out(amb.dim_v(), amb.dim_v());
  std::size_t p = 0;
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j, ++p)
      if (!is_zero(x[p])) out += x[p] * amb.rep()(i, j);
  return out;
}

Cochain delta(const EmbeddingTensor& e, const Vector& x) {
  const Ambient& amb = e.ambient();
  return Cochain::from_matrix(e.map() * wedge_rho(amb, x) - wedge_ad(amb, x) * e.map(), Space::f);
}

ETComplex::ETComplex(EmbeddingTensor e) : e_(std::move(e)) {
  e_.require_verified("ETComplex");
  rep_ = induced_rep(e_);
}

std::size_t ETComplex::cochain_dim(int k) const {
  if (k < 1) throw ShapeError("cochain levels start at 1");
  const std::size_t dg = e_.ambient().dim_g();
  if (k == 1) return wedge_dim(dg);
  const std::size_t dv = e_.ambient().dim_v();
  return checked_product(power(dv, 2 * static_cast<std::size_t>(k - 2) + 1), dg);
}

const Matrix& ETComplex::differential(int k) const {
  const std::size_t rows = cochain_dim(k + 1);
  const std::size_t cols = cochain_dim(k);
  checked_product(rows, cols);
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  Matrix d;
  if (k == 1) {
    std::vector<Vector> columns;
    for (std::size_t p = 0; p < cols; ++p) columns.push_back(delta(e_, unit(cols, p)).coeffs());
    d = Matrix::from_columns(columns, rows);
  } else {
    d = leibniz_coboundary_matrix(rep_, k - 2, Space::f);
  }
  return cache_.emplace(k, std::move(d)).first->second;
}

Cochain ETComplex::apply(const Cochain& c) const {
  const Ambient& amb = e_.ambient();
  if (c.space() != Space::f || c.in_dim() != amb.dim_v() || c.out_dim() != amb.dim_g())
    throw ShapeError("ETComplex::apply: expected an F-cochain over this tensor");
  return leibniz_coboundary(rep_, c);
}

Cochain ETComplex::cochain(int k, const Vector& coords) const {
  if (k < 2) throw ShapeError("ETComplex::cochain: level 1 is not a cochain space");
  Cochain c(Space::f, k - 2, e_.ambient().dim_v(), e_.ambient().dim_g());
  if (coords.size() != c.size()) throw ShapeError("ETComplex::cochain: wrong number of coordinates");
  c.coeffs() = coords;
  return c;
}

std::optional<Vector> ETComplex::coboundary_preimage(int k, const Vector& coords) const {
  if (coords.size() != cochain_dim(k)) throw ShapeError("coboundary_preimage: wrong number of coordinates");
  if (k == 1) {
    if (is_zero(coords)) return Vector{};
    return std::nullopt;
  }
  return solve(differential(k - 1), coords);
}

CohomologyGroup cohomology_group(const ETComplex& complex, int k) {
  CohomologyGroup out;
  out.k = k;
  const std::vector<Vector> z = kernel_basis(complex.differential(k));
  std::vector<Vector> b;
  Echelon b_form;
  if (k > 1) {
    b_form = row_reduce(complex.differential(k - 1).transpose());
    for (std::size_t r = 0; r < b_form.rank(); ++r) b.push_back(b_form.reduced.row(r));
  }
  out.dim_z = z.size();
  out.dim_b = b.size();
  out.dim_h = quotient_dim(z, b);

  // Reduce each Z-basis vector modulo B, then keep those independent of the ones already kept.
  std::vector<std::pair<std::size_t, Vector>> kept;  // (pivot, reduced row)
  for (const Vector& v : z) {
    Vector rep = v;
    for (std::size_t r = 0; r < b_form.rank(); ++r) {
      const std::size_t c = b_form.pivot_cols[r];
      if (!is_zero(rep[c])) axpy(rep, -Scalar(rep[c]), b_form.reduced.row(r));
    }
    Vector w = rep;
    for (const auto& [c, row] : kept)
      if (!is_zero(w[c])) axpy(w, -Scalar(w[c] / row[c]), row);
    std::size_t pivot = 0;
    while (pivot < w.size() && is_zero(w[pivot])) ++pivot;
    if (pivot == w.size()) continue;
    kept.emplace_back(pivot, std::move(w));
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

}  // namespace etensor
