#include "etensor/graded.hpp"

#include "etensor/errors.hpp"

namespace etensor {

namespace {

// Nonzero coefficients of a cochain with decoded argument tuples, bucketed by the value of
// one chosen argument position.
struct NonzeroTable {
  std::size_t arity = 0;
  std::vector<int> args;  // arity ints per entry
  std::vector<int> outs;
  std::vector<const Scalar*> values;

  explicit NonzeroTable(const Cochain& c) : arity(c.arity()) {
    c.for_each_nonzero([&](std::span<const int> a, std::size_t out, const Scalar& x) {
      args.insert(args.end(), a.begin(), a.end());
      outs.push_back(static_cast<int>(out));
      values.push_back(&x);
    });
  }

  std::size_t size() const { return outs.size(); }
  const int* entry(std::size_t i) const { return args.data() + i * arity; }

  std::vector<std::vector<std::size_t>> bucket_by(std::size_t position, std::size_t dim) const {
    std::vector<std::vector<std::size_t>> buckets(dim);
    for (std::size_t i = 0; i < size(); ++i) buckets[static_cast<std::size_t>(entry(i)[position])].push_back(i);
    return buckets;
  }
};

void require_full(const Cochain& c, const char* op) {
  if (c.space() != Space::full) throw ShapeError(std::string(op) + ": expected a FULL cochain");
}

}  // namespace

std::vector<Shuffle> shuffles(int first, int second) {
  std::vector<Shuffle> out;
  const int n = first + second;
  std::vector<int> chosen(static_cast<std::size_t>(first));
  // enumerate increasing sequences for the first block
  auto emit = [&]() {
    Shuffle s;
    s.perm.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    int displacement = 0;
    for (int t = 0; t < first; ++t) {
      s.perm.push_back(chosen[static_cast<std::size_t>(t)]);
      used[static_cast<std::size_t>(chosen[static_cast<std::size_t>(t)])] = true;
      displacement += chosen[static_cast<std::size_t>(t)] - t;
    }
    for (int v = 0; v < n; ++v) {
      if (!used[static_cast<std::size_t>(v)]) s.perm.push_back(v);
    }
    s.sign = displacement % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  };
  auto recurse = [&](auto&& self, int t, int start) -> void {
    if (t == first) {
      emit();
      return;
    }
    for (int v = start; v <= n - (first - t); ++v) {
      chosen[static_cast<std::size_t>(t)] = v;
      self(self, t + 1, v + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

int koszul_sign(std::span<const int> degrees, std::span<const int> perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b] && (degrees[static_cast<std::size_t>(perm[a])] * degrees[static_cast<std::size_t>(perm[b])]) % 2 != 0)
        sign = -sign;
    }
  return sign;
}

Cochain leibniz_compose(const Cochain& p, const Cochain& q) {
  require_full(p, "leibniz_compose");
  require_full(q, "leibniz_compose");
  if (p.in_dim() != q.in_dim() || p.out_dim() != q.out_dim() || p.in_dim() != p.out_dim())
    throw ShapeError("leibniz_compose: cochains live on different spaces");

  const int pd = p.degree();
  const int qd = q.degree();
  const std::size_t dim = p.in_dim();
  Cochain out(Space::full, pd + qd, dim, dim);

  const NonzeroTable pz(p);
  const NonzeroTable qz(q);
  if (pz.size() == 0 || qz.size() == 0) return out;

  std::vector<int> args(out.arity());
  Scalar product;
  auto set_pair = [&](int position, int first, int second) {
    args[static_cast<std::size_t>(2 * position)] = first;
    args[static_cast<std::size_t>(2 * position + 1)] = second;
  };

  // Substitution of Q into the left (variant 0) or right (variant 1) entry of P's k-th pair.
  for (int k = 1; k <= pd; ++k) {
    const auto slot = static_cast<std::size_t>(2 * (k - 1));
    const auto sh = shuffles(k - 1, qd);
    const int block_sign = ((k - 1) * qd) % 2 == 0 ? 1 : -1;
    for (int variant = 0; variant < 2; ++variant) {
      const auto buckets = pz.bucket_by(slot + static_cast<std::size_t>(variant), dim);
      for (std::size_t qi = 0; qi < qz.size(); ++qi) {
        const int* qa = qz.entry(qi);
        const int q_last = qa[2 * qd];
        for (std::size_t pi : buckets[static_cast<std::size_t>(qz.outs[qi])]) {
          const int* pa = pz.entry(pi);
          product = *pz.values[pi] * *qz.values[qi];
          for (const auto& s : sh) {
            for (int t = 0; t < k - 1; ++t) set_pair(s.perm[static_cast<std::size_t>(t)], pa[2 * t], pa[2 * t + 1]);
            for (int t = 0; t < qd; ++t)
              set_pair(s.perm[static_cast<std::size_t>(k - 1 + t)], qa[2 * t], qa[2 * t + 1]);
            if (variant == 0) {
              set_pair(k + qd - 1, q_last, pa[slot + 1]);
            } else {
              set_pair(k + qd - 1, pa[slot], q_last);
            }
            for (int t = k; t < pd; ++t) set_pair(t + qd, pa[2 * t], pa[2 * t + 1]);
            args.back() = pa[2 * pd];
            Scalar& target = out.at(args, static_cast<std::size_t>(pz.outs[pi]));
            if (s.sign * block_sign > 0) {
              target += product;
            } else {
              target -= product;
            }
          }
        }
      }
    }
  }

  // Substitution of Q into P's final input.
  {
    const auto sh = shuffles(pd, qd);
    const int block_sign = (pd * qd) % 2 == 0 ? 1 : -1;
    const auto buckets = pz.bucket_by(static_cast<std::size_t>(2 * pd), dim);
    for (std::size_t qi = 0; qi < qz.size(); ++qi) {
      const int* qa = qz.entry(qi);
      for (std::size_t pi : buckets[static_cast<std::size_t>(qz.outs[qi])]) {
        const int* pa = pz.entry(pi);
        product = *pz.values[pi] * *qz.values[qi];
        for (const auto& s : sh) {
          for (int t = 0; t < pd; ++t) set_pair(s.perm[static_cast<std::size_t>(t)], pa[2 * t], pa[2 * t + 1]);
          for (int t = 0; t < qd; ++t) set_pair(s.perm[static_cast<std::size_t>(pd + t)], qa[2 * t], qa[2 * t + 1]);
          args.back() = qa[2 * qd];
          Scalar& target = out.at(args, static_cast<std::size_t>(pz.outs[pi]));
          if (s.sign * block_sign > 0) {
            target += product;
          } else {
            target -= product;
          }
        }
      }
    }
  }
  return out;
}

Cochain graded_bracket(const Cochain& p, const Cochain& q) {
  Cochain out = leibniz_compose(p, q);
  const Cochain reverse = leibniz_compose(q, p);
  if ((p.degree() * q.degree()) % 2 == 0) {
    out -= reverse;
  } else {
    out += reverse;
  }
  return out;
}

Cochain mu_box_rho(const Ambient& ambient) {
  const ThreeLeibnizAlgebra product = hemisemidirect_product(ambient.algebra(), ambient.rep());
  const std::size_t dim = product.dim();
  Cochain delta(Space::full, 1, dim, dim);
  std::vector<int> args(3);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        args = {int(i), int(j), int(k)};
        for (std::size_t l = 0; l < dim; ++l) delta.at(args, l) = product.constants()(i, j, k, l);
      }
  return delta;
}

Cochain embed_f(const Cochain& f, std::size_t dim_g) {
  if (f.space() != Space::f) throw ShapeError("embed_f: expected an F cochain");
  if (f.out_dim() != dim_g) throw ShapeError("embed_f: output dimension differs from dim g");
  const std::size_t dim = dim_g + f.in_dim();
  Cochain out(Space::full, f.degree(), dim, dim);
  std::vector<int> shifted(f.arity());
  f.for_each_nonzero([&](std::span<const int> args, std::size_t o, const Scalar& x) {
    for (std::size_t i = 0; i < args.size(); ++i) shifted[i] = args[i] + static_cast<int>(dim_g);
    out.at(shifted, o) = x;
  });
  return out;
}

Cochain project_f(const Cochain& p, std::size_t dim_g, std::size_t dim_v) {
  if (p.space() != Space::full) throw ShapeError("project_f: expected a FULL cochain");
  if (p.in_dim() != dim_g + dim_v) throw ShapeError("project_f: dimension differs from dim g + dim V");
  Cochain out(Space::f, p.degree(), dim_v, dim_g);
  std::vector<int> args(p.arity());
  std::vector<int> shifted(p.arity());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    out.decode_tuple(t, args);
    for (std::size_t i = 0; i < args.size(); ++i) shifted[i] = args[i] + static_cast<int>(dim_g);
    const std::size_t base = p.tuple_index(shifted) * p.out_dim();
    for (std::size_t o = 0; o < dim_g; ++o) out.coeffs()[t * dim_g + o] = p.coeffs()[base + o];
  }
  return out;
}

DerivedBracket::DerivedBracket(AmbientPtr ambient) : ambient_(std::move(ambient)), delta_(mu_box_rho(*ambient_)) {}

void DerivedBracket::require_f(const Cochain& c) const {
  if (c.space() != Space::f || c.in_dim() != ambient_->dim_v() || c.out_dim() != ambient_->dim_g())
    throw ShapeError("derived bracket: arguments must be F cochains V -> g of the ambient pair");
}

Cochain DerivedBracket::derived(std::span<const Cochain> args) const {
  Cochain acc = delta_;
  for (const auto& a : args) {
    require_f(a);
    acc = graded_bracket(acc, embed_f(a, ambient_->dim_g()));
  }
  return project_f(acc, ambient_->dim_g(), ambient_->dim_v());
}

Cochain DerivedBracket::operator()(const Cochain& p, const Cochain& q, const Cochain& r) const {
  const Cochain args[] = {p, q, r};
  return derived(args);
}

Cochain DerivedBracket::as_cochain(const Matrix& t) const {
  if (t.rows() != ambient_->dim_g() || t.cols() != ambient_->dim_v())
    throw ShapeError("expected a dim g x dim V matrix");
  return Cochain::from_matrix(t, Space::f);
}

Cochain DerivedBracket::mc_defect(const Matrix& t) const {
  const Cochain c = as_cochain(t);
  return Scalar(1, 6) * (*this)(c, c, c);
}

TwistedBrackets::TwistedBrackets(const DerivedBracket& bracket, const EmbeddingTensor& e)
    : bracket_(bracket), t_(Cochain::from_matrix(e.map(), Space::f)) {
  e.require_verified("TwistedBrackets");
  if (&e.ambient() != &bracket.ambient() &&
      !(e.ambient().algebra() == bracket.ambient().algebra() && e.ambient().rep() == bracket.ambient().rep()))
    throw ShapeError("TwistedBrackets: tensor and bracket use different (g, rho)");
}

Cochain TwistedBrackets::l1(const Cochain& p) const { return Scalar(1, 2) * bracket_(t_, t_, p); }

Cochain TwistedBrackets::l2(const Cochain& p, const Cochain& q) const { return bracket_(t_, p, q); }

Cochain TwistedBrackets::l3(const Cochain& p, const Cochain& q, const Cochain& r) const { return bracket_(p, q, r); }

Cochain TwistedBrackets::mc_residual(const Matrix& t_prime) const {
  const Cochain c = bracket_.as_cochain(t_prime);
  Cochain out = l1(c);
  out += Scalar(1, 2) * l2(c, c);
  out += Scalar(1, 6) * l3(c, c, c);
  return out;
}

}  // namespace etensor
