#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "etensor/cochain.hpp"
#include "etensor/embedding.hpp"
#include "etensor/io.hpp"

namespace etensor::testing {

using Rng = std::mt19937_64;

// Small integers with an occasional half, zero about a third of the time.
inline Scalar small(Rng& rng) {
  std::uniform_int_distribution<int> pick(-2, 2);
  Scalar s(pick(rng));
  if (pick(rng) == 2) s /= 2;
  return s;
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small(rng);
  return v;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small(rng);
  return m;
}

inline Cochain random_cochain(Rng& rng, Space space, int degree, std::size_t in_dim, std::size_t out_dim) {
  Cochain c(space, degree, in_dim, out_dim);
  for (auto& x : c.coeffs()) x = small(rng);
  return c;
}

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Degree-1 FULL cochain holding the constants of a trilinear map.
inline Cochain as_full_cochain(const TrilinearMap& c) {
  const std::size_t n = c.dim();
  Cochain out(Space::full, 1, n, n);
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = 0; j < static_cast<int>(n); ++j)
      for (int k = 0; k < static_cast<int>(n); ++k)
        for (std::size_t l = 0; l < n; ++l) out.at(std::vector<int>{i, j, k}, l) = c(i, j, k, l);
  return out;
}

inline std::filesystem::path corpus_dir() { return ETENSOR_CORPUS_DIR; }

// Every bundled example file, sorted by name.
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

struct CorpusTensor {
  std::string name;
  io::AlgebraFile file;
  EmbeddingTensor tensor;
};

// Corpus files that carry a verified embedding tensor.
inline std::vector<CorpusTensor> corpus_tensors() {
  std::vector<CorpusTensor> out;
  for (const auto& path : corpus_files()) {
    io::AlgebraFile f = io::load_algebra(path);
    if (!f.t) continue;
    EmbeddingTensor e(Ambient::make(f.g, f.rho), *f.t);
    if (e.verified()) out.push_back({path.stem().string(), std::move(f), std::move(e)});
  }
  return out;
}

}  // namespace etensor::testing
