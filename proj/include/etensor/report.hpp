#pragma once

#include <string>
#include <vector>

#include "etensor/scalar.hpp"

namespace etensor {

/// One failing basis tuple of an identity check.
struct Witness {
  std::string axiom;
  std::vector<int> indices;
  Vector residual;
};

/// Outcome of an exhaustive identity check. An empty witness list means PASS.
struct Report {
  std::vector<Witness> witnesses;

  bool pass() const { return witnesses.empty(); }

  /// Number of witnesses carrying the given axiom label.
  std::size_t count(const std::string& axiom) const;

  void add(std::string axiom, std::vector<int> indices, Vector residual) {
    witnesses.push_back({std::move(axiom), std::move(indices), std::move(residual)});
  }

  /// Appends the other report's witnesses.
  void merge(const Report& other);
};

}  // namespace etensor
