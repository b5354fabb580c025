#include "etensor/report.hpp"

#include <algorithm>

namespace etensor {

std::size_t Report::count(const std::string& axiom) const {
  return static_cast<std::size_t>(std::count_if(witnesses.begin(), witnesses.end(),
                                                [&](const Witness& w) { return w.axiom == axiom; }));
}

void Report::merge(const Report& other) {
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

}  // namespace etensor
