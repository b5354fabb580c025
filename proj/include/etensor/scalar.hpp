#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace etensor {

/// Exact rational scalar. GMP keeps it canonical: lowest terms, positive denominator.
using Scalar = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// Inverse of parse_scalar: "p/q", or "p" when q = 1.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

/// v += factor * w
void axpy(Vector& v, const Scalar& factor, const Vector& w);

}  // namespace etensor
