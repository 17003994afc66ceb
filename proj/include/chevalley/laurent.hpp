#pragma once

#include <unordered_map>

#include "chevalley/arith.hpp"
#include "chevalley/hash.hpp"

namespace chevalley {

/// Integer Laurent polynomial in several variables: exponent vector -> coefficient.
/// Zero coefficients are never stored.
using LaurentPoly = std::unordered_map<IntVec, std::int64_t, VecHash>;

LaurentPoly laurent_monomial(const IntVec& exponent, std::int64_t coeff = 1);

/// Product, splitting the terms of `a` across OpenMP threads.
LaurentPoly laurent_multiply(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_multiply_serial(const LaurentPoly& a, const LaurentPoly& b);

std::int64_t coefficient(const LaurentPoly& p, const IntVec& exponent);

}  // namespace chevalley
