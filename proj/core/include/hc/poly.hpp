#pragma once

#include <span>
#include <vector>

#include "hc/config.hpp"

namespace hc {

// Dense complex polynomials as coefficient vectors in ascending powers.
// The zero polynomial is the empty vector (or all-zero, before trimming).
namespace poly {

/// Drops trailing coefficients with magnitude <= tol * max(|coeffs|).
std::vector<cx> trim(std::vector<cx> coeffs, double tol = 0.0);

int degree(std::span<const cx> coeffs);          // -1 for the zero polynomial
bool is_zero(std::span<const cx> coeffs);
double max_abs_coeff(std::span<const cx> coeffs);

cx eval(std::span<const cx> coeffs, cx z);       // Horner
std::vector<cx> derivative(std::span<const cx> coeffs);

std::vector<cx> add(std::span<const cx> a, std::span<const cx> b);
std::vector<cx> sub(std::span<const cx> a, std::span<const cx> b);
std::vector<cx> mul(std::span<const cx> a, std::span<const cx> b);
std::vector<cx> scale(std::span<const cx> a, cx factor);
std::vector<cx> pow(std::span<const cx> a, unsigned exponent);

/// Monic polynomial with the given roots (multiplicity by repetition).
std::vector<cx> from_roots(std::span<const cx> roots);

/// First n Taylor coefficients of 1/d for d with d[0] != 0.
std::vector<cx> inverse_series(std::span<const cx> d, std::size_t n);

} // namespace poly
} // namespace hc
