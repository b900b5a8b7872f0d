#pragma once

#include <span>
#include <vector>

#include "hc/config.hpp"

namespace hc {

/// Truncated element of the Hardy space in the Taylor-coefficient basis:
/// coeffs[n] is the coefficient of z^n, n < N.
struct HardyVec {
    std::vector<cx> coeffs;

    std::size_t order() const { return coeffs.size(); }
    static HardyVec basis(std::size_t k, std::size_t n);   // e_k at order n
    static HardyVec zero(std::size_t n);
};

/// <g, f> = sum g_n * conj(f_n); conjugate-linear in the second argument.
/// Throws std::invalid_argument on mismatched truncation orders.
cx inner(const HardyVec& g, const HardyVec& f);

double norm(const HardyVec& g);

/// Overflow-safe Euclidean norm (scales by the largest magnitude first).
double stable_norm(std::span<const cx> v);

/// Kernel of point evaluation at z: coefficients conj(z)^n. Requires
/// |z| <= 1 - 1e-6 so the truncated tail stays negligible; throws
/// std::domain_error otherwise.
HardyVec reproducing_kernel(cx z, std::size_t n);

/// g(z) via Horner on the coefficients. |z| must satisfy the same bound as
/// reproducing_kernel; the two evaluation routes agree to roundoff.
cx point_eval(const HardyVec& g, cx z);

/// g(z) via the inner product against the reproducing kernel.
cx point_eval_kernel(const HardyVec& g, cx z);

} // namespace hc
