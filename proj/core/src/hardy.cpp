#include "hc/hardy.hpp"

#include <cmath>
#include <stdexcept>

namespace hc {

namespace {
constexpr double kKernelRadiusBound = 1.0 - 1e-6;
}

HardyVec HardyVec::basis(std::size_t k, std::size_t n) {
    if (k >= n)
        throw std::invalid_argument("HardyVec::basis: index beyond truncation order");
    HardyVec v = zero(n);
    v.coeffs[k] = cx{1.0, 0.0};
    return v;
}

HardyVec HardyVec::zero(std::size_t n) {
    HardyVec v;
    v.coeffs.assign(n, cx{0.0, 0.0});
    return v;
}

cx inner(const HardyVec& g, const HardyVec& f) {
    if (g.order() != f.order())
        throw std::invalid_argument("inner: truncation orders differ");
    cx acc{0.0, 0.0};
    for (std::size_t n = 0; n < g.order(); ++n)
        acc += g.coeffs[n] * std::conj(f.coeffs[n]);
    return acc;
}

double norm(const HardyVec& g) { return stable_norm(g.coeffs); }

double stable_norm(std::span<const cx> v) {
    double scale = 0.0;
    for (const cx& c : v)
        scale = std::max({scale, std::abs(c.real()), std::abs(c.imag())});
    if (scale == 0.0 || !std::isfinite(scale))
        return scale == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    double acc = 0.0;
    for (const cx& c : v) {
        const double re = c.real() / scale;
        const double im = c.imag() / scale;
        acc += re * re + im * im;
    }
    return scale * std::sqrt(acc);
}

HardyVec reproducing_kernel(cx z, std::size_t n) {
    if (std::abs(z) > kKernelRadiusBound)
        throw std::domain_error(
            "reproducing_kernel: |z| must be <= 1 - 1e-6 to keep the truncated tail small");
    HardyVec v = HardyVec::zero(n);
    const cx zb = std::conj(z);
    cx p{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        v.coeffs[k] = p;
        p *= zb;
    }
    return v;
}

cx point_eval(const HardyVec& g, cx z) {
    if (std::abs(z) > kKernelRadiusBound)
        throw std::domain_error("point_eval: |z| must be <= 1 - 1e-6");
    cx acc{0.0, 0.0};
    for (std::size_t k = g.order(); k-- > 0;)
        acc = acc * z + g.coeffs[k];
    return acc;
}

cx point_eval_kernel(const HardyVec& g, cx z) {
    return inner(g, reproducing_kernel(z, g.order()));
}

} // namespace hc
