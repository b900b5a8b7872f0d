#include "hc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hc::poly {

std::vector<cx> trim(std::vector<cx> coeffs, double tol) {
    const double cut = tol * max_abs_coeff(coeffs);
    while (!coeffs.empty() && std::abs(coeffs.back()) <= cut)
        coeffs.pop_back();
    return coeffs;
}

int degree(std::span<const cx> coeffs) {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != cx{0.0, 0.0})
            return static_cast<int>(i);
    return -1;
}

bool is_zero(std::span<const cx> coeffs) { return degree(coeffs) < 0; }

double max_abs_coeff(std::span<const cx> coeffs) {
    double m = 0.0;
    for (const cx& c : coeffs)
        m = std::max(m, std::abs(c));
    return m;
}

cx eval(std::span<const cx> coeffs, cx z) {
    cx acc{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + coeffs[i];
    return acc;
}

std::vector<cx> derivative(std::span<const cx> coeffs) {
    if (coeffs.size() <= 1)
        return {};
    std::vector<cx> d(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d[i - 1] = coeffs[i] * static_cast<double>(i);
    return d;
}

std::vector<cx> add(std::span<const cx> a, std::span<const cx> b) {
    std::vector<cx> out(std::max(a.size(), b.size()), cx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

std::vector<cx> sub(std::span<const cx> a, std::span<const cx> b) {
    std::vector<cx> out(std::max(a.size(), b.size()), cx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

std::vector<cx> mul(std::span<const cx> a, std::span<const cx> b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<cx> out(a.size() + b.size() - 1, cx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == cx{0.0, 0.0})
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<cx> scale(std::span<const cx> a, cx factor) {
    std::vector<cx> out(a.begin(), a.end());
    for (cx& c : out) c *= factor;
    return out;
}

std::vector<cx> pow(std::span<const cx> a, unsigned exponent) {
    std::vector<cx> result{cx{1.0, 0.0}};
    std::vector<cx> base(a.begin(), a.end());
    while (exponent > 0) {
        if (exponent & 1u)
            result = mul(result, base);
        exponent >>= 1u;
        if (exponent > 0)
            base = mul(base, base);
    }
    return result;
}

std::vector<cx> from_roots(std::span<const cx> roots) {
    std::vector<cx> p{cx{1.0, 0.0}};
    for (const cx& r : roots) {
        std::vector<cx> factor{-r, cx{1.0, 0.0}};
        p = mul(p, factor);
    }
    return p;
}

std::vector<cx> inverse_series(std::span<const cx> d, std::size_t n) {
    if (d.empty() || d[0] == cx{0.0, 0.0})
        throw std::invalid_argument("inverse_series: constant term is zero");
    std::vector<cx> c(n, cx{0.0, 0.0});
    const cx inv0 = 1.0 / d[0];
    if (n == 0)
        return c;
    c[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        cx acc{0.0, 0.0};
        const std::size_t jmax = std::min(k, d.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j)
            acc += d[j] * c[k - j];
        c[k] = -inv0 * acc;
    }
    return c;
}

} // namespace hc::poly
