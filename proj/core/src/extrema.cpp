#include "hc/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hc/poly.hpp"

namespace hc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cx circle_point(double theta) { return cx{std::cos(theta), std::sin(theta)}; }

// Golden-section search for the minimum of f on [a, b]. Returns (theta, value).
template <typename F>
std::pair<double, double> golden_min(F f, double a, double b) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

struct CirclePick {
    double theta = 0.0;
    double value = 0.0;
};

// Local extrema of the sampled |phi(e^{i theta})| refined by golden section.
// `sign` is +1 to maximize, -1 to minimize.
CirclePick refine(const Symbol& phi, const std::vector<double>& samples, double sign,
                  std::size_t brackets) {
    const std::size_t m = samples.size();
    const double step = kTwoPi / static_cast<double>(m);
    auto value = [&](double theta) { return std::abs(phi.eval(circle_point(theta))); };

    // Candidate indices: local optima in the cyclic sample sequence.
    std::vector<std::size_t> local;
    for (std::size_t i = 0; i < m; ++i) {
        const double prev = samples[(i + m - 1) % m];
        const double next = samples[(i + 1) % m];
        if (sign > 0 ? (samples[i] >= prev && samples[i] >= next)
                     : (samples[i] <= prev && samples[i] <= next))
            local.push_back(i);
    }
    std::sort(local.begin(), local.end(), [&](std::size_t a, std::size_t b) {
        return sign > 0 ? samples[a] > samples[b] : samples[a] < samples[b];
    });
    if (local.size() > brackets)
        local.resize(brackets);

    CirclePick best;
    best.value = sign > 0 ? -1.0 : std::numeric_limits<double>::infinity();
    for (std::size_t idx : local) {
        const double center = static_cast<double>(idx) * step;
        auto f = [&](double t) { return sign > 0 ? -value(t) : value(t); };
        auto [theta, fv] = golden_min(f, center - step, center + step);
        const double v = sign > 0 ? -fv : fv;
        if ((sign > 0 && v > best.value) || (sign < 0 && v < best.value)) {
            best.theta = theta;
            best.value = v;
        }
    }
    return best;
}

} // namespace

ModulusExtrema modulus_extrema(const Symbol& phi, const ExtremaOptions& opts) {
    ModulusExtrema out;

    if (phi.is_constant()) {
        const double v = std::abs(phi.eval(cx{0.0, 0.0}));
        out.inf_mod = out.sup_mod = out.boundary_min = out.boundary_max = v;
        out.inf_location = out.sup_location = cx{1.0, 0.0};
        out.exact = true;
        return out;
    }

    // Affine fast path: phi = (a0 + a1 z) / d0 has image a circle of radius
    // |a1/d0| centered at a0/d0, so the extrema are exact.
    if (phi.num_degree() <= 1 && phi.is_polynomial()) {
        const cx d0 = phi.den()[0];
        const cx a0 = phi.num()[0] / d0;
        const cx a1 = phi.num().size() > 1 ? phi.num()[1] / d0 : cx{0.0, 0.0};
        const double c = std::abs(a0), r = std::abs(a1);
        out.boundary_max = c + r;
        out.boundary_min = std::abs(c - r);
        out.sup_mod = out.boundary_max;
        out.inf_mod = c < r ? 0.0 : c - r;  // root -a0/a1 inside the disk iff c < r
        // Boundary points attaining the extrema: e^{i theta} aligned with
        // +-(a0 * conj(a1)).
        const cx align = (a1 == cx{0.0, 0.0}) ? cx{1.0, 0.0} : a0 * std::conj(a1);
        const cx unit = (align == cx{0.0, 0.0}) ? cx{1.0, 0.0} : align / std::abs(align);
        out.sup_location = unit;
        out.inf_location = -unit;
        out.exact = true;
        return out;
    }

    const std::size_t m = std::max<std::size_t>(opts.circle_samples, 16);
    std::vector<double> samples(m);
    for (std::size_t i = 0; i < m; ++i)
        samples[i] = std::abs(phi.eval(circle_point(kTwoPi * static_cast<double>(i) /
                                                    static_cast<double>(m))));

    const CirclePick top = refine(phi, samples, +1.0, opts.refine_brackets);
    const CirclePick bottom = refine(phi, samples, -1.0, opts.refine_brackets);

    out.boundary_max = top.value;
    out.boundary_min = bottom.value;
    out.sup_mod = top.value;
    out.sup_location = circle_point(top.theta);
    out.inf_location = circle_point(bottom.theta);

    bool zero_inside = false;
    if (poly::degree(phi.num()) >= 1) {
        const RootSet rs = solve_roots(phi.num(), opts.root_opts);
        zero_inside = rs.has(Band::Inside);
    } else if (poly::is_zero(phi.num())) {
        zero_inside = true;
    }
    out.inf_mod = zero_inside ? 0.0 : bottom.value;
    return out;
}

} // namespace hc
