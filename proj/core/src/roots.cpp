#include "hc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hc/poly.hpp"

namespace hc {

std::string to_string(Band band) {
    switch (band) {
        case Band::Inside: return "INSIDE";
        case Band::Boundary: return "BOUNDARY";
        case Band::Outside: return "OUTSIDE";
    }
    return "?";
}

Band classify_modulus(cx z, double eps_b) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= eps_b)
        return Band::Boundary;
    return r < 1.0 ? Band::Inside : Band::Outside;
}

int RootSet::total_multiplicity() const {
    int total = 0;
    for (const Root& r : roots)
        total += r.multiplicity;
    return total;
}

int RootSet::count(Band band) const {
    int total = 0;
    for (const Root& r : roots)
        if (r.band == band)
            total += r.multiplicity;
    return total;
}

namespace {

// Greedy cluster merge: approximants within the cluster radius collapse to
// their centroid and the multiplicities add up.
std::vector<Root> merge_clusters(const std::vector<cx>& points, double radius) {
    std::vector<Root> merged;
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (used[i])
            continue;
        cx sum = points[i];
        int count = 1;
        used[i] = true;
        bool grew = true;
        cx centroid = points[i];
        while (grew) {
            grew = false;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (used[j])
                    continue;
                if (std::abs(points[j] - centroid) <= radius) {
                    sum += points[j];
                    ++count;
                    used[j] = true;
                    centroid = sum / static_cast<double>(count);
                    grew = true;
                }
            }
        }
        merged.push_back(Root{centroid, count, Band::Inside, 0.0});
    }
    return merged;
}

} // namespace

RootSet solve_roots(std::span<const cx> coeffs, const RootSolverOptions& opts) {
    std::vector<cx> p = poly::trim(std::vector<cx>(coeffs.begin(), coeffs.end()));
    const int deg = poly::degree(p);
    if (deg < 1)
        throw std::invalid_argument("solve_roots: polynomial degree must be >= 1");

    const double maxc = poly::max_abs_coeff(p);
    const cx lead = p.back();
    RootSet out;

    if (deg == 1) {
        const cx r = -p[0] / p[1];
        out.roots.push_back(Root{r, 1, classify_modulus(r, opts.eps_boundary),
                                 std::abs(poly::eval(p, r)) / maxc});
        return out;
    }

    // Start the approximants on a circle sized from the coefficients: the
    // geometric-mean root magnitude clipped by the Cauchy upper bound.
    const double cauchy = 1.0 + poly::max_abs_coeff({p.data(), p.size() - 1}) / std::abs(lead);
    double r0 = std::abs(p[0]) > 0.0
                    ? std::pow(std::abs(p[0] / lead), 1.0 / deg)
                    : 0.5;
    r0 = std::clamp(r0, 1e-3, cauchy);

    const std::vector<cx> dp = poly::derivative(p);
    std::vector<cx> x(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / deg + 0.7 / deg;
        x[static_cast<std::size_t>(k)] = r0 * cx{std::cos(theta), std::sin(theta)};
    }

    double best_residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
        double max_residual = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const cx pv = poly::eval(p, x[k]);
            max_residual = std::max(max_residual, std::abs(pv) / maxc);
            cx dv = poly::eval(dp, x[k]);
            if (dv == cx{0.0, 0.0})
                dv = cx{1e-300, 0.0};
            const cx newton = pv / dv;
            cx repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (j == k)
                    continue;
                cx diff = x[k] - x[j];
                if (diff == cx{0.0, 0.0})
                    diff = cx{1e-15, 1e-15};
                repulsion += 1.0 / diff;
            }
            const cx denom = 1.0 - newton * repulsion;
            const cx step = (denom == cx{0.0, 0.0}) ? newton : newton / denom;
            x[k] -= step;
        }
        best_residual = std::min(best_residual, max_residual);
        converged = max_residual <= opts.eps_root;
    }

    // Final residual check on the raw approximants; multiple roots converge
    // linearly, so the budget matters more than the per-step rate.
    double final_residual = 0.0;
    for (const cx& xi : x)
        final_residual = std::max(final_residual, std::abs(poly::eval(p, xi)) / maxc);
    if (final_residual > opts.eps_root) {
        throw std::runtime_error(
            "solve_roots: no convergence after " + std::to_string(opts.max_iterations) +
            " iterations (best residual " + std::to_string(best_residual) + ")");
    }

    out.roots = merge_clusters(x, opts.cluster_radius);
    for (Root& r : out.roots) {
        r.band = classify_modulus(r.location, opts.eps_boundary);
        r.residual = std::abs(poly::eval(p, r.location)) / maxc;
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
        if (a.location.real() != b.location.real())
            return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

} // namespace hc
