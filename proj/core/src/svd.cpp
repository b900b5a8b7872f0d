#include "hc/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hc {

namespace {

double col_norm_sq(const ColMajor& a, std::size_t j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        acc += std::norm(a.at(i, j));
    return acc;
}

} // namespace

SvdResult jacobi_svd(ColMajor a, const SvdOptions& opts) {
    const std::size_t n = a.cols;
    const std::size_t m = a.rows;

    ColMajor v;
    if (opts.want_vectors) {
        v = ColMajor::zero(n, n);
        for (std::size_t j = 0; j < n; ++j)
            v.at(j, j) = cx{1.0, 0.0};
    }

    std::vector<double> sq(n);
    for (std::size_t j = 0; j < n; ++j)
        sq[j] = col_norm_sq(a, j);

    int sweeps = 0;
    bool converged = (n <= 1);
    while (!converged) {
        if (sweeps >= opts.max_sweeps)
            throw std::runtime_error("jacobi_svd: not converged after " +
                                     std::to_string(sweeps) + " sweeps");
        ++sweeps;
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cx gamma{0.0, 0.0};
                for (std::size_t i = 0; i < m; ++i)
                    gamma += a.at(i, p) * std::conj(a.at(i, q));
                const double alpha = sq[p];
                const double beta = sq[q];
                const double g = std::abs(gamma);
                if (g <= opts.tol * std::sqrt(alpha * beta) || g == 0.0)
                    continue;
                converged = false;

                // Phase rotation turns the 2x2 Gram block real, then a
                // classic symmetric Jacobi rotation annihilates it.
                const cx phase = gamma / g;  // gamma = g * phase
                const double tau = (beta - alpha) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                // Columns transform by U = diag(1, conj(phase)) * R(c, s):
                // new_p = c * a_p - s * conj(phase) * a_q
                // new_q = s * phase * a_p + c * a_q  (up to a global phase
                // on column q, which only re-phases the right singular
                // vector).
                const cx pc = std::conj(phase);
                for (std::size_t i = 0; i < m; ++i) {
                    const cx ap = a.at(i, p);
                    const cx aq = a.at(i, q);
                    a.at(i, p) = c * ap - s * pc * aq;
                    a.at(i, q) = s * phase * ap + c * aq;
                }
                if (opts.want_vectors) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const cx vp = v.at(i, p);
                        const cx vq = v.at(i, q);
                        v.at(i, p) = c * vp - s * pc * vq;
                        v.at(i, q) = s * phase * vp + c * vq;
                    }
                }
                sq[p] = col_norm_sq(a, p);
                sq[q] = col_norm_sq(a, q);
            }
        }
    }

    SvdResult out;
    out.sweeps = sweeps;
    out.singular_values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j)
        norms[j] = std::sqrt(sq[j]);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    ColMajor u;
    if (opts.want_vectors)
        u = ColMajor::zero(m, n);
    ColMajor vperm;
    if (opts.want_vectors)
        vperm = ColMajor::zero(n, n);

    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.singular_values[k] = norms[j];
        if (opts.want_vectors) {
            const double inv = norms[j] > 0.0 ? 1.0 / norms[j] : 0.0;
            for (std::size_t i = 0; i < m; ++i)
                u.at(i, k) = a.at(i, j) * inv;
            for (std::size_t i = 0; i < n; ++i)
                vperm.at(i, k) = v.at(i, j);
        }
    }
    if (opts.want_vectors) {
        out.u = std::move(u);
        out.v = std::move(vperm);
    }
    return out;
}

std::vector<cx> svd_least_squares(const ColMajor& a, std::span<const cx> b, double rcond) {
    if (b.size() != a.rows)
        throw std::invalid_argument("svd_least_squares: rhs length mismatch");
    SvdOptions opts;
    opts.want_vectors = true;
    const SvdResult svd = jacobi_svd(a, opts);
    const double cutoff =
        svd.singular_values.empty() ? 0.0 : rcond * svd.singular_values.front();

    std::vector<cx> x(a.cols, cx{0.0, 0.0});
    for (std::size_t k = 0; k < svd.singular_values.size(); ++k) {
        const double sigma = svd.singular_values[k];
        if (sigma <= cutoff || sigma == 0.0)
            continue;
        cx proj{0.0, 0.0};
        for (std::size_t i = 0; i < a.rows; ++i)
            proj += std::conj(svd.u.at(i, k)) * b[i];
        const cx coeff = proj / sigma;
        for (std::size_t i = 0; i < a.cols; ++i)
            x[i] += coeff * svd.v.at(i, k);
    }
    return x;
}

} // namespace hc
