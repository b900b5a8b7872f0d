#include "hc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hc/poly.hpp"

namespace hc {

std::string to_string(OpKind kind) {
    switch (kind) {
        case OpKind::Mult: return "MULT";
        case OpKind::AdjointMult: return "ADJOINT_MULT";
        case OpKind::Shift: return "SHIFT";
        case OpKind::PhiOfShift: return "PHI_OF_SHIFT";
        case OpKind::Generic: return "GENERIC";
    }
    return "?";
}

namespace {

std::size_t effective_degree(std::span<const cx> lags) {
    const double cut = 1e-300;
    std::size_t d = 0;
    for (std::size_t j = 0; j < lags.size(); ++j)
        if (std::abs(lags[j]) > cut)
            d = j;
    return d;
}

} // namespace

TruncatedOperator TruncatedOperator::mult(const Symbol& phi, std::size_t n) {
    TruncatedOperator op(n, OpKind::Mult);
    op.symbol_ = phi;
    op.lags_ = phi.taylor(n);
    op.effective_degree_ = effective_degree(op.lags_);
    return op;
}

TruncatedOperator TruncatedOperator::adjoint_mult(const Symbol& phi, std::size_t n) {
    TruncatedOperator op(n, OpKind::AdjointMult);
    op.symbol_ = phi;
    op.lags_ = phi.taylor(n);
    op.effective_degree_ = effective_degree(op.lags_);
    return op;
}

TruncatedOperator TruncatedOperator::shift(std::size_t n) {
    TruncatedOperator op(n, OpKind::Shift);
    op.lags_ = {cx{0.0, 0.0}, cx{1.0, 0.0}};
    op.effective_degree_ = 1;
    return op;
}

TruncatedOperator TruncatedOperator::phi_of_shift(const Symbol& phi, std::size_t n) {
    TruncatedOperator op(n, OpKind::PhiOfShift);
    op.symbol_ = phi;
    op.lags_ = phi.taylor(n);
    op.effective_degree_ = effective_degree(op.lags_);
    return op;
}

TruncatedOperator TruncatedOperator::dense_matrix(ColMajor matrix, OpKind kind) {
    if (matrix.rows != matrix.cols)
        throw std::invalid_argument("TruncatedOperator: matrix must be square");
    TruncatedOperator op(matrix.rows, kind);
    op.dense_ = std::move(matrix);
    return op;
}

std::size_t TruncatedOperator::leading_block() const {
    const std::size_t d = std::min(effective_degree_, n_);
    return n_ - d;
}

std::vector<cx> TruncatedOperator::apply(std::span<const cx> x) const {
    if (x.size() != n_)
        throw std::invalid_argument("TruncatedOperator::apply: dimension mismatch");
    std::vector<cx> y(n_, cx{0.0, 0.0});
    switch (kind_) {
        case OpKind::Mult: {
            // Lower-triangular Toeplitz: y_n = sum_j t_j x_{n-j}.
            const std::size_t d = effective_degree_;
            for (std::size_t n = 0; n < n_; ++n) {
                cx acc{0.0, 0.0};
                const std::size_t jmax = std::min(n, d);
                for (std::size_t j = 0; j <= jmax; ++j)
                    acc += lags_[j] * x[n - j];
                y[n] = acc;
            }
            return y;
        }
        case OpKind::AdjointMult: {
            // Upper-triangular Toeplitz with conjugated lags.
            const std::size_t d = effective_degree_;
            for (std::size_t n = 0; n < n_; ++n) {
                cx acc{0.0, 0.0};
                const std::size_t jmax = std::min(d, n_ - 1 - n);
                for (std::size_t j = 0; j <= jmax; ++j)
                    acc += std::conj(lags_[j]) * x[n + j];
                y[n] = acc;
            }
            return y;
        }
        case OpKind::Shift:
        case OpKind::PhiOfShift: {
            // Upper-triangular Toeplitz with plain lags: phi(T) e_m picks up
            // t_j at coordinate m - j.
            const std::size_t d = effective_degree_;
            for (std::size_t n = 0; n < n_; ++n) {
                cx acc{0.0, 0.0};
                const std::size_t jmax = std::min(d, n_ - 1 - n);
                for (std::size_t j = 0; j <= jmax; ++j)
                    acc += lags_[j] * x[n + j];
                y[n] = acc;
            }
            return y;
        }
        case OpKind::Generic: {
            const ColMajor& m = *dense_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (x[j] == cx{0.0, 0.0})
                    continue;
                const cx xj = x[j];
                for (std::size_t i = 0; i < n_; ++i)
                    y[i] += m.at(i, j) * xj;
            }
            return y;
        }
    }
    return y;
}

HardyVec TruncatedOperator::apply(const HardyVec& x) const {
    HardyVec out;
    out.coeffs = apply(std::span<const cx>(x.coeffs));
    return out;
}

TruncatedOperator TruncatedOperator::adjoint() const {
    switch (kind_) {
        case OpKind::Mult: {
            TruncatedOperator op(n_, OpKind::AdjointMult);
            op.symbol_ = symbol_;
            op.lags_ = lags_;
            op.effective_degree_ = effective_degree_;
            return op;
        }
        case OpKind::AdjointMult: {
            TruncatedOperator op(n_, OpKind::Mult);
            op.symbol_ = symbol_;
            op.lags_ = lags_;
            op.effective_degree_ = effective_degree_;
            return op;
        }
        default: {
            const ColMajor& m = dense();
            ColMajor t = ColMajor::zero(n_, n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    t.at(j, i) = std::conj(m.at(i, j));
            return dense_matrix(std::move(t), OpKind::Generic);
        }
    }
}

const ColMajor& TruncatedOperator::dense() const {
    if (dense_)
        return *dense_;
    ColMajor m = ColMajor::zero(n_, n_);
    switch (kind_) {
        case OpKind::Mult:
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t j = 0; j <= effective_degree_ && k + j < n_; ++j)
                    m.at(k + j, k) = lags_[j];
            break;
        case OpKind::AdjointMult:
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t j = 0; j <= effective_degree_ && k + j < n_; ++j)
                    m.at(k, k + j) = std::conj(lags_[j]);
            break;
        case OpKind::Shift:
        case OpKind::PhiOfShift:
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t j = 0; j <= effective_degree_ && k + j < n_; ++j)
                    m.at(k, k + j) = lags_[j];
            break;
        case OpKind::Generic:
            break;
    }
    dense_ = std::move(m);
    return *dense_;
}

namespace {

ColMajor shifted_dense(const TruncatedOperator& a, cx lambda) {
    ColMajor m = a.dense();
    for (std::size_t i = 0; i < m.rows; ++i)
        m.at(i, i) -= lambda;
    return m;
}

} // namespace

std::vector<double> shifted_singular_values(const TruncatedOperator& a, cx lambda) {
    return jacobi_svd(shifted_dense(a, lambda)).singular_values;
}

int kernel_dimension(const TruncatedOperator& a, cx lambda, double rank_tol) {
    if (rank_tol <= 0.0)
        throw std::invalid_argument("kernel_dimension: rank_tol must be positive");
    const std::vector<double> sv = shifted_singular_values(a, lambda);
    if (sv.empty())
        return 0;
    const double cut = rank_tol * sv.front();
    int dim = 0;
    for (double s : sv)
        if (s < cut)
            ++dim;
    return dim;
}

double surjectivity_residual(const TruncatedOperator& a, cx lambda, std::size_t probes) {
    const std::size_t n = a.order();
    if (probes == 0 || probes > n / 2)
        throw std::invalid_argument("surjectivity_residual: need 1 <= K <= N/2");

    // Leading-block rectangular system: drop the truncation-polluted rows.
    const std::size_t rows = a.leading_block();
    const ColMajor full = shifted_dense(a, lambda);
    ColMajor rect = ColMajor::zero(rows, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            rect.at(i, j) = full.at(i, j);

    SvdOptions opts;
    opts.want_vectors = true;
    const SvdResult svd = jacobi_svd(rect, opts);
    const double cutoff =
        svd.singular_values.empty() ? 0.0 : 1e-12 * svd.singular_values.front();

    double worst = 0.0;
    std::vector<cx> b(rows, cx{0.0, 0.0});
    for (std::size_t k = 0; k < probes; ++k) {
        std::fill(b.begin(), b.end(), cx{0.0, 0.0});
        b[k] = cx{1.0, 0.0};
        // Residual of the pseudo-inverse solve: b minus its projection onto
        // the numerical range.
        std::vector<cx> residual = b;
        for (std::size_t s = 0; s < svd.singular_values.size(); ++s) {
            if (svd.singular_values[s] <= cutoff)
                continue;
            cx proj{0.0, 0.0};
            for (std::size_t i = 0; i < rows; ++i)
                proj += std::conj(svd.u.at(i, s)) * b[i];
            for (std::size_t i = 0; i < rows; ++i)
                residual[i] -= proj * svd.u.at(i, s);
        }
        worst = std::max(worst, stable_norm(residual));
    }
    return worst;
}

std::vector<cx> spectrum_image(const Symbol& phi, std::size_t samples) {
    if (samples < 16)
        throw std::invalid_argument("spectrum_image: need at least 16 samples");
    std::vector<cx> out(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(samples);
        out[k] = phi.eval(cx{std::cos(theta), std::sin(theta)});
    }
    return out;
}

int winding_number(const Symbol& phi, cx w, std::size_t samples) {
    const std::vector<cx> curve = spectrum_image(phi, samples);
    double total = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const cx a = curve[k] - w;
        const cx b = curve[(k + 1) % curve.size()] - w;
        if (a == cx{0.0, 0.0} || b == cx{0.0, 0.0})
            throw std::domain_error("winding_number: the curve passes through the point");
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

} // namespace hc
