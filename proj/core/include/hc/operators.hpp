#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hc/hardy.hpp"
#include "hc/svd.hpp"
#include "hc/symbol.hpp"

namespace hc {

enum class OpKind { Mult, AdjointMult, Shift, PhiOfShift, Generic };

std::string to_string(OpKind kind);

/// N x N truncation of an operator on the Hardy space. Triangular-Toeplitz
/// operators (multipliers, their adjoints, functional calculus in the shift)
/// keep their lag coefficients so apply() runs in O(N * d) without
/// materializing the dense matrix; dense() materializes on demand.
///
/// Truncation-edge contract: for a symbol of effective degree d the leading
/// (N - d) coefficients of apply() agree with the infinite-dimensional
/// operator; the trailing d entries are polluted by the cut, and
/// leading_block() reports the safe size.
class TruncatedOperator {
public:
    static TruncatedOperator mult(const Symbol& phi, std::size_t n);
    static TruncatedOperator adjoint_mult(const Symbol& phi, std::size_t n);
    static TruncatedOperator shift(std::size_t n);
    static TruncatedOperator phi_of_shift(const Symbol& phi, std::size_t n);
    static TruncatedOperator dense_matrix(ColMajor matrix, OpKind kind = OpKind::Generic);

    std::size_t order() const { return n_; }
    OpKind kind() const { return kind_; }
    const std::optional<Symbol>& symbol() const { return symbol_; }
    std::size_t leading_block() const;

    std::vector<cx> apply(std::span<const cx> x) const;
    HardyVec apply(const HardyVec& x) const;

    /// Conjugate transpose. Mult and AdjointMult flip into each other; the
    /// shift becomes its transpose as a Generic dense operator.
    TruncatedOperator adjoint() const;

    const ColMajor& dense() const;  // materializes and caches

private:
    TruncatedOperator(std::size_t n, OpKind kind) : n_(n), kind_(kind) {}

    std::size_t n_;
    OpKind kind_;
    std::optional<Symbol> symbol_;
    std::vector<cx> lags_;               // Toeplitz lag coefficients
    std::size_t effective_degree_ = 0;   // nonzero lag count - 1
    mutable std::optional<ColMajor> dense_;
};

/// dim ker(A - lambda I) as the count of singular values below
/// rank_tol * sigma_max (one-sided Jacobi SVD).
int kernel_dimension(const TruncatedOperator& a, cx lambda, double rank_tol = 1e-8);

/// Singular values of A - lambda I, descending.
std::vector<double> shifted_singular_values(const TruncatedOperator& a, cx lambda);

/// Evidence of surjectivity at truncation: max over probes e_0..e_{K-1} of
/// the least-squares residual of (A - lambda) x = e_k restricted to the
/// leading block. Requires K <= N/2.
double surjectivity_residual(const TruncatedOperator& a, cx lambda, std::size_t probes);

/// phi sampled at M uniform points of the unit circle (the boundary of the
/// closure of phi(D), which equals the spectrum of the multiplier for this
/// symbol class). M >= 16.
std::vector<cx> spectrum_image(const Symbol& phi, std::size_t samples);

/// Winding number of the curve phi(e^{i theta}) - w; by the argument
/// principle this counts the solutions of phi(z) = w inside the disk, so a
/// positive winding certifies w in phi(D).
int winding_number(const Symbol& phi, cx w, std::size_t samples);

} // namespace hc
