#pragma once

#include <span>
#include <string>
#include <vector>

#include "hc/config.hpp"
#include "hc/roots.hpp"

namespace hc {

/// Rational function num/den holomorphic on the closed unit disk: the
/// denominator must be zero-free there (checked on construction), so the
/// symbol is bounded and continuous up to the boundary.
class Symbol {
public:
    /// Throws std::invalid_argument when den is the zero polynomial or has a
    /// root with |z| <= 1 + eps_boundary (the offending root is named).
    Symbol(std::vector<cx> num, std::vector<cx> den = {cx{1.0, 0.0}},
           double eps_boundary = 1e-9);

    static Symbol polynomial(std::vector<cx> coeffs, double eps_boundary = 1e-9);
    static Symbol constant(cx value);

    const std::vector<cx>& num() const { return num_; }
    const std::vector<cx>& den() const { return den_; }
    int num_degree() const;
    int den_degree() const;
    bool is_polynomial() const { return den_degree() == 0; }
    bool is_constant() const { return constant_; }
    double eps_boundary() const { return eps_boundary_; }

    cx eval(cx z) const;                       // Horner on num and den
    Symbol conj_coefficients() const;          // coefficient-wise conjugate
    Symbol scalar_plus(cx lambda) const;       // lambda + this, normalized

    /// First n Taylor coefficients at the origin (geometric expansion of
    /// 1/den convolved with num).
    std::vector<cx> taylor(std::size_t n) const;

    /// Uniform bound proxy: max |num coeffs| * something is not used here;
    /// callers needing sup|phi| use modulus_extrema.
    bool same_coefficients(const Symbol& other, double tol = 1e-12) const;

private:
    std::vector<cx> num_;
    std::vector<cx> den_;
    double eps_boundary_;
    bool constant_ = false;
};

/// 1/phi. Requires every numerator root to lie strictly outside the closed
/// disk; otherwise throws std::domain_error naming the offending root.
Symbol invert_symbol(const Symbol& phi);

enum class OuterVerdict { Outer, OuterNotInvertible, NotOuter };

std::string to_string(OuterVerdict v);

/// Root-location test for rational h: NotOuter when some numerator root is
/// strictly inside the disk, OuterNotInvertible when none is inside but at
/// least one sits in the boundary band, Outer otherwise.
OuterVerdict is_outer_rational(const Symbol& h, const RootSolverOptions& opts = {});

} // namespace hc
