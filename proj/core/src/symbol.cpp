#include "hc/symbol.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hc/poly.hpp"

namespace hc {

namespace {

std::string format_cx(cx z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0)
        os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

} // namespace

Symbol::Symbol(std::vector<cx> num, std::vector<cx> den, double eps_boundary)
    : num_(poly::trim(std::move(num))),
      den_(poly::trim(std::move(den))),
      eps_boundary_(eps_boundary) {
    if (poly::is_zero(den_))
        throw std::invalid_argument("symbol: division by the zero polynomial");
    if (poly::degree(den_) >= 1) {
        const RootSet rs = solve_roots(den_, RootSolverOptions{.eps_boundary = eps_boundary_});
        for (const Root& r : rs.roots) {
            if (std::abs(r.location) <= 1.0 + eps_boundary_) {
                throw std::invalid_argument(
                    "symbol: denominator vanishes on the closed unit disk at z = " +
                    format_cx(r.location));
            }
        }
    }
    if (num_.empty())
        num_ = {cx{0.0, 0.0}};

    // constant <=> derivative of num/den vanishes <=> num' * den == num * den'
    const std::vector<cx> lhs = poly::mul(poly::derivative(num_), den_);
    const std::vector<cx> rhs = poly::mul(num_, poly::derivative(den_));
    const std::vector<cx> diff = poly::sub(lhs, rhs);
    const double scale = std::max(poly::max_abs_coeff(lhs), poly::max_abs_coeff(rhs));
    constant_ = poly::max_abs_coeff(diff) <= 1e-14 * std::max(scale, 1.0);
}

Symbol Symbol::polynomial(std::vector<cx> coeffs, double eps_boundary) {
    return Symbol(std::move(coeffs), {cx{1.0, 0.0}}, eps_boundary);
}

Symbol Symbol::constant(cx value) { return Symbol({value}); }

int Symbol::num_degree() const { return std::max(poly::degree(num_), 0); }
int Symbol::den_degree() const { return std::max(poly::degree(den_), 0); }

cx Symbol::eval(cx z) const {
    return poly::eval(num_, z) / poly::eval(den_, z);
}

Symbol Symbol::conj_coefficients() const {
    std::vector<cx> n = num_, d = den_;
    for (cx& c : n) c = std::conj(c);
    for (cx& c : d) c = std::conj(c);
    return Symbol(std::move(n), std::move(d), eps_boundary_);
}

Symbol Symbol::scalar_plus(cx lambda) const {
    // lambda + num/den = (lambda*den + num) / den
    return Symbol(poly::add(poly::scale(den_, lambda), num_), den_, eps_boundary_);
}

std::vector<cx> Symbol::taylor(std::size_t n) const {
    if (is_polynomial()) {
        std::vector<cx> t(n, cx{0.0, 0.0});
        const cx d0 = den_[0];
        for (std::size_t i = 0; i < num_.size() && i < n; ++i)
            t[i] = num_[i] / d0;
        return t;
    }
    const std::vector<cx> inv = poly::inverse_series(den_, n);
    std::vector<cx> t(n, cx{0.0, 0.0});
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == cx{0.0, 0.0})
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            t[i + j] += num_[i] * inv[j];
    }
    return t;
}

bool Symbol::same_coefficients(const Symbol& other, double tol) const {
    const std::vector<cx> dn = poly::sub(num_, other.num_);
    const std::vector<cx> dd = poly::sub(den_, other.den_);
    const double scale = std::max({poly::max_abs_coeff(num_), poly::max_abs_coeff(den_), 1.0});
    return poly::max_abs_coeff(dn) <= tol * scale && poly::max_abs_coeff(dd) <= tol * scale;
}

Symbol invert_symbol(const Symbol& phi) {
    if (poly::is_zero(phi.num()))
        throw std::domain_error("invert_symbol: symbol is identically zero");
    if (poly::degree(phi.num()) >= 1) {
        const RootSet rs = solve_roots(phi.num(),
                                       RootSolverOptions{.eps_boundary = phi.eps_boundary()});
        for (const Root& r : rs.roots) {
            if (r.band != Band::Outside) {
                throw std::domain_error(
                    "invert_symbol: numerator root " + format_cx(r.location) +
                    " lies in the closed unit disk, 1/phi is unbounded there");
            }
        }
    }
    return Symbol(phi.den(), phi.num(), phi.eps_boundary());
}

std::string to_string(OuterVerdict v) {
    switch (v) {
        case OuterVerdict::Outer: return "OUTER";
        case OuterVerdict::OuterNotInvertible: return "OUTER_NOT_INVERTIBLE";
        case OuterVerdict::NotOuter: return "NOT_OUTER";
    }
    return "?";
}

OuterVerdict is_outer_rational(const Symbol& h, const RootSolverOptions& opts) {
    if (poly::degree(h.num()) < 1)
        return OuterVerdict::Outer;  // nonzero constant over zero-free denominator
    const RootSet rs = solve_roots(h.num(), opts);
    if (rs.has(Band::Inside))
        return OuterVerdict::NotOuter;
    if (rs.has(Band::Boundary))
        return OuterVerdict::OuterNotInvertible;
    return OuterVerdict::Outer;
}

} // namespace hc
