#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hc/roots.hpp"
#include "hc/symbol.hpp"

namespace hc {

enum class RooterVerdict { Outer, OuterNotInvertible, NotOuter, Indeterminate };

std::string to_string(RooterVerdict v);

/// Factorization phi(z) - phi(z0) = p(z) * h(z) with p monic collecting the
/// in-disk roots (multiplicity m = deg p) and h zero-free on the open disk.
struct RooterDecomposition {
    cx base_point;
    cx value;                    // phi(z0)
    std::vector<cx> inner_poly;  // p, monic of degree m
    Symbol rooter;               // h as a rational symbol
    int multiplicity = 0;        // m
    RooterVerdict verdict = RooterVerdict::Indeterminate;
};

struct RooterOptions {
    RootSolverOptions root_opts{};
};

/// Decomposes phi - phi(z0) at |z0| < 1. The shifted numerator's roots are
/// split by the boundary band: inside roots form p, the rest (with the
/// leading coefficient and the original denominator) form h. A root in the
/// band makes the verdict Indeterminate. Throws std::invalid_argument for
/// constant symbols or |z0| >= 1, std::domain_error when every root sits in
/// the band (no usable partition).
RooterDecomposition rooter_decomposition(const Symbol& phi, cx z0,
                                         const RooterOptions& opts = {});

enum class CdSufficiency { SufficientConfirmed, NotConfirmed, Fails };

std::string to_string(CdSufficiency v);

struct CdReport {
    CdSufficiency verdict = CdSufficiency::NotConfirmed;
    std::map<int, int> m_profile;        // multiplicity -> sample count
    int common_multiplicity = 0;         // m when the profile is constant
    std::vector<std::string> notes;
    std::vector<cx> sample_points;
};

/// Samples S pseudo-random base points in |z0| <= 0.9 (deterministic in the
/// seed) and decomposes at each: SufficientConfirmed when the multiplicity
/// is constant and every rooter is outer (invertible or not), NotConfirmed
/// when the multiplicity varies or a band root interferes, Fails when some
/// rooter has an in-disk zero.
CdReport is_cowen_douglas_sufficient(const Symbol& phi, std::size_t samples,
                                     std::uint64_t seed,
                                     const RooterOptions& opts = {});

} // namespace hc
