#pragma once

#include <span>
#include <string>
#include <vector>

#include "hc/config.hpp"

namespace hc {

enum class Band { Inside, Boundary, Outside };

std::string to_string(Band band);

/// Placement of |z| relative to the unit circle with band half-width eps_b:
/// Inside when |z| < 1 - eps_b, Boundary when ||z| - 1| <= eps_b, else Outside.
Band classify_modulus(cx z, double eps_b);

struct Root {
    cx location;
    int multiplicity = 1;
    Band band = Band::Inside;
    double residual = 0.0;   // |p(location)| / max |coeff|
};

struct RootSet {
    std::vector<Root> roots;

    int total_multiplicity() const;
    int count(Band band) const;
    bool has(Band band) const { return count(band) > 0; }
};

struct RootSolverOptions {
    double eps_root = 1e-12;       // relative residual target
    int max_iterations = 200;
    double cluster_radius = 1e-7;  // merge radius for multiple roots
    double eps_boundary = 1e-9;
};

/// All roots of the polynomial, with multiplicities recovered by cluster
/// merging. Simultaneous Aberth-Ehrlich iteration started on a circle whose
/// radius comes from the coefficient magnitudes. Throws std::invalid_argument
/// for degree < 1 and std::runtime_error (with the best residual reached) if
/// the residual target is not met within the iteration budget.
RootSet solve_roots(std::span<const cx> coeffs, const RootSolverOptions& opts = {});

} // namespace hc
