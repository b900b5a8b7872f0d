#pragma once

#include "hc/symbol.hpp"

namespace hc {

struct ModulusExtrema {
    double inf_mod = 0.0;
    double sup_mod = 0.0;
    cx inf_location;        // boundary point where the circle minimum occurs
    cx sup_location;        // boundary point where the circle maximum occurs
    double boundary_min = 0.0;  // min |phi| over |z| = 1 (inf_mod before the
                                // inside-zero shortcut forces it to 0)
    double boundary_max = 0.0;  // equal to sup_mod
    bool exact = false;         // affine closed form was used
};

struct ExtremaOptions {
    std::size_t circle_samples = 4096;
    std::size_t refine_brackets = 8;
    double eps_opt = 1e-10;
    RootSolverOptions root_opts{};
};

/// inf/sup of |phi| over the disk. The sup is the circle maximum (maximum
/// modulus principle); the inf is 0 when the numerator vanishes inside the
/// disk and the circle minimum otherwise (minimum modulus principle for
/// zero-free analytic functions). Dense circle sampling followed by
/// golden-section refinement of the best brackets; degree-1 polynomial
/// symbols take an exact closed form.
ModulusExtrema modulus_extrema(const Symbol& phi, const ExtremaOptions& opts = {});

} // namespace hc
