#pragma once

#include <span>
#include <vector>

#include "hc/config.hpp"

namespace hc {

/// Column-major complex matrix, rows x cols.
struct ColMajor {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cx> data;  // data[j * rows + i]

    cx& at(std::size_t i, std::size_t j) { return data[j * rows + i]; }
    const cx& at(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
    static ColMajor zero(std::size_t r, std::size_t c) {
        return ColMajor{r, c, std::vector<cx>(r * c, cx{0.0, 0.0})};
    }
};

struct SvdResult {
    std::vector<double> singular_values;  // descending
    ColMajor u;                           // rows x cols, empty unless vectors requested
    ColMajor v;                           // cols x cols, empty unless vectors requested
    int sweeps = 0;
};

struct SvdOptions {
    double tol = 1e-12;       // relative column-orthogonality target
    int max_sweeps = 60;
    bool want_vectors = false;
};

/// One-sided Jacobi SVD: rotates column pairs until all are mutually
/// orthogonal to the relative tolerance. Accurate for the smallest singular
/// values, which is what the rank decisions here depend on. Throws
/// std::runtime_error with the sweep count if the sweep budget is exhausted.
SvdResult jacobi_svd(ColMajor a, const SvdOptions& opts = {});

/// Minimum-norm least-squares solution of A x = b through the SVD with
/// relative cutoff `rcond`; returns the solution vector.
std::vector<cx> svd_least_squares(const ColMajor& a, std::span<const cx> b,
                                  double rcond = 1e-12);

} // namespace hc
