#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace hc {

using cx = std::complex<double>;

/// Tolerances and knobs shared by every analysis entry point. All
/// tolerances are strictly positive; the seed is recorded in every
/// serialized output so runs are reproducible bit-for-bit.
struct RunConfig {
    std::size_t trunc = 256;        // truncation order N
    double eps_boundary = 1e-9;     // band around |z| = 1 for root classification
    double eps_decision = 1e-7;     // margin around the unit circle for verdicts
    double eps_root = 1e-12;        // residual target for the root solver
    double eps_opt = 1e-10;         // circle-extrema refinement target
    double rank_tol = 1e-8;         // relative SVD rank threshold
    std::size_t circle_samples = 4096;
    std::size_t sample_count = 64;  // z0 samples for the sufficiency check
    std::size_t horizon = 1024;     // orbit length H
    double window_fraction = 0.5;   // limsup/liminf window = final fraction of the trace
    std::size_t probe_count = 32;   // surjectivity probes K
    std::uint64_t seed = 12345;
    std::size_t threads = 1;

    void validate() const;          // throws std::invalid_argument on bad values
};

} // namespace hc
