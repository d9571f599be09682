#pragma once

#include <cstdint>
#include <vector>

#include "tamesys/bigint.hpp"
#include "tamesys/errors.hpp"

namespace tamesys {

/// Number of exponent vectors in {0,...,q-1}^n with coordinate sum <= d.
/// Computed exactly as partial coefficient sums of (1 + t + ... + t^{q-1})^n.
BigUint monomial_count(std::uint32_t q, std::uint64_t n, std::uint64_t d);

/// Convenience overload: a real threshold admits exactly the exponent vectors
/// of total degree <= floor(d).
BigUint monomial_count_real(std::uint32_t q, std::uint64_t n, double d);

/// Result of minimizing (1 + t + ... + t^{q-1}) t^{-delta(q-1)} over (0, 1].
struct GrowthConstant {
    double value;   ///< the infimum, within 1e-9
    double t_star;  ///< argmin; 0 means the infimum is a limit at t -> 0+
};

/// Exponential growth rate of monomial_count(q, n, delta(q-1)n) in n.
/// The objective is log-convex in log t, so a derivative bisection finds the
/// minimum; for delta >= 1/2 the minimum sits at t = 1 with value q.
GrowthConstant c_constant(std::uint32_t q, double delta);

struct SliceRankBound {
    BigUint bound;       ///< k * monomial_count(q, n, (q-1)nm/k)
    bool nontrivial;     ///< true iff k >= 2m+1, equivalently c < q
    double c;            ///< c_constant(q, m/k).value
};

SliceRankBound slice_rank_bound(std::uint32_t q, std::uint64_t m, std::uint64_t k, std::uint64_t n);

/// Number of d-dimensional linear subspaces of F_q^n, exact. Zero when d > n.
/// The result always lies between q^{d(n-d)} and 4 q^{d(n-d)}.
BigUint gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t d);

struct SupersatParams {
    std::uint64_t n1;
    double epsilon;
    double C;
    double log_q_C;  ///< C in log_q form; meaningful even when C underflows
    // echoed inputs
    std::uint32_t q;
    std::uint64_t r;
    double delta, delta_prime;
    std::uint64_t n0;
};

/// Quantitative constants for the supersaturation step: from "density
/// q^{(1-delta)n} forces one rank->=r solution" to "density q^{(1-delta')n}
/// forces C q^{rn - eps n} of them".
SupersatParams supersat_params(std::uint32_t q, std::uint64_t r, double delta,
                               double delta_prime, std::uint64_t n0);

struct SubspaceConstantsRow {
    std::uint64_t d;
    std::uint64_t n;
    double C;
    double delta;
};

/// Per-dimension density thresholds that force a d-dimensional affine
/// subspace, for q in {2, 3}: base row plus the doubling recurrence.
/// Returns rows 1..d.
std::vector<SubspaceConstantsRow> subspace_constants(std::uint32_t q, std::uint64_t d);

}  // namespace tamesys
