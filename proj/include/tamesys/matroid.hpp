#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tamesys/matrix.hpp"

namespace tamesys {

/// Column subset, strictly ascending 0-based indices.
using ColSet = std::vector<std::size_t>;

/// Rank of the submatrix induced by the columns in U. Monotone and
/// submodular in U; this is the rank function of the column matroid.
std::size_t column_rank(const Mat& A, const ColSet& U);

/**
 * Certificate for the maximum union of two independent column sets inside
 * `ground`: the pair (I, J) attains the maximum and U_min certifies it from
 * the other side,
 *
 *     |I ∪ J| = |ground| - |U_min| + 2 r(U_min),
 *
 * which no pair can exceed. I and J are disjoint; both are lexicographically
 * smallest among optimal choices (I first, then J given I), and U_min is the
 * lexicographically smallest minimizer.
 */
struct UnionCertificate {
    ColSet I, J;
    ColSet U_min;
    std::size_t value = 0;
};

UnionCertificate max_union_two_independent(const Mat& A, const ColSet& ground);

/**
 * Tameness of a full-row-rank m x k matrix: every proper column subset U
 * (including the empty set) satisfies 2 r(U) >= 2m + 1 - k + |U|;
 * equivalently, every [k] \ {i} contains two disjoint column bases.
 *
 * A tame verdict carries one disjoint basis pair per avoided column; a
 * not-tame verdict carries a proper subset violating the rank inequality.
 */
struct TamenessCertificate {
    bool tame = false;
    std::vector<std::pair<ColSet, ColSet>> witnesses;  // witnesses[i] avoids column i
    ColSet violating;
};

TamenessCertificate is_tame(const Mat& A);

/// Two disjoint bases of A inside [k] \ {i}, lexicographically smallest
/// (first basis, then second), or nullopt when no such pair exists.
std::optional<std::pair<ColSet, ColSet>> disjoint_bases_avoiding(const Mat& A, std::size_t i);

/// For A of shape (m+1) x (2m+1), rank m+1, whose first m rows form a tame
/// matrix: two bases B1, B2 with B1 ∪ B2 = all columns (they overlap in
/// exactly one column).
std::pair<ColSet, ColSet> covering_bases(const Mat& A);

namespace detail {

/// The algorithmic route to the min side: a tight set derived from the
/// reachability structure of the final augmentation state. The certificate
/// route enumerates subsets instead when the ground set is small; this one
/// works at any size and is exposed so the two can be cross-checked.
ColSet union_dual_tight_set(const Mat& A, const ColSet& ground);

}  // namespace detail

}  // namespace tamesys
