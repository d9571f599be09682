#pragma once

#include <utility>

#include "tamesys/matrix.hpp"
#include "tamesys/matroid.hpp"
#include "tamesys/point.hpp"

namespace tamesys {

/// True iff every row of A sums to zero, i.e. the equations are affine
/// dependencies between the variable points.
bool is_row_balanced(const Mat& A);

/// The (n+1) x k matrix stacking an all-ones row over the points as columns.
/// Its rank is the affine rank of the tuple, its kernel the space of
/// balanced linear relations the tuple satisfies.
Mat stacked_affine_matrix(const Tuple& x);

/// Basis (as rows) of the balanced annihilator of x: all (mu_1,...,mu_k)
/// with sum mu_i x_i = 0 and sum mu_i = 0. Row count is k - affine_rank(x).
Mat ann_bal_basis(const Tuple& x);

std::size_t affine_rank(const Tuple& x);

struct SolutionClass {
    std::size_t arank = 0;
    std::size_t ann_dim = 0;
    bool is_solution = false;
    bool is_trivial = false;
    bool is_shape = false;    ///< all points pairwise distinct (false for k = 1)
    bool is_generic = false;  ///< solution whose only affine relations come from A
};

/// Classify x against a balanced full-row-rank system A. A solution is
/// generic exactly when its affine rank attains k - m, equivalently when its
/// balanced annihilator equals the row space of A.
SolutionClass classify_solution(const Mat& A, const Tuple& x);

/// A generic solution in F_q^{k-m-1}, built constructively: the non-pivot
/// variables take affinely independent values (standard basis vectors, the
/// last one zero) and the pivot variables are solved for.
Tuple generic_witness_lowdim(const Mat& A);

/// For a tame balanced m x (2m+1) system and a solution x of affine rank
/// r <= m: disjoint index sets I1, I2 of size r whose sub-tuples both have
/// affine rank r. Extends A's rows to a basis of the annihilator of x, takes
/// covering bases of the (m+1)-row top block, grows them to bases of the
/// extended system and returns the complements.
std::pair<ColSet, ColSet> disjoint_rank_sets(const Mat& A, const Tuple& x);

/// True iff x is the image of z under an injective linear map plus a
/// translation. Decided by comparing balanced annihilators; x's ambient
/// dimension must be at least z's for any injective map to exist.
bool is_affine_copy(const Tuple& z, const Tuple& x);

}  // namespace tamesys
