#pragma once

#include <vector>

#include "tamesys/matrix.hpp"
#include "tamesys/matroid.hpp"

namespace tamesys {

/**
 * Tight sets of a tame m x k matrix with k >= 2m+2: the subsets U of the
 * first k-1 columns where f(U) = 2 r(U) - 2m - 1 + k - |U| vanishes. The
 * family is closed under union and intersection, so it has a unique minimal
 * member; the pivot is that member's smallest column.
 */
struct TightSetReport {
    std::vector<ColSet> tight_sets;  // ascending mask order
    ColSet minimal;
    std::size_t pivot = 0;
};

TightSetReport tight_pivot(const Mat& A);

/// One extension step: appends a row (and column) that shrinks k - 2m by
/// one while preserving tameness and full rank; row balance is preserved
/// whenever the input has it. Over F_2 a single balanced row cannot work;
/// a fixed 3-row, 5-column block is appended instead.
Mat extend_step(const Mat& A);

struct NormalizeStep {
    std::size_t pivot;
    bool gadget;       // true when the F_2 block was used
    std::size_t rows, cols;  // shape after the step
};

struct NormalizeResult {
    Mat matrix;
    std::vector<NormalizeStep> steps;
};

/// Repeats extend_step until the shape is m' x (2m'+1). The first k columns
/// always stay the original variables in order; for balanced inputs the
/// result's low-dimensional generic witness restricted to those columns is
/// verified to be a generic solution of the input.
NormalizeResult normalize_to_tame_square(const Mat& A);

}  // namespace tamesys
