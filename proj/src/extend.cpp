#include "tamesys/extend.hpp"

#include <bit>
#include <stdexcept>

#include "tamesys/systems.hpp"

namespace tamesys {

namespace {

void require_tame(const Mat& A, std::size_t min_cols) {
    if (A.rank() != A.rows()) throw PreconditionViolated("matrix must have full row rank");
    if (A.cols() < min_cols) throw PreconditionViolated("too few columns for an extension step");
    if (!is_tame(A).tame) throw PreconditionViolated("matrix must be tame");
}

}  // namespace

TightSetReport tight_pivot(const Mat& A) {
    const std::size_t m = A.rows(), k = A.cols();
    if (k > 24) throw SearchSpaceTooLarge("tight-set enumeration limited to 24 columns");
    if (k < 2 * m + 2) throw PreconditionViolated("need k >= 2m + 2");
    if (A.rank() != m) throw PreconditionViolated("matrix must have full row rank");
    if (!is_tame(A).tame) throw PreconditionViolated("matrix must be tame");

    TightSetReport report;
    const std::uint64_t limit = std::uint64_t(1) << (k - 1);
    std::uint64_t inter = limit - 1;  // intersection of all tight sets
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        ColSet u;
        for (std::uint64_t m2 = mask; m2; m2 &= m2 - 1)
            u.push_back(static_cast<std::size_t>(std::countr_zero(m2)));
        long long f = 2 * static_cast<long long>(column_rank(A, u)) - 2 * static_cast<long long>(m) -
                      1 + static_cast<long long>(k) - static_cast<long long>(u.size());
        if (f == 0) {
            report.tight_sets.push_back(u);
            inter &= mask;
        }
    }
    for (std::uint64_t m2 = inter; m2; m2 &= m2 - 1)
        report.minimal.push_back(static_cast<std::size_t>(std::countr_zero(m2)));
    if (report.minimal.empty()) throw std::logic_error("minimal tight set is empty");
    report.pivot = report.minimal.front();
    return report;
}

Mat extend_step(const Mat& A) {
    const std::size_t m = A.rows(), k = A.cols();
    require_tame(A, 2 * m + 2);
    const FieldPtr& F = A.field();
    const std::size_t i = tight_pivot(A).pivot;

    if (F->q() == 2) {
        // three balanced rows over five new columns; the new rows reference
        // the pivot column and the last original column
        Mat out(F, m + 3, k + 5);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < k; ++c) out(r, c) = A(r, c);
        out(m, i) = 1;
        out(m, k - 1) = 1;
        out(m, k) = 1;
        out(m, k + 2) = 1;
        out(m + 1, i) = 1;
        out(m + 1, k) = 1;
        out(m + 1, k + 1) = 1;
        out(m + 1, k + 3) = 1;
        out(m + 2, k - 1) = 1;
        out(m + 2, k) = 1;
        out(m + 2, k + 1) = 1;
        out(m + 2, k + 4) = 1;
        return out;
    }

    // nonzero alpha, beta, gamma with alpha + beta + gamma = 0:
    // alpha = beta = 1, gamma = -2 when that is nonzero, otherwise the first
    // beta (by canonical encoding) with gamma = -(1 + beta) nonzero
    Elem alpha = 1, beta = 1;
    Elem gamma = F->neg(F->add(1, 1));
    if (gamma == 0) {
        for (Elem b = 1;; ++b) {
            Elem g = F->neg(F->add(1, b));
            if (b != 0 && g != 0) {
                beta = b;
                gamma = g;
                break;
            }
        }
    }
    Mat out(F, m + 1, k + 1);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < k; ++c) out(r, c) = A(r, c);
    out(m, i) = alpha;
    out(m, k - 1) = beta;
    out(m, k) = gamma;
    return out;
}

NormalizeResult normalize_to_tame_square(const Mat& A) {
    const std::size_t m0 = A.rows(), k0 = A.cols();
    require_tame(A, 2 * m0 + 1);

    NormalizeResult out{A, {}};
    while (out.matrix.cols() != 2 * out.matrix.rows() + 1) {
        std::size_t pivot = tight_pivot(out.matrix).pivot;
        bool gadget = out.matrix.field()->q() == 2;
        out.matrix = extend_step(out.matrix);
        out.steps.push_back({pivot, gadget, out.matrix.rows(), out.matrix.cols()});
    }

    // for balanced systems the witness of the normalized matrix must
    // restrict to a generic solution of the input on the original variables
    if (is_row_balanced(A)) {
        Tuple w = generic_witness_lowdim(out.matrix);
        Tuple restricted;
        restricted.field = w.field;
        restricted.n = w.n;
        restricted.points.assign(w.points.begin(),
                                 w.points.begin() + static_cast<std::ptrdiff_t>(k0));
        if (!classify_solution(A, restricted).is_generic)
            throw std::logic_error("normalized witness does not project to a generic solution");
    }
    return out;
}

}  // namespace tamesys
