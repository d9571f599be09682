#include "tamesys/systems.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamesys {

bool is_row_balanced(const Mat& A) {
    const Field& F = *A.field();
    for (std::size_t r = 0; r < A.rows(); ++r) {
        Elem s = 0;
        for (std::size_t c = 0; c < A.cols(); ++c) s = F.add(s, A(r, c));
        if (s != 0) return false;
    }
    return true;
}

Mat stacked_affine_matrix(const Tuple& x) {
    Mat m(x.field, x.n + 1, x.k());
    for (std::size_t j = 0; j < x.k(); ++j) {
        if (x.points[j].size() != x.n) throw DimensionMismatch("tuple point has wrong dimension");
        m(0, j) = 1;
        for (std::size_t i = 0; i < x.n; ++i) m(i + 1, j) = x.points[j][i];
    }
    return m;
}

Mat ann_bal_basis(const Tuple& x) {
    return stacked_affine_matrix(x).kernel_basis();
}

std::size_t affine_rank(const Tuple& x) {
    return stacked_affine_matrix(x).rank();
}

namespace {

// A (m x k) times the k x n matrix of points; zero iff x solves the system.
bool solves(const Mat& A, const Tuple& x) {
    const Field& F = *A.field();
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < x.n; ++c) {
            Elem s = 0;
            for (std::size_t j = 0; j < A.cols(); ++j)
                s = F.add(s, F.mul(A(r, j), x.points[j][c]));
            if (s != 0) return false;
        }
    return true;
}

}  // namespace

SolutionClass classify_solution(const Mat& A, const Tuple& x) {
    if (x.k() != A.cols()) throw DimensionMismatch("tuple length does not match column count");
    if (!x.field->same(*A.field())) throw DimensionMismatch("field mismatch");
    const std::size_t k = x.k(), m = A.rows();

    SolutionClass out;
    out.arank = affine_rank(x);
    out.ann_dim = k - out.arank;
    out.is_solution = solves(A, x);

    out.is_trivial = true;
    for (std::size_t j = 1; j < k && out.is_trivial; ++j)
        out.is_trivial = x.points[j] == x.points[0];

    out.is_shape = k > 1;
    for (std::size_t a = 0; a < k && out.is_shape; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (x.points[a] == x.points[b]) {
                out.is_shape = false;
                break;
            }

    out.is_generic = out.is_solution && out.arank == k - m;
    return out;
}

Tuple generic_witness_lowdim(const Mat& A) {
    if (!is_row_balanced(A)) throw NotBalanced("matrix must be row-balanced");
    const std::size_t m = A.rows(), k = A.cols();
    RrefResult r = A.rref();
    if (r.rank != m) throw NotFullRowRank("matrix must have full row rank");
    if (k < m + 1) throw PreconditionViolated("need k >= m + 1");

    const std::size_t dim = k - m - 1;
    std::vector<bool> is_pivot(k, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < k; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Tuple z;
    z.field = A.field();
    z.n = dim;
    z.points.assign(k, Point(dim, 0));

    // free variables: e_1, ..., e_{k-m-1}, then the zero point
    for (std::size_t t = 0; t + 1 < free_cols.size(); ++t)
        z.points[free_cols[t]][t] = 1;

    // pivot variables are the negated combinations of the free ones
    const Field& F = *A.field();
    for (std::size_t pr = 0; pr < m; ++pr) {
        Point& p = z.points[r.pivots[pr]];
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            Elem coef = r.entries[pr * k + free_cols[t]];
            if (coef == 0) continue;
            for (std::size_t c = 0; c < dim; ++c)
                p[c] = F.sub(p[c], F.mul(coef, z.points[free_cols[t]][c]));
        }
    }
    return z;
}

std::pair<ColSet, ColSet> disjoint_rank_sets(const Mat& A, const Tuple& x) {
    const std::size_t m = A.rows(), k = A.cols();
    if (k != 2 * m + 1) throw PreconditionViolated("expected shape m x (2m+1)");
    if (!is_row_balanced(A)) throw PreconditionViolated("matrix must be row-balanced");
    if (A.rank() != m) throw PreconditionViolated("matrix must have full row rank");
    if (!is_tame(A).tame) throw PreconditionViolated("matrix must be tame");
    if (x.k() != k) throw DimensionMismatch("tuple length does not match column count");
    if (!solves(A, x)) throw PreconditionViolated("tuple does not solve the system");
    const std::size_t r = affine_rank(x);
    if (r > m) throw PreconditionViolated("affine rank exceeds m");

    // extend A's rows to a basis of the annihilator of x, greedily from the
    // kernel basis of the stacked matrix (ascending free-column order)
    const std::size_t target = k - r;  // dim of the annihilator
    Mat ann = ann_bal_basis(x);
    Mat ext = A;
    std::size_t have = m;
    for (std::size_t i = 0; i < ann.rows() && have < target; ++i) {
        Mat cand(A.field(), 1, k);
        for (std::size_t c = 0; c < k; ++c) cand(0, c) = ann(i, c);
        Mat grown = ext.vstack(cand);
        if (grown.rank() == have + 1) {
            ext = std::move(grown);
            ++have;
        }
    }
    if (have != target) throw std::logic_error("annihilator extension fell short");

    // covering bases of the (m+1)-row top block, grown to bases of ext
    Mat top(A.field(), m + 1, k);
    for (std::size_t i = 0; i < m + 1; ++i)
        for (std::size_t c = 0; c < k; ++c) top(i, c) = ext(i, c);
    auto [c1, c2] = covering_bases(top);

    auto complete = [&](ColSet part) {
        std::vector<bool> in(k, false);
        for (std::size_t j : part) in[j] = true;
        std::size_t sz = part.size();
        for (std::size_t j = 0; j < k && sz < target; ++j) {
            if (in[j]) continue;
            ColSet cand = part;
            cand.push_back(j);
            std::sort(cand.begin(), cand.end());
            if (column_rank(ext, cand) == sz + 1) {
                part = std::move(cand);
                in[j] = true;
                ++sz;
            }
        }
        return part;
    };
    ColSet b1 = complete(c1), b2 = complete(c2);

    auto complement = [&](const ColSet& b) {
        std::vector<bool> in(k, false);
        for (std::size_t j : b) in[j] = true;
        ColSet out;
        for (std::size_t j = 0; j < k; ++j)
            if (!in[j]) out.push_back(j);
        return out;
    };
    return {complement(b1), complement(b2)};
}

bool is_affine_copy(const Tuple& z, const Tuple& x) {
    if (z.k() != x.k()) throw LengthMismatch("tuples must have the same length");
    if (!z.field->same(*x.field)) throw LengthMismatch("field mismatch");
    if (x.n < z.n) return false;  // no injective linear map into a smaller space

    Mat kz = ann_bal_basis(z);
    Mat kx = ann_bal_basis(x);
    if (kz.rows() != kx.rows()) return false;
    return kz.vstack(kx).rank() == kz.rows();
}

}  // namespace tamesys
