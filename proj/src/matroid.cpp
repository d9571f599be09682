#include "tamesys/matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <stdexcept>

namespace tamesys {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask(1) << i; }
int popcount(Mask m) { return std::popcount(m); }

Mask to_mask(const ColSet& s, std::size_t cols) {
    Mask m = 0;
    for (std::size_t i : s) {
        if (i >= cols) throw IndexOutOfRange("column index out of range");
        m |= bit(i);
    }
    return m;
}

ColSet to_set(Mask m) {
    ColSet s;
    while (m) {
        s.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return s;
}

// Gaussian elimination over the selected columns; no pivoting subtleties
// over an exact field.
std::size_t rank_mask(const Mat& A, Mask mask) {
    const Field& F = *A.field();
    const std::size_t m = A.rows();
    std::vector<std::vector<Elem>> basis;  // reduced vectors
    std::vector<std::size_t> pivot_of;     // pivot row of each basis vector
    std::vector<Elem> v(m);
    for (Mask rest = mask; rest; rest &= rest - 1) {
        std::size_t c = static_cast<std::size_t>(std::countr_zero(rest));
        for (std::size_t r = 0; r < m; ++r) v[r] = A(r, c);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Elem factor = v[pivot_of[b]];
            if (factor == 0) continue;
            for (std::size_t r = 0; r < m; ++r)
                v[r] = F.sub(v[r], F.mul(factor, basis[b][r]));
        }
        std::size_t pr = 0;
        while (pr < m && v[pr] == 0) ++pr;
        if (pr == m) continue;
        Elem s = F.inv(v[pr]);
        for (std::size_t r = 0; r < m; ++r) v[r] = F.mul(s, v[r]);
        basis.push_back(v);
        pivot_of.push_back(pr);
        if (basis.size() == m) break;  // cannot grow further
    }
    if (basis.size() == m) {
        // columns after the break are immaterial for the rank
        return m;
    }
    return basis.size();
}

// true lexicographic order on sets viewed as ascending sequences,
// with a proper prefix ordered before its extensions
bool lex_less(Mask a, Mask b) {
    while (a && b) {
        int xa = std::countr_zero(a), xb = std::countr_zero(b);
        if (xa != xb) return xa < xb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

using Oracle = std::function<bool(Mask)>;

struct UnionPair {
    Mask I = 0, J = 0;
};

// One augmentation attempt for the two-matroid partition problem: place e,
// cascading evictions between the two sides along a shortest exchange path.
// Non-mutating failure; on success the pair is updated.
bool union_place(UnionPair& st, const Oracle& indep_i, const Oracle& indep_j, std::size_t e,
                 Mask* seen_i = nullptr, Mask* seen_j = nullptr) {
    std::array<int, 128> parent;
    parent.fill(-1);
    std::deque<int> queue;
    auto push = [&](int node, int par) {
        if (parent[node] == -1) {
            parent[node] = par;
            queue.push_back(node);
        }
    };
    push(static_cast<int>(e) * 2 + 0, -2);
    push(static_cast<int>(e) * 2 + 1, -2);

    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        std::size_t x = static_cast<std::size_t>(node) >> 1;
        int side = node & 1;
        Mask S = side ? st.J : st.I;
        const Oracle& ind = side ? indep_j : indep_i;

        if (ind(S | bit(x))) {
            // apply the path leaf-to-root: terminal enters freely, every
            // ancestor replaces the element it evicted
            Mask& term = side ? st.J : st.I;
            term |= bit(x);
            int cur = node;
            while (parent[cur] != -2) {
                int par = parent[cur];
                Mask& set = (par & 1) ? st.J : st.I;
                set = (set & ~bit(static_cast<std::size_t>(cur) >> 1)) | bit(static_cast<std::size_t>(par) >> 1);
                cur = par;
            }
            return true;
        }
        for (Mask rest = S; rest; rest &= rest - 1) {
            std::size_t y = static_cast<std::size_t>(std::countr_zero(rest));
            int nnode = static_cast<int>(y) * 2 + (side ^ 1);
            if (parent[nnode] == -1 && ind((S & ~bit(y)) | bit(x))) push(nnode, node);
        }
    }
    if (seen_i || seen_j) {
        for (std::size_t v = 0; v < 64; ++v) {
            if (seen_i && parent[v * 2 + 0] != -1) *seen_i |= bit(v);
            if (seen_j && parent[v * 2 + 1] != -1) *seen_j |= bit(v);
        }
    }
    return false;
}

// Greedy maximum of |I| + |J| over disjoint pairs independent in the two
// matroids; elements processed in ascending order. Skipped elements stay
// unplaceable (closure is monotone), so one pass suffices.
struct UnionRun {
    UnionPair pair;
    Mask unplaced = 0;
};

UnionRun union_max(Mask ground, const Oracle& indep_i, const Oracle& indep_j) {
    UnionRun run;
    for (Mask rest = ground; rest; rest &= rest - 1) {
        std::size_t e = static_cast<std::size_t>(std::countr_zero(rest));
        if (!union_place(run.pair, indep_i, indep_j, e)) run.unplaced |= bit(e);
    }
    return run;
}

// Tight set from the final state: elements of I wanted by the J side, the
// mirror image, and everything that never found a home. Attains
// |ground| - |U| + r_i(U) + r_j(U) = |I| + |J|.
Mask union_dual(const UnionRun& run, const Oracle& indep_i, const Oracle& indep_j) {
    Mask seen_i = 0, seen_j = 0;
    UnionPair probe = run.pair;
    for (Mask rest = run.unplaced; rest; rest &= rest - 1) {
        std::size_t e = static_cast<std::size_t>(std::countr_zero(rest));
        union_place(probe, indep_i, indep_j, e, &seen_i, &seen_j);
    }
    return (run.pair.I & seen_j) | (run.pair.J & seen_i) | run.unplaced;
}

Oracle column_oracle(const Mat& A) {
    return [&A](Mask m) { return rank_mask(A, m) == static_cast<std::size_t>(popcount(m)); };
}

// Independence in the contraction by `base`: X independent iff
// r(X ∪ base) = |X| + r(base).
Oracle contraction_oracle(const Mat& A, Mask base) {
    std::size_t rb = rank_mask(A, base);
    return [&A, base, rb](Mask m) {
        return rank_mask(A, m | base) == static_cast<std::size_t>(popcount(m)) + rb;
    };
}

// Value of the two-sided union with the left side forced to contain `prefix`:
// |prefix| plus the union of (column matroid / prefix) and the column matroid
// on the remaining ground.
std::size_t value_with_prefix(const Mat& A, Mask ground, Mask prefix) {
    Mask rest = ground & ~prefix;
    Oracle left = contraction_oracle(A, prefix);
    Oracle right = column_oracle(A);
    UnionRun run = union_max(rest, left, right);
    return static_cast<std::size_t>(popcount(prefix) + popcount(run.pair.I) + popcount(run.pair.J));
}

// Lexicographically smallest independent subset of `ground` of size `target`
// (ascending greedy with a feasibility check on the remainder).
Mask lex_independent_of_size(const Mat& A, Mask ground, std::size_t target) {
    Mask chosen = 0;
    std::size_t have = 0;
    for (Mask rest = ground; rest && have < target; rest &= rest - 1) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
        Mask cand = chosen | bit(j);
        if (rank_mask(A, cand) != have + 1) continue;
        Mask tail = ground & ~(bit(j) | (bit(j) - 1));  // elements strictly above j
        if (rank_mask(A, cand | tail) >= target) {
            chosen = cand;
            ++have;
        }
    }
    if (have != target) throw std::logic_error("independent set of requested size not found");
    return chosen;
}

}  // namespace

std::size_t column_rank(const Mat& A, const ColSet& U) {
    if (A.cols() > 63) throw SearchSpaceTooLarge("more than 63 columns");
    return rank_mask(A, to_mask(U, A.cols()));
}

namespace detail {

ColSet union_dual_tight_set(const Mat& A, const ColSet& ground) {
    if (A.cols() > 63) throw SearchSpaceTooLarge("more than 63 columns");
    Mask g = to_mask(ground, A.cols());
    Oracle ind = column_oracle(A);
    UnionRun run = union_max(g, ind, ind);
    return to_set(union_dual(run, ind, ind));
}

}  // namespace detail

UnionCertificate max_union_two_independent(const Mat& A, const ColSet& ground) {
    if (A.cols() > 63) throw SearchSpaceTooLarge("more than 63 columns");
    Mask g = to_mask(ground, A.cols());
    Oracle ind = column_oracle(A);

    UnionRun run = union_max(g, ind, ind);
    std::size_t value = static_cast<std::size_t>(popcount(run.pair.I) + popcount(run.pair.J));

    UnionCertificate cert;
    cert.value = value;

    // min side
    const std::size_t gsize = static_cast<std::size_t>(popcount(g));
    if (gsize <= 20) {
        std::size_t best = gsize + 1000;
        Mask best_mask = 0;
        Mask sub = g;
        while (true) {
            std::size_t v = gsize - static_cast<std::size_t>(popcount(sub)) + 2 * rank_mask(A, sub);
            if (v < best || (v == best && lex_less(sub, best_mask))) {
                best = v;
                best_mask = sub;
            }
            if (sub == 0) break;
            sub = (sub - 1) & g;
        }
        if (best != value)
            throw std::logic_error("matroid union min-max mismatch");
        cert.U_min = to_set(best_mask);
    } else {
        Mask u = union_dual(run, ind, ind);
        std::size_t v = gsize - static_cast<std::size_t>(popcount(u)) + 2 * rank_mask(A, u);
        if (v != value)
            throw std::logic_error("matroid union dual certificate not tight");
        cert.U_min = to_set(u);
    }

    // canonical max side: lexicographically smallest I over all optimal
    // pairs (a prefix orders before its extensions, so close I as soon as
    // the complement alone supports the value), then smallest J given I
    Mask I = 0;
    std::size_t isz = 0;
    while (true) {
        std::size_t need = value - isz;
        if (rank_mask(A, g & ~I) >= need) break;  // I itself is feasible
        bool grew = false;
        std::size_t from = isz == 0 ? 0 : to_set(I).back() + 1;
        for (Mask rest = g & ~(I | (from ? (bit(from) - 1) : 0)); rest; rest &= rest - 1) {
            std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
            Mask cand = I | bit(j);
            if (rank_mask(A, cand) != isz + 1) continue;
            if (value_with_prefix(A, g, cand) == value) {
                I = cand;
                ++isz;
                grew = true;
                break;
            }
        }
        if (!grew) throw std::logic_error("canonical union pair construction failed");
    }
    Mask J = lex_independent_of_size(A, g & ~I, value - isz);
    cert.I = to_set(I);
    cert.J = to_set(J);
    return cert;
}

std::optional<std::pair<ColSet, ColSet>> disjoint_bases_avoiding(const Mat& A, std::size_t i) {
    if (A.cols() > 63) throw SearchSpaceTooLarge("more than 63 columns");
    if (i >= A.cols()) throw IndexOutOfRange("column index out of range");
    const std::size_t m = A.rows();
    if (rank_mask(A, (bit(A.cols()) - 1)) != m) throw NotFullRowRank("matrix must have full row rank");

    Mask g = (bit(A.cols()) - 1) & ~bit(i);
    auto pair_value = [&](Mask prefix) {
        return value_with_prefix(A, g, prefix);
    };
    if (pair_value(0) < 2 * m) return std::nullopt;

    // lexicographically smallest first basis whose complement still holds a
    // disjoint one, then the smallest basis of the complement
    Mask B1 = 0;
    for (std::size_t have = 0; have < m;) {
        bool grew = false;
        std::size_t from = have == 0 ? 0 : to_set(B1).back() + 1;
        for (Mask rest = g & ~(B1 | (from ? (bit(from) - 1) : 0)); rest; rest &= rest - 1) {
            std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
            Mask cand = B1 | bit(j);
            if (rank_mask(A, cand) != have + 1) continue;
            if (pair_value(cand) == 2 * m) {
                B1 = cand;
                ++have;
                grew = true;
                break;
            }
        }
        if (!grew) throw std::logic_error("disjoint basis prefix construction failed");
    }
    Mask B2 = lex_independent_of_size(A, g & ~B1, m);
    return std::make_pair(to_set(B1), to_set(B2));
}

TamenessCertificate is_tame(const Mat& A) {
    if (A.cols() > 63) throw SearchSpaceTooLarge("more than 63 columns");
    const std::size_t m = A.rows(), k = A.cols();
    if (rank_mask(A, bit(k) - 1) != m) throw NotFullRowRank("matrix must have full row rank");

    TamenessCertificate cert;
    for (std::size_t i = 0; i < k; ++i) {
        auto pair = disjoint_bases_avoiding(A, i);
        if (!pair) {
            // translate the failed union into a violating proper subset:
            // the min side of the union over [k] \ {i} satisfies
            // (k-1) - |U| + 2 r(U) < 2m, i.e. 2 r(U) < 2m + 1 - k + |U|
            ColSet ground;
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) ground.push_back(j);
            UnionCertificate uc = max_union_two_independent(A, ground);
            cert.tame = false;
            cert.witnesses.clear();
            cert.violating = uc.U_min;
            return cert;
        }
        cert.witnesses.push_back(*pair);
    }
    cert.tame = true;
    return cert;
}

std::pair<ColSet, ColSet> covering_bases(const Mat& A) {
    if (A.cols() > 63) throw SearchSpaceTooLarge("more than 63 columns");
    const std::size_t rows = A.rows(), cols = A.cols();
    if (rows < 1 || cols != 2 * rows - 1)
        throw PreconditionViolated("expected shape (m+1) x (2m+1)");
    const std::size_t m = rows - 1;
    Mask all = bit(cols) - 1;
    if (rank_mask(A, all) != rows) throw PreconditionViolated("matrix must have rank m+1");

    // top m rows must form a tame matrix
    Mat top(A.field(), m, cols);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < cols; ++c) top(r, c) = A(r, c);
    if (rank_mask(top, all) != m) throw PreconditionViolated("top block must have full row rank");
    if (!is_tame(top).tame) throw PreconditionViolated("top block must be tame");

    Oracle ind = column_oracle(A);
    UnionRun run = union_max(all, ind, ind);
    if (run.unplaced != 0)
        throw std::logic_error("covering union did not reach all columns");

    // the pair splits 2m+1 as (m+1) + m; grow each part to a basis
    auto complete = [&](Mask part) {
        std::size_t have = static_cast<std::size_t>(popcount(part));
        for (Mask rest = all & ~part; rest && have < rows; rest &= rest - 1) {
            std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
            if (rank_mask(A, part | bit(j)) == have + 1) {
                part |= bit(j);
                ++have;
            }
        }
        return part;
    };
    Mask B1 = complete(run.pair.I);
    Mask B2 = complete(run.pair.J);
    if (lex_less(B2, B1)) std::swap(B1, B2);
    return {to_set(B1), to_set(B2)};
}

}  // namespace tamesys
