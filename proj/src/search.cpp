#include "tamesys/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "tamesys/rng.hpp"
#include "tamesys/systems.hpp"

namespace tamesys {

PointSet::PointSet(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n) {
    space_ = space_size(*f_, n_);
    if (space_ > (Code(1) << 24)) throw SearchSpaceTooLarge("q^n exceeds 2^24");
    member_.assign(space_, false);
}

PointSet PointSet::full(FieldPtr f, std::size_t n) {
    PointSet s(std::move(f), n);
    for (Code c = 0; c < s.space_; ++c) s.add(c);
    return s;
}

PointSet PointSet::of_codes(FieldPtr f, std::size_t n, const std::vector<Code>& codes) {
    PointSet s(std::move(f), n);
    for (Code c : codes) s.add(c);
    return s;
}

void PointSet::add(Code c) {
    if (c >= space_) throw IndexOutOfRange("point code out of range");
    if (member_[c]) return;
    member_[c] = true;
    codes_.insert(std::lower_bound(codes_.begin(), codes_.end(), c), c);
}

void enumerate_solutions(const Mat& A, const PointSet& S,
                         const std::function<bool(const Tuple&)>& yield) {
    if (!A.field()->same(*S.field())) throw DimensionMismatch("field mismatch");
    const Field& F = *A.field();
    const std::size_t m = A.rows(), k = A.cols(), n = S.n();
    RrefResult r = A.rref();
    if (r.rank != m) throw NotFullRowRank("matrix must have full row rank");

    std::vector<bool> is_pivot(k, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < k; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const std::size_t nfree = free_cols.size();

    if (S.size() == 0) return;

    // decoded coordinates of the member points, in code order
    std::vector<Point> pts;
    pts.reserve(S.size());
    for (Code c : S.codes()) pts.push_back(decode_point(F, n, c));

    Tuple x;
    x.field = A.field();
    x.n = n;
    x.points.assign(k, Point(n, 0));

    std::vector<std::size_t> idx(nfree, 0);  // odometer over S, first index slowest
    while (true) {
        for (std::size_t t = 0; t < nfree; ++t) x.points[free_cols[t]] = pts[idx[t]];
        bool member = true;
        for (std::size_t pr = 0; pr < m && member; ++pr) {
            Point& p = x.points[r.pivots[pr]];
            std::fill(p.begin(), p.end(), 0);
            for (std::size_t t = 0; t < nfree; ++t) {
                Elem coef = r.entries[pr * k + free_cols[t]];
                if (coef == 0) continue;
                const Point& zp = pts[idx[t]];
                for (std::size_t c = 0; c < n; ++c) p[c] = F.sub(p[c], F.mul(coef, zp[c]));
            }
            member = S.contains(encode_point(F, p));
        }
        if (member && !yield(x)) return;

        if (nfree == 0) return;
        std::size_t t = nfree;
        while (true) {
            --t;
            if (++idx[t] < S.size()) break;
            idx[t] = 0;
            if (t == 0) return;
        }
    }
}

RankHistogram arank_histogram(const Mat& A, const PointSet& S) {
    RankHistogram h;
    enumerate_solutions(A, S, [&](const Tuple& x) {
        ++h.counts[affine_rank(x)];
        ++h.total;
        return true;
    });
    return h;
}

namespace {

bool forbidden(const SolutionClass& cls, Forbid f) {
    switch (f) {
        case Forbid::Generic: return cls.is_generic;
        case Forbid::Shape: return cls.is_shape;
        case Forbid::Nontrivial: return !cls.is_trivial;
    }
    return false;
}

// The caller extends a clean set one point at a time, so any forbidden
// solution found here involves the newest point; a full sweep is an
// equivalent check at these sizes.
bool clean(const Mat& A, const PointSet& S, Forbid f) {
    bool ok = true;
    enumerate_solutions(A, S, [&](const Tuple& x) {
        if (forbidden(classify_solution(A, x), f)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

struct BnB {
    const Mat& A;
    Forbid forbid;
    const std::vector<Code>& order;
    FieldPtr field;
    std::size_t n;
    std::vector<Code> chosen;
    std::vector<Code> best;

    void run(std::size_t idx) {
        if (chosen.size() + (order.size() - idx) <= best.size()) return;
        if (idx == order.size()) {
            best = chosen;
            return;
        }
        chosen.push_back(order[idx]);
        if (clean(A, PointSet::of_codes(field, n, chosen), forbid)) run(idx + 1);
        chosen.pop_back();
        run(idx + 1);
    }
};

}  // namespace

FreeSetResult max_solution_free_set(const Mat& A, std::size_t n, SearchMode mode, Forbid forbid,
                                    std::uint64_t seed, int trials) {
    const FieldPtr& F = A.field();
    Code space = space_size(*F, n);

    std::vector<Code> order(space);
    for (Code c = 0; c < space; ++c) order[c] = c;

    auto greedy_in_order = [&](const std::vector<Code>& ord) {
        std::vector<Code> got;
        for (Code c : ord) {
            got.push_back(c);
            if (!clean(A, PointSet::of_codes(F, n, got), forbid)) got.pop_back();
        }
        return got;
    };

    if (mode == SearchMode::Exact) {
        if (space > 100) throw SearchSpaceTooLarge("exact search limited to 100 points");
        BnB solver{A, forbid, order, F, n, {}, {}};
        solver.run(0);
        return {PointSet::of_codes(F, n, solver.best), true};
    }
    if (mode == SearchMode::Greedy) {
        return {PointSet::of_codes(F, n, greedy_in_order(order)), false};
    }
    // random restarts: seeded shuffles, keep the best set found
    Rng rng(seed);
    std::vector<Code> best;
    for (int t = 0; t < trials; ++t) {
        std::vector<Code> ord = order;
        for (std::size_t i = ord.size(); i > 1; --i)
            std::swap(ord[i - 1], ord[rng.below(i)]);
        std::vector<Code> got = greedy_in_order(ord);
        if (got.size() > best.size()) best = std::move(got);
    }
    return {PointSet::of_codes(F, n, best), false};
}

namespace {

// x + t v on point codes
Code translate(const Field& F, std::size_t n, Code x, Code v, Elem t) {
    Point px = decode_point(F, n, x), pv = decode_point(F, n, v);
    for (std::size_t i = 0; i < n; ++i) px[i] = F.add(px[i], F.mul(t, pv[i]));
    return encode_point(F, px);
}

bool in_span(const Field& F, std::size_t n, const std::vector<Code>& dirs, Code v) {
    std::vector<Point> basis;
    std::vector<std::size_t> piv;
    auto reduce = [&](Point w, bool insert) -> bool {  // true iff w reduces to zero
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Elem factor = w[piv[b]];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < n; ++c) w[c] = F.sub(w[c], F.mul(factor, basis[b][c]));
        }
        std::size_t pc = 0;
        while (pc < n && w[pc] == 0) ++pc;
        if (pc == n) return true;
        if (insert) {
            Elem s = F.inv(w[pc]);
            for (auto& e : w) e = F.mul(e, s);
            basis.push_back(std::move(w));
            piv.push_back(pc);
        }
        return false;
    };
    for (Code d : dirs) reduce(decode_point(F, n, d), true);
    return reduce(decode_point(F, n, v), false);
}

bool subspace_search(const Field& F, std::size_t n, const std::vector<Code>& members,
                     const std::vector<bool>& bitmap, const std::vector<Code>& canonical_dirs,
                     std::size_t from, std::size_t depth, std::vector<Code>& dirs,
                     AffineSubspace& out) {
    if (depth == 0) {
        if (members.empty()) return false;
        out.base = members.front();
        out.directions = dirs;
        return true;
    }
    Code need = 1;
    for (std::size_t i = 0; i < depth; ++i) need *= F.q();
    if (members.size() < need) return false;

    for (std::size_t di = from; di < canonical_dirs.size(); ++di) {
        Code v = canonical_dirs[di];
        if (in_span(F, n, dirs, v)) continue;
        // points whose whole line in direction v stays inside
        std::vector<Code> sub;
        std::vector<bool> subbit(bitmap.size(), false);
        for (Code x : members) {
            bool whole = true;
            for (Elem t = 1; t < F.q() && whole; ++t) whole = bitmap[translate(F, n, x, v, t)];
            if (whole) {
                sub.push_back(x);
                subbit[x] = true;
            }
        }
        dirs.push_back(v);
        if (subspace_search(F, n, sub, subbit, canonical_dirs, di + 1, depth - 1, dirs, out))
            return true;
        dirs.pop_back();
    }
    return false;
}

}  // namespace

std::optional<AffineSubspace> find_affine_subspace(const PointSet& S, std::size_t d) {
    const Field& F = *S.field();
    const std::size_t n = S.n();
    if (d > n) throw InvalidRange("subspace dimension exceeds ambient dimension");
    if (S.space() > (Code(1) << 14) || d > 3)
        throw SearchSpaceTooLarge("subspace search limited to q^n <= 2^14 and d <= 3");

    if (d == 0) {
        if (S.size() == 0) return std::nullopt;
        return AffineSubspace{S.codes().front(), {}};
    }

    // projective normal form: lowest-index nonzero coordinate equals 1
    std::vector<Code> canonical;
    for (Code v = 1; v < S.space(); ++v) {
        Point p = decode_point(F, n, v);
        std::size_t lead = 0;
        while (lead < n && p[lead] == 0) ++lead;
        if (lead < n && p[lead] == 1) canonical.push_back(v);
    }

    std::vector<bool> bitmap(S.space(), false);
    for (Code c : S.codes()) bitmap[c] = true;

    std::vector<Code> dirs;
    AffineSubspace out{};
    if (subspace_search(F, n, S.codes(), bitmap, canonical, 0, d, dirs, out)) return out;
    return std::nullopt;
}

ClpReport clp_rank_check(const FieldPtr& f, std::size_t n, std::uint64_t d, const PolyXY* poly,
                         std::uint64_t seed) {
    const Field& F = *f;
    const std::uint32_t q = F.q();
    Code space = space_size(F, n);
    if (space > 512) throw SearchSpaceTooLarge("evaluation matrix limited to q^n <= 512");
    if (d > 2 * n * static_cast<std::uint64_t>(q - 1))
        throw DegreeTooHigh("degree exceeds the maximum possible");

    PolyXY generated;
    if (poly == nullptr) {
        Rng rng(seed);
        const int want = 24;
        for (int mno = 0; mno < want; ++mno) {
            PolyXY::Mono mo;
            mo.ex.assign(n, 0);
            mo.ey.assign(n, 0);
            bool found = false;
            for (int tries = 0; tries < 10000 && !found; ++tries) {
                std::uint64_t total = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    mo.ex[i] = static_cast<std::uint8_t>(rng.below(q));
                    mo.ey[i] = static_cast<std::uint8_t>(rng.below(q));
                    total += mo.ex[i] + mo.ey[i];
                }
                found = total <= d;
            }
            if (!found) {
                std::fill(mo.ex.begin(), mo.ex.end(), 0);
                std::fill(mo.ey.begin(), mo.ey.end(), 0);
            }
            mo.coeff = static_cast<Elem>(1 + rng.below(q - 1));
            generated.monos.push_back(std::move(mo));
        }
        poly = &generated;
    } else {
        for (const auto& mo : poly->monos) {
            if (mo.ex.size() != n || mo.ey.size() != n)
                throw DimensionMismatch("monomial arity mismatch");
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (mo.ex[i] > q - 1 || mo.ey[i] > q - 1)
                    throw DegreeTooHigh("per-variable exponent exceeds q - 1");
                total += mo.ex[i] + mo.ey[i];
            }
            if (total > d) throw DegreeTooHigh("monomial degree exceeds d");
        }
    }

    std::vector<std::vector<Elem>> pw(q, std::vector<Elem>(q, 1));
    for (std::uint32_t v = 0; v < q; ++v)
        for (std::uint32_t e2 = 1; e2 < q; ++e2)
            pw[v][e2] = F.mul(pw[v][e2 - 1], static_cast<Elem>(v));

    std::vector<Point> pts;
    pts.reserve(space);
    for (Code c = 0; c < space; ++c) pts.push_back(decode_point(F, n, c));

    Mat M(f, space, space);
    std::vector<Elem> vx(space), vy(space);
    for (const auto& mo : poly->monos) {
        for (Code a = 0; a < space; ++a) {
            Elem prod = mo.coeff;
            for (std::size_t i = 0; i < n; ++i) prod = F.mul(prod, pw[pts[a][i]][mo.ex[i]]);
            vx[a] = prod;
        }
        for (Code b = 0; b < space; ++b) {
            Elem prod = 1;
            for (std::size_t i = 0; i < n; ++i) prod = F.mul(prod, pw[pts[b][i]][mo.ey[i]]);
            vy[b] = prod;
        }
        for (Code a = 0; a < space; ++a) {
            if (vx[a] == 0) continue;
            for (Code b = 0; b < space; ++b)
                M(a, b) = F.add(M(a, b), F.mul(vx[a], vy[b]));
        }
    }

    ClpReport rep;
    rep.monomials = poly->monos.size();
    rep.rank = M.rank();
    rep.bound = (BigUint(2) * monomial_count(q, n, d / 2)).to_u64();
    rep.ok = rep.rank <= rep.bound;
    return rep;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// exponent vectors in {0..q-1}^n of total degree <= d
std::vector<std::vector<std::uint8_t>> low_monomials(std::uint32_t q, std::size_t n,
                                                     std::uint64_t d) {
    std::vector<std::vector<std::uint8_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::uint8_t> cur(n, 0);
    while (true) {
        std::uint64_t total = 0;
        for (auto e : cur) total += e;
        if (total <= d) out.push_back(cur);
        std::size_t i = 0;
        while (i < n && ++cur[i] == q) cur[i++] = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace

ReplayReport proof_replay(const Mat& A, const PointSet& S, std::size_t r, int trials,
                          std::uint64_t seed) {
    const FieldPtr& f = A.field();
    const Field& F = *f;
    const std::uint32_t q = F.q();
    const std::size_t m = A.rows(), k = A.cols(), n = S.n();
    if (k != 2 * m + 1) throw PreconditionViolated("expected shape m x (2m+1)");
    if (!is_row_balanced(A)) throw PreconditionViolated("matrix must be row-balanced");
    if (A.rank() != m) throw PreconditionViolated("matrix must have full row rank");
    if (!is_tame(A).tame) throw PreconditionViolated("matrix must be tame");
    if (r < 1 || r > m) throw PreconditionViolated("need 1 <= r <= m");
    if (!f->same(*S.field())) throw DimensionMismatch("field mismatch");

    const std::size_t ssize = S.size();
    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < r; ++i) {
        dim *= ssize;
        if (dim > 2048) throw PreconditionViolated("|S|^r exceeds 2048");
    }
    const std::size_t t = k - 2 * r;

    ReplayReport rep;
    rep.n = n;
    rep.r = r;
    rep.t = t;
    rep.set_size = ssize;

    // functions on S annihilating every monomial of degree <= (q-1)nm/k
    const std::uint64_t d_floor = static_cast<std::uint64_t>(q - 1) * n * m / k;
    auto monos = low_monomials(q, n, d_floor);
    if (monos.size() > 5000) throw SearchSpaceTooLarge("too many constraint monomials");

    std::vector<std::vector<Elem>> pw(q, std::vector<Elem>(q, 1));
    for (std::uint32_t v = 0; v < q; ++v)
        for (std::uint32_t e2 = 1; e2 < q; ++e2)
            pw[v][e2] = F.mul(pw[v][e2 - 1], static_cast<Elem>(v));

    std::vector<Point> spts;
    spts.reserve(ssize);
    for (Code c : S.codes()) spts.push_back(decode_point(F, n, c));

    Mat C(f, monos.size(), ssize);
    for (std::size_t row = 0; row < monos.size(); ++row)
        for (std::size_t col = 0; col < ssize; ++col) {
            Elem prod = 1;
            for (std::size_t i = 0; i < n; ++i) prod = F.mul(prod, pw[spts[col][i]][monos[row][i]]);
            C(row, col) = prod;
        }
    Mat K = C.kernel_basis();
    const std::size_t dimv = K.rows();
    rep.kernel_dim = dimv;

    // coordinate section: restriction to the pivot columns of K is bijective
    std::vector<std::size_t> section = K.rref().pivots;  // indices into S's code list
    rep.section_size = section.size();

    // E = K_section^{-1} K, so a function h on the section extends to h * E
    Mat E(f, dimv, ssize);
    if (dimv > 0) {
        Mat aug(f, dimv, dimv + ssize);
        for (std::size_t i = 0; i < dimv; ++i) {
            for (std::size_t j = 0; j < dimv; ++j) aug(i, j) = K(i, section[j]);
            for (std::size_t j = 0; j < ssize; ++j) aug(i, dimv + j) = K(i, j);
        }
        RrefResult solved = aug.rref();
        if (solved.rank != dimv) throw std::logic_error("section matrix is singular");
        for (std::size_t i = 0; i < dimv; ++i)
            for (std::size_t j = 0; j < ssize; ++j)
                E(i, j) = solved.entries[i * (dimv + ssize) + dimv + j];
    }

    // all solutions in S, stored as S-indices per coordinate
    std::vector<std::size_t> index_of(S.space(), 0);
    for (std::size_t i = 0; i < ssize; ++i) index_of[S.codes()[i]] = i;
    std::vector<std::vector<std::size_t>> sols;
    enumerate_solutions(A, S, [&](const Tuple& x) {
        std::vector<std::size_t> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = index_of[encode_point(F, x.points[j])];
        sols.push_back(std::move(row));
        return true;
    });
    rep.solutions = sols.size();

    auto sub_rank = [&](const std::vector<std::size_t>& sol, const ColSet& idx) {
        Tuple sub;
        sub.field = f;
        sub.n = n;
        for (std::size_t j : idx) sub.points.push_back(spts[sol[j]]);
        return affine_rank(sub);
    };

    std::vector<std::size_t> t1;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        Tuple x;
        x.field = f;
        x.n = n;
        for (std::size_t j = 0; j < k; ++j) x.points.push_back(spts[sols[i][j]]);
        if (affine_rank(x) == r) t1.push_back(i);
    }
    rep.rank_r = t1.size();

    // pick the disjoint index pair with the most solutions of full sub-rank
    std::vector<ColSet> all_subsets;
    {
        ColSet cur;
        std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t from, std::size_t left) {
            if (left == 0) {
                all_subsets.push_back(cur);
                return;
            }
            for (std::size_t j = from; j + left <= k; ++j) {
                cur.push_back(j);
                gen(j + 1, left - 1);
                cur.pop_back();
            }
        };
        gen(0, r);
    }
    std::vector<std::size_t> t2;
    bool have_pair = false;
    for (const auto& i1 : all_subsets)
        for (const auto& i2 : all_subsets) {
            bool disjoint = true;
            for (std::size_t a : i1)
                for (std::size_t b : i2)
                    if (a == b) disjoint = false;
            if (!disjoint) continue;
            std::vector<std::size_t> cand;
            for (std::size_t idx : t1)
                if (sub_rank(sols[idx], i1) == r && sub_rank(sols[idx], i2) == r)
                    cand.push_back(idx);
            if (!have_pair || cand.size() > t2.size()) {
                have_pair = true;
                t2 = std::move(cand);
                rep.I = i1;
                rep.J = i2;
            }
        }
    rep.grouped = t2.size();

    ColSet rest;
    {
        std::vector<bool> used(k, false);
        for (std::size_t j : rep.I) used[j] = true;
        for (std::size_t j : rep.J) used[j] = true;
        for (std::size_t j = 0; j < k; ++j)
            if (!used[j]) rest.push_back(j);
    }

    std::vector<bool> in_section(ssize, false);
    std::vector<std::size_t> section_pos(ssize, 0);
    for (std::size_t i = 0; i < section.size(); ++i) {
        in_section[section[i]] = true;
        section_pos[section[i]] = i;
    }

    std::vector<std::size_t> t3;
    for (std::size_t idx : t2) {
        bool inside = true;
        for (std::size_t j : rest) inside = inside && in_section[sols[idx][j]];
        if (inside) t3.push_back(idx);
    }
    rep.sectioned = t3.size();

    auto key_of = [&](const std::vector<std::size_t>& sol, const ColSet& idx) {
        std::uint64_t key = 0;
        for (std::size_t j : idx) key = key * ssize + sol[j];
        return key;
    };

    {
        std::vector<std::uint64_t> pairkeys;
        for (std::size_t idx : t3)
            pairkeys.push_back(key_of(sols[idx], rep.I) * dim + key_of(sols[idx], rep.J));
        std::sort(pairkeys.begin(), pairkeys.end());
        pairkeys.erase(std::unique(pairkeys.begin(), pairkeys.end()), pairkeys.end());
        rep.pair_count = pairkeys.size();
    }

    const std::uint64_t rd_floor = static_cast<std::uint64_t>(r) * (q - 1) * n * m / k;
    rep.bound = (BigUint(2) * monomial_count(q, r * n, rd_floor)).to_u64();

    const std::uint64_t hsize = ipow(dimv, t);
    const double p_nonzero = static_cast<double>(q - 1) / q;
    rep.expected_support = p_nonzero * static_cast<double>(rep.pair_count);

    Rng rng(seed);
    double support_sum = 0.0;
    rep.ok_claim_rank = true;
    rep.ok_blur = true;

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Elem> h(hsize);
        for (auto& v : h) v = static_cast<Elem>(rng.below(q));

        // g(z) = sum over section tuples w of h(w) * prod_a E(w_a, z_a),
        // memoized per distinct z-part
        std::unordered_map<std::uint64_t, Elem> memo;
        auto g_eval = [&](const std::vector<std::size_t>& sol) -> Elem {
            std::uint64_t zk = 0;
            for (std::size_t j : rest) zk = zk * ssize + sol[j];
            auto it = memo.find(zk);
            if (it != memo.end()) return it->second;
            Elem total = 0;
            if (dimv > 0) {
                std::vector<std::size_t> w(t, 0);
                while (true) {
                    std::uint64_t hkey = 0;
                    Elem prod = 1;
                    for (std::size_t a = 0; a < t; ++a) {
                        hkey = hkey * dimv + w[a];
                        prod = F.mul(prod, E(w[a], sol[rest[a]]));
                    }
                    if (prod != 0) total = F.add(total, F.mul(h[hkey], prod));
                    std::size_t a = t;
                    bool done = false;
                    while (a > 0) {
                        --a;
                        if (++w[a] < dimv) break;
                        w[a] = 0;
                        if (a == 0) done = true;
                    }
                    if (done) break;
                }
            }
            memo.emplace(zk, total);
            return total;
        };

        Mat full(f, dim, dim);
        for (const auto& sol : sols) {
            Elem gz = g_eval(sol);
            if (gz == 0) continue;
            std::uint64_t xk = key_of(sol, rep.I), yk = key_of(sol, rep.J);
            full(xk, yk) = F.add(full(xk, yk), gz);
        }

        Mat sec(f, dim, dim);
        for (std::size_t idx : t3) {
            const auto& sol = sols[idx];
            std::uint64_t hkey = 0;
            for (std::size_t j : rest) hkey = hkey * dimv + section_pos[sol[j]];
            std::uint64_t xk = key_of(sol, rep.I), yk = key_of(sol, rep.J);
            sec(xk, yk) = F.add(sec(xk, yk), h[hkey]);
        }

        ReplayTrial tr;
        tr.rank_full = full.rank();
        tr.ok_rank = tr.rank_full <= rep.bound;
        tr.rank_section = sec.rank();
        std::vector<std::uint64_t> row_nz(dim, 0), col_nz(dim, 0);
        for (std::uint64_t a = 0; a < dim; ++a)
            for (std::uint64_t b = 0; b < dim; ++b)
                if (sec(a, b) != 0) {
                    ++tr.support;
                    ++row_nz[a];
                    ++col_nz[b];
                }
        tr.max_line = 0;
        for (std::uint64_t a = 0; a < dim; ++a)
            tr.max_line = std::max({tr.max_line, row_nz[a], col_nz[a]});
        tr.ok_blur = tr.support <= static_cast<std::uint64_t>(tr.rank_section) * tr.max_line * tr.max_line;

        support_sum += static_cast<double>(tr.support);
        rep.ok_claim_rank = rep.ok_claim_rank && tr.ok_rank;
        rep.ok_blur = rep.ok_blur && tr.ok_blur;
        rep.trials.push_back(tr);
    }

    rep.mean_support = trials > 0 ? support_sum / trials : 0.0;
    rep.sigma = trials > 0 ? std::sqrt(static_cast<double>(rep.pair_count) * p_nonzero *
                                       (1.0 - p_nonzero) / trials)
                           : 0.0;
    rep.ok_support = std::abs(rep.mean_support - rep.expected_support) <= 3.0 * rep.sigma + 1e-12;
    return rep;
}

}  // namespace tamesys
