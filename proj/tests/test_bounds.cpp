#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "tamesys/bounds.hpp"
#include "oracles.hpp"

using namespace tamesys;

TEST_CASE("monomial count against direct enumeration") {
    CHECK(monomial_count(3, 1, 1) == BigUint(2));
    CHECK(monomial_count(3, 2, 2) == BigUint(6));
    CHECK(monomial_count(3, 6, 4) == BigUint(oracles::brute_monomial_count(3, 6, 4)));
    CHECK(monomial_count(3, 6, 4) == BigUint(168));
    for (auto q : {2u, 3u, 4u, 5u})
        for (std::size_t n = 0; n <= 5; ++n)
            for (std::uint64_t d = 0; d <= (q - 1) * n + 1; ++d)
                CHECK(monomial_count(q, n, d) == BigUint(oracles::brute_monomial_count(q, n, d)));
    // all exponent vectors
    CHECK(monomial_count(4, 5, 3 * 5) == BigUint(1024));
    CHECK(monomial_count_real(3, 3, 2.0 / 3.0) == BigUint(1));
}

TEST_CASE("monomial count complementation identity") {
    for (auto q : {2u, 3u, 4u, 5u})
        for (std::uint64_t n = 1; n <= 8; ++n)
            for (std::uint64_t d = 0; d + 1 <= (q - 1) * n; ++d) {
                BigUint lhs = monomial_count(q, n, d) + monomial_count(q, n, (q - 1) * n - d - 1);
                CHECK(lhs == BigUint::pow(q, n));
            }
}

TEST_CASE("growth constant values") {
    GrowthConstant c = c_constant(3, 1.0 / 3.0);
    CHECK(c.value <= 2.756);
    CHECK(c.value > 2.755);

    GrowthConstant c2 = c_constant(2, 1.0 / 3.0);
    CHECK(std::abs(c2.t_star - 0.5) < 1e-9);
    CHECK(std::abs(c2.value - 1.5 * std::pow(2.0, 1.0 / 3.0)) < 1e-9);

    GrowthConstant c0 = c_constant(5, 0.0);
    CHECK(c0.value == 1.0);
    CHECK(c0.t_star == 0.0);

    CHECK_THROWS_AS(c_constant(3, 1.5), InvalidRange);
}

TEST_CASE("growth constant is nondecreasing and crosses q at one half") {
    for (auto q : {2u, 3u, 5u, 7u}) {
        double prev = 0.0;
        for (int i = 0; i <= 40; ++i) {
            double delta = i / 40.0;
            double v = c_constant(q, delta).value;
            CHECK(v >= prev - 1e-9);
            prev = v;
            if (delta < 0.5)
                CHECK(v < q - 1e-6);
            else
                CHECK(v >= q - 1e-6);
        }
    }
}

TEST_CASE("growth constant dominates the monomial count") {
    for (auto q : {2u, 3u, 5u})
        for (std::uint64_t n : {4u, 8u, 12u})
            for (double delta : {0.1, 0.25, 0.4, 0.49}) {
                BigUint m = monomial_count_real(q, n, delta * (q - 1) * n);
                double cn = n * std::log(c_constant(q, delta).value);
                CHECK(m.log() <= cn + 1e-6);
            }
}

TEST_CASE("slice rank bound") {
    SliceRankBound b = slice_rank_bound(3, 1, 3, 6);
    CHECK(b.bound == BigUint(504));
    CHECK(b.nontrivial);
    CHECK(b.bound < BigUint::pow(3, 6));

    b = slice_rank_bound(3, 1, 3, 1);
    CHECK(b.bound == BigUint(3));

    b = slice_rank_bound(5, 2, 4, 3);  // k = 2m: threshold case
    CHECK_FALSE(b.nontrivial);
    CHECK(std::abs(b.c - 5.0) < 1e-9);
}

TEST_CASE("gaussian binomial exact values") {
    CHECK(gaussian_binomial(7, 5, 0) == BigUint(1));
    CHECK(gaussian_binomial(3, 2, 1) == BigUint(4));
    CHECK(gaussian_binomial(2, 4, 2) == BigUint(35));
    CHECK(gaussian_binomial(2, 3, 5) == BigUint(0));
    // symmetry [n, d] = [n, n-d]
    for (std::uint64_t n = 0; n <= 8; ++n)
        for (std::uint64_t d = 0; d <= n; ++d)
            CHECK(gaussian_binomial(3, n, d) == gaussian_binomial(3, n, n - d));
}

TEST_CASE("gaussian binomial two-sided bound") {
    for (auto q : {2u, 3u, 4u, 5u})
        for (std::uint64_t n = 0; n <= 12; ++n)
            for (std::uint64_t d = 0; d <= n; ++d) {
                BigUint v = gaussian_binomial(q, n, d);
                BigUint lo = BigUint::pow(q, d * (n - d));
                CHECK(lo <= v);
                CHECK(v <= lo * BigUint(4));
            }
}

TEST_CASE("subspace counting by enumeration") {
    // subspaces of F_q^n containing a fixed k-dimensional subspace. Each
    // d-subspace has exactly one reduced-echelon basis, so enumerating every
    // echelon matrix (pivot pattern plus free entries) visits each subspace
    // once; containment is checked point by point against the span.
    for (auto q : {2u, 3u}) {
        auto f = field_make(q);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t d = 0; d <= n; ++d)
                for (std::size_t kk = 0; kk <= d; ++kk) {
                    std::vector<Code> fixed;
                    for (std::size_t i = 0; i < kk; ++i) {
                        Point p(n, 0);
                        p[i] = 1;
                        fixed.push_back(encode_point(*f, p));
                    }
                    std::uint64_t count = 0;
                    // pivot columns ascending
                    std::vector<std::size_t> piv(d);
                    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from,
                                                                             std::size_t depth) {
                        if (depth == d) {
                            // free entries: (i, c) with c > piv[i], c not a pivot
                            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
                            std::vector<bool> is_piv(n, false);
                            for (std::size_t p2 : piv) is_piv[p2] = true;
                            for (std::size_t i = 0; i < d; ++i)
                                for (std::size_t c = piv[i] + 1; c < n; ++c)
                                    if (!is_piv[c]) free_pos.emplace_back(i, c);
                            std::uint64_t combos = 1;
                            for (std::size_t i = 0; i < free_pos.size(); ++i) combos *= q;
                            for (std::uint64_t asg = 0; asg < combos; ++asg) {
                                std::vector<Point> rows(d, Point(n, 0));
                                for (std::size_t i = 0; i < d; ++i) rows[i][piv[i]] = 1;
                                std::uint64_t a2 = asg;
                                for (auto [i, c] : free_pos) {
                                    rows[i][c] = static_cast<Elem>(a2 % q);
                                    a2 /= q;
                                }
                                // span membership for each fixed generator
                                bool contains = true;
                                for (Code fx : fixed) {
                                    Point target = decode_point(*f, n, fx);
                                    // reduce against the echelon rows
                                    for (std::size_t i = 0; i < d; ++i) {
                                        Elem factor = target[piv[i]];
                                        if (factor == 0) continue;
                                        for (std::size_t c = 0; c < n; ++c)
                                            target[c] = f->sub(target[c], f->mul(factor, rows[i][c]));
                                    }
                                    for (Elem e : target) contains = contains && e == 0;
                                    if (!contains) break;
                                }
                                if (contains) ++count;
                            }
                            return;
                        }
                        for (std::size_t c = from; c + (d - depth) <= n; ++c) {
                            piv[depth] = c;
                            pick(c + 1, depth + 1);
                        }
                    };
                    pick(0, 0);
                    CHECK(BigUint(count) == gaussian_binomial(q, n - kk, d - kk));
                }
        }
    }
}

TEST_CASE("supersaturation constants") {
    SupersatParams p = supersat_params(3, 2, 0.1, 0.01, 10);
    CHECK(p.n1 == 100);
    CHECK(std::abs(p.epsilon - 0.12) < 1e-12);
    CHECK(std::abs(p.log_q_C - (std::log(7.0 / 36.0) / std::log(3.0) - 23.1)) < 1e-9);
    CHECK(std::abs(p.C - 7.0 / 36.0 * std::pow(3.0, -23.1)) < 1e-15);

    p = supersat_params(2, 1, 1.0, 0.5, 1);
    CHECK(p.n1 == 6);
    CHECK(std::abs(p.epsilon - 1.0) < 1e-12);

    CHECK_THROWS_AS(supersat_params(3, 2, 0.1, 0.2, 10), InvalidRange);
    CHECK_THROWS_AS(supersat_params(3, 2, 0.1, 0.1, 10), InvalidRange);
}

TEST_CASE("subspace density constants") {
    auto rows3 = subspace_constants(3, 1);
    CHECK(rows3.size() == 1);
    CHECK(rows3[0].n == 1);
    CHECK(rows3[0].C == 3.0);
    CHECK(std::abs(rows3[0].delta - (1.0 - std::log(2.756) / std::log(3.0))) < 1e-12);

    auto rows2 = subspace_constants(2, 2);
    CHECK(rows2[0].n == 1);
    CHECK(rows2[0].C == 2.0);
    CHECK(rows2[0].delta == 1.0);
    CHECK(rows2[1].C == 8.0);
    CHECK(std::abs(rows2[1].delta - 0.25) < 1e-12);
    CHECK(rows2[1].n == 4);

    for (auto q : {2u, 3u})
        for (const auto& row : subspace_constants(q, 8)) {
            CHECK(row.delta > 0.0);
            CHECK(row.delta <= 1.0);
        }

    CHECK_THROWS_AS(subspace_constants(5, 2), UnsupportedField);
}
