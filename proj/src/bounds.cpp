#include "tamesys/bounds.hpp"

#include <cmath>

namespace tamesys {

BigUint monomial_count(std::uint32_t q, std::uint64_t n, std::uint64_t d) {
    // coefficients of (1 + t + ... + t^{q-1})^n up to degree min(d, n(q-1))
    std::uint64_t maxdeg = n * (q - 1);
    std::uint64_t top = std::min(d, maxdeg);
    std::vector<BigUint> coeff{BigUint(1)};
    for (std::uint64_t step = 0; step < n; ++step) {
        std::uint64_t newdeg = std::min((step + 1) * (q - 1), top);
        std::vector<BigUint> next(newdeg + 1);
        for (std::size_t deg = 0; deg <= newdeg; ++deg) {
            BigUint s;
            for (std::uint64_t j = 0; j < q && j <= deg; ++j) {
                std::uint64_t prev = deg - j;
                if (prev < coeff.size()) s += coeff[prev];
            }
            next[deg] = std::move(s);
        }
        coeff = std::move(next);
    }
    BigUint total;
    for (const auto& c : coeff) total += c;
    return total;
}

BigUint monomial_count_real(std::uint32_t q, std::uint64_t n, double d) {
    if (d < 0) return BigUint(0);
    double fl = std::floor(d);
    return monomial_count(q, n, static_cast<std::uint64_t>(fl));
}

namespace {

// d/d(log t) of log[(1 + ... + t^{q-1}) t^{-delta(q-1)}], i.e.
// t/(1-t) - q t^q/(1-t^q) - delta(q-1); increasing in t by convexity.
double log_derivative(std::uint32_t q, double delta, double t) {
    double lt = std::log(t);
    double one_minus_tq = -std::expm1(q * lt);  // 1 - t^q, stable near t = 1
    double tq = std::exp(q * lt);
    return t / (1.0 - t) - q * tq / one_minus_tq - delta * (q - 1);
}

double objective(std::uint32_t q, double delta, double t) {
    double lt = std::log(t);
    double geom = -std::expm1(q * lt) / -std::expm1(lt);  // (1-t^q)/(1-t)
    return geom * std::exp(-delta * (q - 1) * lt);
}

// ceil with a snap window so that expressions that are integers in exact
// arithmetic (e.g. 0.1/0.01 * 10) do not round up one too far
std::uint64_t ceil_guard(double x) {
    return static_cast<std::uint64_t>(std::ceil(x - 1e-9));
}

}  // namespace

GrowthConstant c_constant(std::uint32_t q, double delta) {
    if (delta < 0.0 || delta > 1.0) throw InvalidRange("delta must lie in [0, 1]");
    if (delta == 0.0) return {1.0, 0.0};  // infimum as t -> 0+
    if (delta >= 0.5) return {static_cast<double>(q), 1.0};

    double lo = 1e-12, hi = 1.0 - 1e-13;
    // log_derivative(lo) < 0 for any delta > 0 since the first terms vanish
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (log_derivative(q, delta, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double t = 0.5 * (lo + hi);
    return {objective(q, delta, t), t};
}

SliceRankBound slice_rank_bound(std::uint32_t q, std::uint64_t m, std::uint64_t k, std::uint64_t n) {
    if (m < 1 || k <= m) throw InvalidRange("need 1 <= m < k");
    if (n < 1) throw InvalidRange("need n >= 1");
    std::uint64_t d = (q - 1) * n * m / k;  // exact floor of (q-1)nm/k
    SliceRankBound out;
    out.bound = BigUint(k) * monomial_count(q, n, d);
    out.nontrivial = k >= 2 * m + 1;
    out.c = c_constant(q, static_cast<double>(m) / static_cast<double>(k)).value;
    return out;
}

BigUint gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t d) {
    if (d > n) return BigUint(0);
    // Pascal-type recurrence [n, j] = [n-1, j-1] + q^j [n-1, j], exact
    std::vector<BigUint> row(d + 1);
    row[0] = BigUint(1);
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::uint64_t jmax = std::min<std::uint64_t>(i, d);
        for (std::uint64_t j = jmax; j >= 1; --j) {
            row[j] = row[j] * BigUint::pow(q, j) + row[j - 1];
        }
    }
    BigUint lo = BigUint::pow(q, d * (n - d));
    if (row[d] < lo || row[d] > lo * BigUint(4))
        throw Error("gaussian binomial left its two-sided bound");
    return row[d];
}

SupersatParams supersat_params(std::uint32_t q, std::uint64_t r, double delta,
                               double delta_prime, std::uint64_t n0) {
    if (!(delta_prime > 0.0 && delta_prime < delta && delta <= 1.0))
        throw InvalidRange("need 0 < delta' < delta <= 1");
    if (r < 1 || n0 < 1) throw InvalidRange("need r >= 1 and n0 >= 1");
    SupersatParams out;
    out.q = q;
    out.r = r;
    out.delta = delta;
    out.delta_prime = delta_prime;
    out.n0 = n0;
    double a = delta / delta_prime * static_cast<double>(n0);
    double b = (2.0 + delta) / (delta - delta_prime);
    out.n1 = ceil_guard(std::max(a, b));
    out.epsilon = delta_prime * (static_cast<double>(r) - 1.0 + 2.0 * delta) / delta;
    double qq = static_cast<double>(q);
    double exponent = (static_cast<double>(r) - 1.0 + delta) * (2.0 + delta) / delta;
    out.log_q_C = std::log((qq * qq - 2.0) / (4.0 * qq * qq)) / std::log(qq) - exponent;
    out.C = (qq * qq - 2.0) / (4.0 * qq * qq) * std::pow(qq, -exponent);
    return out;
}

std::vector<SubspaceConstantsRow> subspace_constants(std::uint32_t q, std::uint64_t d) {
    if (q != 2 && q != 3) throw UnsupportedField("supported only for q in {2, 3}");
    if (d < 1) throw InvalidRange("need d >= 1");
    std::vector<SubspaceConstantsRow> rows;
    SubspaceConstantsRow base;
    base.d = 1;
    base.n = 1;
    if (q == 3) {
        base.C = 3.0;
        base.delta = 1.0 - std::log(2.756) / std::log(3.0);
    } else {
        base.C = 2.0;
        base.delta = 1.0;
    }
    rows.push_back(base);
    for (std::uint64_t t = 2; t <= d; ++t) {
        const auto& prev = rows.back();
        SubspaceConstantsRow row;
        row.d = t;
        row.C = q * (base.C + prev.C);
        double denom = 2.0 + base.delta + prev.delta;
        row.delta = base.delta * prev.delta / denom;
        double n_a = denom / prev.delta * static_cast<double>(base.n);
        double n_b = denom / (2.0 + base.delta) * static_cast<double>(prev.n);
        row.n = ceil_guard(std::max(n_a, n_b));
        if (!(row.delta > 0.0 && row.delta <= 1.0))
            throw Error("subspace constant recurrence left (0, 1]");
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tamesys
