#include "tamesys/field.hpp"

#include <algorithm>

namespace tamesys {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomial over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        std::uint32_t lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint64_t t = static_cast<std::uint64_t>(g[i]) * lead % p;
                f[i + shift] = static_cast<std::uint32_t>((f[i + shift] + p - t) % p);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() <= dg) break;
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
    return poly_mod(f, g, p).empty();
}

// Irreducible over F_p iff no monic divisor of degree 1..deg/2. Exhaustive
// trial division is cheap for every supported order.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (f[0] == 0) return deg == 1;  // divisible by x
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d: counter encodes c0..c_{d-1} base p
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        Poly g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t t = c;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree e over F_p
// (smallest when the low coefficients are read as a base-p counter).
Poly default_modulus(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    Poly f(e + 1, 0);
    f[e] = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t t = c;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Elem Field::add(Elem a, Elem b) const {
    if (e_ == 1) {
        std::uint32_t s = static_cast<std::uint32_t>(a) + b;
        if (s >= q_) s -= q_;
        return static_cast<Elem>(s);
    }
    // digitwise addition base p
    std::uint32_t result = 0, mult = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        result += s * mult;
        mult *= p_;
        x /= p_;
        y /= p_;
    }
    return static_cast<Elem>(result);
}

Elem Field::neg(Elem a) const {
    if (e_ == 1) return static_cast<Elem>(a == 0 ? 0 : q_ - a);
    std::uint32_t result = 0, mult = 1, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_;
        result += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        x /= p_;
    }
    return static_cast<Elem>(result);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const {
    if (e_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % q_);
    // schoolbook product of the digit polynomials, reduced mod the modulus
    std::vector<std::uint32_t> da(e_), db(e_), prod(2 * e_ - 1, 0);
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < e_; ++i) { da[i] = x % p_; x /= p_; }
    for (std::uint32_t i = 0; i < e_; ++i) { db[i] = y % p_; y /= p_; }
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    // reduce: modulus is monic of degree e
    for (std::size_t d = prod.size(); d-- > e_;) {
        std::uint32_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(modulus_[i]) * lead % p_;
            prod[d - e_ + i] = static_cast<std::uint32_t>((prod[d - e_ + i] + p_ - t) % p_);
        }
    }
    std::uint32_t result = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        result += prod[i] * mult;
        mult *= p_;
    }
    return static_cast<Elem>(result);
}

Elem Field::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

Elem Field::pow(Elem a, std::uint64_t n) const {
    Elem result = 1, base = a;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    if (e_ == 1) {
        // extended Euclid on (a, q)
        std::int64_t t0 = 0, t1 = 1, r0 = q_, r1 = a;
        while (r1 != 0) {
            std::int64_t qq = r0 / r1;
            std::int64_t t2 = t0 - qq * t1, r2 = r0 - qq * r1;
            t0 = t1; t1 = t2; r0 = r1; r1 = r2;
        }
        if (t0 < 0) t0 += q_;
        return static_cast<Elem>(t0);
    }
    return pow(a, q_ - 2);
}

Elem Field::from_signed(long long v) const {
    if (e_ == 1) {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return static_cast<Elem>(r);
    }
    bool negate = v < 0;
    unsigned long long mag = negate ? static_cast<unsigned long long>(-v)
                                    : static_cast<unsigned long long>(v);
    if (mag >= q_) throw Error("extension-field literal out of range");
    Elem x = static_cast<Elem>(mag);
    return negate ? neg(x) : x;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e,
                     const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw UnsupportedOrder("field order exceeds 2^16");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = static_cast<std::uint32_t>(q);

    if (e == 1) {
        if (!modulus.empty()) throw Error("modulus given for a prime field");
    } else {
        Poly mod;
        if (modulus.empty()) {
            mod = default_modulus(p, e);
        } else {
            if (modulus.size() != e + 1) throw ReduciblePolynomial("modulus degree must equal e");
            mod.assign(modulus.begin(), modulus.end());
            for (auto& c : mod) c %= p;
            if (mod[e] != 1) throw ReduciblePolynomial("modulus must be monic");
            if (!is_irreducible(mod, p)) throw ReduciblePolynomial("modulus is reducible");
        }
        f->modulus_.assign(mod.begin(), mod.end());
    }

    if (q <= 16) {
        f->mul_table_.resize(q * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                f->mul_table_[a * q + b] = f->mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        f->inv_table_.resize(q, 0);
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b)
                if (f->mul_table_[a * q + b] == 1) { f->inv_table_[a] = static_cast<Elem>(b); break; }
    }
    return f;
}

FieldPtr field_make(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus) {
    return Field::make(p, e, modulus);
}

}  // namespace tamesys
