#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tamesys/errors.hpp"

namespace tamesys {

/// Canonical encoding of a field element: an integer in [0, q). For prime
/// fields this is the residue itself; for F_{p^e} the base-p digits are the
/// coefficients of the residue polynomial, low degree first.
using Elem = std::uint16_t;

/**
 * A finite field F_q with q = p^e <= 2^16.
 *
 * Prime fields use plain modular arithmetic. Extension fields are represented
 * as F_p[x] modulo a monic irreducible polynomial of degree e; when no modulus
 * is supplied, the lexicographically smallest irreducible polynomial is used,
 * so (p, e) alone determines the field.
 *
 * For q <= 16 full multiplication/inverse tables are precomputed; enumeration
 * over F_q^n dominates every experiment, so small fields pay for lookups once.
 * Instances are immutable and safe to share across threads.
 */
class Field {
  public:
    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }

    /// Modulus coefficients c0,...,ce (monic, ce = 1). Empty for prime fields.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  ///< throws Error on zero
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t n) const;

    /// Reduce an arbitrary signed literal to a canonical element. Negative
    /// values are negated in the field; magnitudes are reduced mod p for
    /// prime fields and must already lie in [0, q) for extension fields.
    Elem from_signed(long long v) const;

    bool same(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    /// Construct F_{p^e}. modulus (c0,...,ce low-to-high) is optional for
    /// e > 1 and must be empty for e = 1.
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e = 1,
                                             const std::vector<std::uint32_t>& modulus = {});

  private:
    Field() = default;

    Elem mul_slow(Elem a, Elem b) const;

    std::uint32_t q_ = 0, p_ = 0, e_ = 1;
    std::vector<Elem> modulus_;          // c0..ce, monic; empty when e == 1
    std::vector<Elem> mul_table_;        // q*q entries when q <= 16
    std::vector<Elem> inv_table_;        // q entries when q <= 16
};

using FieldPtr = std::shared_ptr<const Field>;

/// Factory matching the construction contract: validates primality of p and
/// irreducibility of the modulus, fills in the default modulus for e > 1.
FieldPtr field_make(std::uint32_t p, std::uint32_t e = 1,
                    const std::vector<std::uint32_t>& modulus = {});

}  // namespace tamesys
