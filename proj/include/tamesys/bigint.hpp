#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tamesys {

/// Unsigned arbitrary-precision integer, base 2^32 limbs, little-endian.
/// Just enough arithmetic for exact counting formulas; subtraction requires
/// a >= b.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
        if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  ///< requires *this >= o
    BigUint operator+(const BigUint& o) const { BigUint r = *this; r += o; return r; }
    BigUint operator-(const BigUint& o) const { BigUint r = *this; r -= o; return r; }
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o) { *this = *this * o; return *this; }

    static BigUint pow(std::uint64_t base, std::uint64_t exp);

    int compare(const BigUint& o) const;
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  ///< throws on overflow

    /// Natural logarithm (approximate; for comparisons with real-valued bounds).
    double log() const;

    std::string to_string() const;  ///< decimal

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace tamesys
