#pragma once

#include <cstdint>
#include <vector>

#include "tamesys/field.hpp"

namespace tamesys {

/// A point of F_q^n is a coordinate vector; its code is the base-q integer
/// sum coords[i] * q^i, a bijection onto [0, q^n).
using Point = std::vector<Elem>;
using Code = std::uint64_t;

inline Code encode_point(const Field& f, const Point& v) {
    Code code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * f.q() + v[i];
    return code;
}

inline Point decode_point(const Field& f, std::size_t n, Code code) {
    Point v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<Elem>(code % f.q());
        code /= f.q();
    }
    return v;
}

inline Code space_size(const Field& f, std::size_t n) {
    Code s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= f.q();
    return s;
}

/// An ordered k-tuple of points of F_q^n.
struct Tuple {
    FieldPtr field;
    std::size_t n = 0;
    std::vector<Point> points;

    std::size_t k() const { return points.size(); }
};

}  // namespace tamesys
