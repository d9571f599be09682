#include <doctest.h>

#include "tamesys/field.hpp"
#include "tamesys/point.hpp"
#include "tamesys/rng.hpp"

using namespace tamesys;

TEST_CASE("prime field arithmetic") {
    auto f3 = field_make(3);
    CHECK(f3->q() == 3);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f3->inv(2) == 2);
    CHECK(f3->neg(1) == 2);
    CHECK(f3->from_signed(-2) == 1);
    CHECK(f3->from_signed(-7) == 2);
}

TEST_CASE("F4 with explicit modulus x^2+x+1") {
    auto f4 = field_make(2, 2, {1, 1, 1});
    // a = class of x has code 2; a*a = a+1
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->mul(2, 3) == 1);  // a * (a+1) = a^2 + a = 1
    CHECK(f4->add(2, 3) == 1);
    for (Elem a = 1; a < 4; ++a) CHECK(f4->mul(a, f4->inv(a)) == 1);
}

TEST_CASE("default modulus is found for prime powers") {
    for (auto [p, e] : {std::pair<int, int>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 8}}) {
        auto f = field_make(p, e);
        CHECK(f->modulus().size() == static_cast<std::size_t>(e + 1));
        CHECK(f->modulus().back() == 1);
        // spot-check the inverse law
        for (Elem a = 1; a < std::min<std::uint32_t>(f->q(), 40); ++a)
            CHECK(f->mul(a, f->inv(a)) == 1);
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(field_make(4), NonPrimeCharacteristic);
    CHECK_THROWS_AS(field_make(1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(field_make(2, 2, {1, 0, 1}), ReduciblePolynomial);  // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(field_make(2, 17), UnsupportedOrder);
    CHECK_THROWS_AS(field_make(257, 3), UnsupportedOrder);
}

TEST_CASE("field axioms exhaustively for q <= 9") {
    for (auto [p, e] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        auto f = field_make(p, e);
        const std::uint32_t q = f->q();
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("field axioms sampled for larger q") {
    Rng rng(7);
    for (auto [p, e] : {std::pair<int, int>{5, 2}, {3, 3}, {2, 6}, {251, 1}, {2, 16}}) {
        auto f = field_make(p, e);
        const std::uint32_t q = f->q();
        for (int it = 0; it < 500; ++it) {
            Elem a = static_cast<Elem>(rng.below(q));
            Elem b = static_cast<Elem>(rng.below(q));
            Elem c = static_cast<Elem>(rng.below(q));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("point encoding is a bijection") {
    for (auto [p, e, n] :
         {std::tuple<int, int, int>{3, 1, 4}, {2, 2, 3}, {5, 1, 3}, {2, 1, 10}, {2, 1, 19}, {3, 1, 12}}) {
        auto f = field_make(p, e);
        Code space = space_size(*f, n);
        REQUIRE(space <= 1000000);
        for (Code c = 0; c < space; ++c) {
            Point v = decode_point(*f, n, c);
            CHECK(encode_point(*f, v) == c);
        }
    }
}
