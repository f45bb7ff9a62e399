#include <doctest.h>

#include "helpers.hpp"

using namespace cdlab;

TEST_SUITE("algebra") {

TEST_CASE("signature validation and generator squares") {
    Signature s(3, 2);
    CHECK(s.q() == 3);
    CHECK(s.p() == 2);
    CHECK(s.n() == 5);
    CHECK(s.eps(1) == 1);
    CHECK(s.eps(3) == 1);
    CHECK(s.eps(4) == -1);
    CHECK(s.eps(5) == -1);
    CHECK(Signature::level(4) == Signature(4, 0));
    CHECK_THROWS_AS(Signature(0, 0), std::domain_error);
    CHECK_THROWS_AS(Signature(9, 8), std::domain_error);
}

TEST_CASE("pinned product signs") {
    Algebra a4(Signature::level(4));
    CHECK(a4.sign(1, 2) == 1);        // o1 o2 = o12
    CHECK(a4.sign(2, 3) == 1);        // o2 o12 = o1
    CHECK(a4.sign(3, 1) == 1);        // o12 o1 = o2
    CHECK(a4.sign(1, 0b1100) == -1);  // o1 o34 = -o134
    CHECK(a4.blade_mul({1}, {2}) == Blade{3, 1});
    CHECK(a4.blade_mul({1}, {1}) == Blade{0, -1});
    CHECK(a4.blade_mul({3, -1}, {1}) == Blade{2, -1});

    Algebra a03(Signature(0, 3));
    CHECK(a03.sign(1, 1) == 1);  // u1 u1 = 1
    CHECK(a03.blade_square_sign(3) == -1);
    CHECK(Algebra(Signature::level(3)).blade_square_sign(1) == -1);
}

TEST_CASE("product mask is XOR; square sign factors over generators") {
    for (const Signature& sig : testing::all_signatures(4)) {
        Algebra alg(sig);
        Mask limit = sig.mask_limit();
        for (Mask x = 1; x < limit; ++x) {
            int sq = -1;
            for (int k = 1; k <= sig.n(); ++k)
                if (x & (Mask(1) << (k - 1))) sq *= sig.eps(k);
            CHECK(alg.blade_square_sign(x) == sq);
            CHECK(alg.blade_square_sign(x) == alg.sign(x, x));
            for (Mask y = 1; y < limit; ++y)
                CHECK(alg.blade_mul({x}, {y}).mask == (x ^ y));
        }
    }
}

TEST_CASE("distinct pure blades anticommute") {
    for (int n = 1; n <= 5; ++n) {
        for (const Signature& sig : testing::all_signatures(n)) {
            Algebra alg(sig);
            for (Mask x = 1; x < sig.mask_limit(); ++x)
                for (Mask y = x + 1; y < sig.mask_limit(); ++y)
                    CHECK(alg.sign(x, y) == -alg.sign(y, x));
        }
    }
}

TEST_CASE("blades are alternative: xxy, yxx associate") {
    for (int n = 1; n <= 5; ++n) {
        for (const Signature& sig : testing::all_signatures(n)) {
            Algebra alg(sig);
            for (Mask x = 1; x < sig.mask_limit(); ++x) {
                Element ex = Element::blade(x);
                Element xx = element_mul(alg, ex, ex);
                for (Mask y = 1; y < sig.mask_limit(); ++y) {
                    Element ey = Element::blade(y);
                    CHECK(element_mul(alg, xx, ey) ==
                          element_mul(alg, ex, element_mul(alg, ex, ey)));
                    CHECK(element_mul(alg, element_mul(alg, ey, ex), ex) ==
                          element_mul(alg, ey, xx));
                }
            }
        }
    }
}

TEST_CASE("pure blades are flexible: (xy)x == x(yx)") {
    for (const Signature& sig : testing::all_signatures(5)) {
        Algebra alg(sig);
        for (Mask x = 1; x < sig.mask_limit(); ++x) {
            Element ex = Element::blade(x);
            for (Mask y = 1; y < sig.mask_limit(); ++y) {
                Element ey = Element::blade(y);
                CHECK(element_mul(alg, element_mul(alg, ex, ey), ex) ==
                      element_mul(alg, ex, element_mul(alg, ey, ex)));
            }
        }
    }
}

TEST_CASE("pair-recursion oracle equals blade signs, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Signature& sig : testing::all_signatures(n)) {
            Algebra alg(sig);
            for (Mask x = 0; x < sig.mask_limit(); ++x) {
                for (Mask y = 0; y < sig.mask_limit(); ++y) {
                    Blade b = alg.blade_mul({x}, {y});
                    Element got =
                        element_mul(alg, Element::blade(x), Element::blade(y));
                    CHECK(got == Element::blade(b));
                }
            }
        }
    }
}

TEST_CASE("oracle agreement on random blades at n = 12") {
    Algebra alg(Signature::level(12));  // above the dense-table cutoff
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<Mask> dm(1, alg.signature().mask_limit() - 1);
    for (int i = 0; i < 200; ++i) {
        Mask x = dm(rng), y = dm(rng);
        CHECK(element_mul(alg, Element::blade(x), Element::blade(y)) ==
              Element::blade(alg.blade_mul({x}, {y})));
    }
}

TEST_CASE("sign recursion is stable under level extension") {
    Algebra a10(Signature::level(10));
    Algebra a11(Signature::level(11));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Mask> dm(0, a10.signature().mask_limit() - 1);
    for (int i = 0; i < 500; ++i) {
        Mask x = dm(rng), y = dm(rng);
        CHECK(a11.sign_unchecked(x, y) == a10.sign_unchecked(x, y));
    }
}

TEST_CASE("random elements are power associative") {
    std::mt19937_64 rng(42);
    for (int n : {4, 5}) {
        Algebra alg(Signature::level(n));
        for (int i = 0; i < 20; ++i) {
            Element a = testing::random_element(rng, alg, 5);
            Element a2 = element_mul(alg, a, a);
            CHECK(element_mul(alg, a2, a) == element_mul(alg, a, a2));
            CHECK(element_mul(alg, element_mul(alg, a2, a), a) ==
                  element_mul(alg, a2, a2));
        }
    }
}

TEST_CASE("pure trace: -N all-imaginary, +1 split") {
    for (int n = 3; n <= 8; ++n) {
        for (const Signature& sig : testing::all_signatures(n)) {
            Algebra alg(sig);
            long long want = sig.p() == 0 ? -static_cast<long long>(alg.N()) : 1;
            CHECK(alg.pure_trace() == want);
        }
    }
}

TEST_CASE("basis labels") {
    Algebra a4(Signature::level(4));
    CHECK(a4.basis_label(0) == "1");
    CHECK(a4.basis_label(1) == "o1");
    CHECK(a4.basis_label(15) == "o1234");

    Algebra a31(Signature(3, 1));
    CHECK(a31.basis_label(8) == "u1");
    CHECK(a31.basis_label(9) == "o1u1");

    Algebra a03(Signature(0, 3));
    CHECK(a03.basis_label(3) == "u12");

    Algebra a10(Signature::level(10));
    CHECK(a10.basis_label((Mask(1) << 9) | 1) == "o[1,10]");
    CHECK(a10.basis_label(3) == "o12");
}

TEST_CASE("conjugation negates the pure part and reverses products") {
    Algebra alg(Signature::level(4));
    Element e = Element::scalar(Rational(2)) + Element::blade(3) -
                Element::blade(5, Rational(1, 2));
    Element c = conjugate(alg, e);
    CHECK(c.coeff(0) == Rational(2));
    CHECK(c.coeff(3) == Rational(-1));
    CHECK(c.coeff(5) == Rational(1, 2));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        Element a = testing::random_element(rng, alg, 4);
        Element b = testing::random_element(rng, alg, 4);
        CHECK(conjugate(alg, element_mul(alg, a, b)) ==
              element_mul(alg, conjugate(alg, b), conjugate(alg, a)));
    }
}

TEST_CASE("mask range checks") {
    Algebra alg(Signature::level(3));
    CHECK_THROWS_AS(alg.sign(8, 1), std::domain_error);
    CHECK_THROWS_AS(alg.blade_square_sign(0), std::domain_error);
    CHECK_THROWS_AS(element_mul(alg, Element::blade(8), Element::blade(1)),
                    std::domain_error);
}

}  // TEST_SUITE
