#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdlab/associativity.hpp"
#include "cdlab/fixtures.hpp"
#include "helpers.hpp"

using namespace cdlab;

namespace {

std::set<std::array<Mask, 3>> mask_triples(const nlohmann::ordered_json& arr) {
    std::set<std::array<Mask, 3>> out;
    for (const auto& row : arr) {
        std::array<Mask, 3> t{row[0].get<Mask>(), row[1].get<Mask>(),
                              row[2].get<Mask>()};
        std::sort(t.begin(), t.end());
        out.insert(t);
    }
    return out;
}

}  // namespace

TEST_SUITE("associativity") {

TEST_CASE("marker triads of each type") {
    Algebra alg(Signature::level(4));
    CHECK(triad_type(alg, make_triad(alg, 1, 2, 3)) == NonAssocType::ASSOC);
    CHECK(triad_type(alg, make_triad(alg, 1, 2, 12)) == NonAssocType::A);
    CHECK(triad_type(alg, make_triad(alg, 1, 10, 12)) == NonAssocType::C);
    CHECK(triad_type(alg, make_triad(alg, 1, 2, 4)) == NonAssocType::X);
    CHECK(type_letter(NonAssocType::B) == 'B');
    CHECK(type_letter(NonAssocType::ASSOC) == 'H');
}

TEST_CASE("make_triad validates its arguments") {
    Algebra alg(Signature::level(3));
    CHECK_THROWS_AS(make_triad(alg, 2, 1, 3), std::domain_error);   // unordered
    CHECK_THROWS_AS(make_triad(alg, 1, 1, 3), std::domain_error);   // repeated
    CHECK_THROWS_AS(make_triad(alg, 0, 1, 2), std::domain_error);   // unit
    CHECK_THROWS_AS(make_triad(alg, 1, 2, 8), std::domain_error);   // range
}

TEST_CASE("only five patterns occur, exhaustively to n = 6") {
    for (int n = 3; n <= 6; ++n) {
        for (const Signature& sig : testing::all_signatures(n)) {
            Algebra alg(sig);
            long long seen = 0;
            for (Mask b = 1; b <= alg.N(); ++b)
                for (Mask c = b + 1; c <= alg.N(); ++c)
                    for (Mask d = c + 1; d <= alg.N(); ++d) {
                        CHECK_NOTHROW(positional_type(alg, b, c, d));
                        ++seen;
                    }
            Mask N = alg.N();
            CHECK(seen == static_cast<long long>(N) * (N - 1) * (N - 2) / 6);
        }
    }
}

TEST_CASE("associator antisymmetry in the outer arguments") {
    Algebra alg(Signature(4, 1));
    for (Mask a = 1; a <= alg.N(); a += 3)
        for (Mask b = 1; b <= alg.N(); b += 5)
            for (Mask c = 1; c <= alg.N(); c += 7)
                CHECK(associator(alg, {a}, {b}, {c}) ==
                      -associator(alg, {c}, {b}, {a}));
}

TEST_CASE("triple associator vanishes exactly on associative triads") {
    for (const Signature& sig : testing::all_signatures(5)) {
        Algebra alg(sig);
        for (Mask b = 1; b <= alg.N(); ++b)
            for (Mask c = b + 1; c <= alg.N(); ++c)
                for (Mask d = c + 1; d <= alg.N(); ++d) {
                    Triad t = make_triad(alg, b, c, d);
                    Element ta = triple_associator(alg, t);
                    if (triad_type(alg, t) == NonAssocType::ASSOC) {
                        CHECK(ta.is_zero());
                    } else {
                        // twice a single signed blade
                        REQUIRE(ta.coeffs().size() == 1);
                        const auto& [mask, v] = *ta.coeffs().begin();
                        CHECK(mask == (b ^ c ^ d));
                        CHECK((v == Rational(2) || v == Rational(-2)));
                    }
                }
    }
}

TEST_CASE("octonion associative triads are the seven rings") {
    Algebra alg(Signature::level(3));
    auto fx = load_fixture("octonion_structure");
    auto rings = mask_triples(fx["associativeRings"]);
    std::set<std::array<Mask, 3>> got;
    int nonassoc = 0;
    for (Mask b = 1; b <= alg.N(); ++b)
        for (Mask c = b + 1; c <= alg.N(); ++c)
            for (Mask d = c + 1; d <= alg.N(); ++d) {
                Triad t = make_triad(alg, b, c, d);
                if (triad_type(alg, t) == NonAssocType::ASSOC)
                    got.insert({b, c, d});
                else {
                    CHECK(triad_type(alg, t) == NonAssocType::X);
                    ++nonassoc;
                }
            }
    CHECK(got == rings);
    CHECK(got.size() == 7);
    CHECK(nonassoc == 28);
}

TEST_CASE("moufang flags follow the type, exhaustively to n = 5") {
    for (int n = 3; n <= 5; ++n) {
        for (const Signature& sig : testing::all_signatures(n)) {
            Algebra alg(sig);
            for (Mask b = 1; b <= alg.N(); ++b)
                for (Mask c = b + 1; c <= alg.N(); ++c)
                    for (Mask d = c + 1; d <= alg.N(); ++d) {
                        Triad t = make_triad(alg, b, c, d);
                        NonAssocType ty = triad_type(alg, t);
                        MoufangFlags mf = moufang_check(alg, t);
                        bool mv = malcev_check(alg, t);
                        if (ty == NonAssocType::ASSOC) {
                            CHECK(mf.m1);
                            CHECK(mf.m2);
                            CHECK(mf.m3);
                            CHECK_FALSE(mv);
                            continue;
                        }
                        CHECK(mf.m1 == (ty == NonAssocType::B || ty == NonAssocType::X));
                        CHECK(mf.m2 == (ty == NonAssocType::C || ty == NonAssocType::X));
                        if (mv)
                            CHECK(mf.m3 ==
                                  (ty == NonAssocType::B || ty == NonAssocType::X));
                        else
                            CHECK(mf.m3 ==
                                  (ty == NonAssocType::A || ty == NonAssocType::C));
                    }
        }
    }
}

TEST_CASE("moufang flags agree with element-level products at n = 4") {
    Algebra alg(Signature::level(4));
    auto mul = [&](const Element& x, const Element& y) {
        return element_mul(alg, x, y);
    };
    for (Mask b = 1; b <= alg.N(); ++b)
        for (Mask c = b + 1; c <= alg.N(); ++c)
            for (Mask d = c + 1; d <= alg.N(); ++d) {
                Triad t = make_triad(alg, b, c, d);
                MoufangFlags mf = moufang_check(alg, t);
                Element eb = Element::blade(b), ec = Element::blade(c),
                        ed = Element::blade(d);
                // d(b(dc)) == ((db)d)c
                CHECK(mf.m1 == (mul(ed, mul(eb, mul(ed, ec))) ==
                                mul(mul(mul(ed, eb), ed), ec)));
                // b(d(cd)) == ((bd)c)d
                CHECK(mf.m2 == (mul(eb, mul(ed, mul(ec, ed))) ==
                                mul(mul(mul(eb, ed), ec), ed)));
                // (db)(cd) == (d(bc))d
                CHECK(mf.m3 == (mul(mul(ed, eb), mul(ec, ed)) ==
                                mul(mul(ed, mul(eb, ec)), ed)));
            }
}

TEST_CASE("octonion malcev split is 28 to 7") {
    Algebra alg(Signature::level(3));
    int holds = 0, fails = 0;
    for (Mask b = 1; b <= alg.N(); ++b)
        for (Mask c = b + 1; c <= alg.N(); ++c)
            for (Mask d = c + 1; d <= alg.N(); ++d) {
                Triad t = make_triad(alg, b, c, d);
                bool assoc = triad_type(alg, t) == NonAssocType::ASSOC;
                if (malcev_check(alg, t)) {
                    CHECK_FALSE(assoc);
                    ++holds;
                } else {
                    CHECK(assoc);
                    ++fails;
                }
            }
    CHECK(holds == 28);
    CHECK(fails == 7);
}

}  // TEST_SUITE
