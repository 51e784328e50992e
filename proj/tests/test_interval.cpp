#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "carloscale/interval.hpp"

using namespace carloscale;

TEST_CASE("ratios reduce to lowest terms") {
    const Ratio r(12, 10);
    CHECK(r.num() == 6);
    CHECK(r.den() == 5);
    CHECK(Ratio(12, 10) == Ratio(6, 5));
    CHECK(Ratio(7, 1).str() == "7");
    CHECK(Ratio(27, 20).str() == "27/20");
    for (const JustInterval& entry : builtin_catalog())
        CHECK(std::gcd(entry.ratio.num(), entry.ratio.den()) == 1);
}

TEST_CASE("ratios reject non-positive parts") {
    CHECK_THROWS_AS(Ratio(0, 5), std::domain_error);
    CHECK_THROWS_AS(Ratio(3, 0), std::domain_error);
    CHECK_THROWS_AS(Ratio(-3, 2), std::domain_error);
}

TEST_CASE("cents conversion") {
    CHECK(cents(Ratio(2, 1)) == doctest::Approx(1200.0).epsilon(1e-12));
    CHECK(cents(Ratio(3, 2)) == doctest::Approx(701.955).epsilon(0).scale(0).epsilon(1e-12));
    CHECK(std::abs(cents(Ratio(3, 2)) - 701.955) < 0.001);
    CHECK(std::abs(cents(Ratio(6, 5)) - 315.641) < 0.001);
    CHECK(std::abs(cents(Ratio(5, 4)) - 386.314) < 0.001);
}

TEST_CASE("compose multiplies ratios and prefers catalog names") {
    const JustInterval m3 = *catalog_find("m3");
    const JustInterval M3 = *catalog_find("M3");
    const JustInterval P4 = *catalog_find("P4");
    const JustInterval P5 = *catalog_find("P5");
    const JustInterval M2 = *catalog_find("M2");

    const JustInterval fifth = compose(m3, M3);
    CHECK(fifth.name == "P5");
    CHECK(fifth.ratio == Ratio(3, 2));

    const JustInterval octave = compose(P4, P5);
    CHECK(octave.name == "P8");
    CHECK(octave.ratio == Ratio(2, 1));

    // 9/8 * 6/5 = 27/20, which is NOT the catalog P4 (4/3): the compound
    // name keeps the distinction visible
    const JustInterval fourthish = compose(M2, m3);
    CHECK(fourthish.ratio == Ratio(27, 20));
    CHECK(fourthish.name == "M2⊕m3");
}

TEST_CASE("compose overflow raises") {
    const JustInterval huge{"huge", Ratio(INT64_C(3037000500), 1)};
    CHECK_THROWS_AS(compose(compose(huge, huge), huge), std::overflow_error);
}

TEST_CASE("invert gives the octave complement") {
    const JustInterval P5 = *catalog_find("P5");
    const JustInterval inverted = invert(P5);
    CHECK(inverted.name == "P4");
    CHECK(inverted.ratio == Ratio(4, 3));

    const JustInterval unison = invert(*catalog_find("P8"));
    CHECK(unison.name == "unison");
    CHECK(unison.ratio == Ratio(1, 1));

    const JustInterval M6 = invert(*catalog_find("m3"));
    CHECK(M6.name == "M6");
    CHECK(M6.ratio == Ratio(5, 3));

    // non-catalog inversions get a plain ratio name
    const JustInterval odd = invert(JustInterval{"7/6", Ratio(7, 6)});
    CHECK(odd.ratio == Ratio(12, 7));
    CHECK(odd.name == "12/7");
}

TEST_CASE("invert rejects ratios outside one octave") {
    CHECK_THROWS_AS(invert(JustInterval{"too wide", Ratio(9, 4)}), std::domain_error);
    CHECK_NOTHROW(invert(JustInterval{"unison", Ratio(1, 1)}));
    CHECK_NOTHROW(invert(JustInterval{"octave", Ratio(2, 1)}));
}

TEST_CASE("compose with inversion closes the octave exactly") {
    for (const JustInterval& entry : builtin_catalog()) {
        if (entry.ratio.num() > 2 * entry.ratio.den())
            continue;
        CHECK(compose(entry, invert(entry)).ratio == Ratio(2, 1));
    }
}

TEST_CASE("compose is commutative and associative on exact ratios") {
    const auto& catalog = builtin_catalog();
    for (const JustInterval& a : catalog) {
        for (const JustInterval& b : catalog) {
            CHECK(compose(a, b).ratio == compose(b, a).ratio);
            for (const JustInterval& c : catalog)
                CHECK(compose(compose(a, b), c).ratio == compose(a, compose(b, c)).ratio);
        }
    }
}

TEST_CASE("cents is additive under composition") {
    const auto& catalog = builtin_catalog();
    for (const JustInterval& a : catalog)
        for (const JustInterval& b : catalog)
            CHECK(std::abs(cents(compose(a, b)) - (cents(a) + cents(b))) < 1e-9);
}

TEST_CASE("parse_interval accepts catalog tokens and ratio literals") {
    CHECK(parse_interval("M3").ratio == Ratio(5, 4));
    CHECK(parse_interval("P5").name == "P5");
    CHECK(parse_interval("7/4").name == "7/4");
    CHECK(parse_interval("7/4").ratio == Ratio(7, 4));
    // literals that land on a catalog ratio canonicalize
    CHECK(parse_interval("3/2").name == "P5");
    CHECK(parse_interval("12/10").name == "m3");

    CHECK_THROWS_AS(parse_interval("p5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("M5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("unison"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("4/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("-3/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval("3/2/5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval(""), std::invalid_argument);
}
