#include <doctest.h>

#include "b4/sampling.hpp"
#include "b4/words.hpp"
#include "oracles.hpp"

using namespace b4;

namespace {

FiniteWord w(std::string s) { return FiniteWord(Alphabet::binary(), std::move(s)); }
UPWord up(std::string_view s) { return UPWord::parse(s); }

}  // namespace

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(""), Error);
    CHECK_THROWS_AS(Alphabet("00"), Error);
    CHECK_THROWS_AS(Alphabet("0("), Error);
    CHECK_THROWS_AS(Alphabet("0 1"), Error);
    CHECK(Alphabet("10").is_binary());
    CHECK(Alphabet("10").same_letters(Alphabet::binary()));
    CHECK_FALSE(Alphabet("abc").is_binary());
    CHECK_THROWS_AS(FiniteWord(Alphabet::binary(), "012"), Error);
}

TEST_CASE("canonicalize") {
    SUBCASE("primitive period") {
        const UPWord x = canonicalize(FiniteWord(), w("11"));
        CHECK(x.preperiod().empty());
        CHECK(x.period().letters() == "1");
    }
    SUBCASE("preperiod absorption") {
        const UPWord x = canonicalize(w("01"), w("1"));
        CHECK(x.preperiod().letters() == "0");
        CHECK(x.period().letters() == "1");
    }
    SUBCASE("1(10) is already canonical") {
        const auto [cu, cv] = oracle::canonical("1", "10");
        REQUIRE(cu == "1");
        REQUIRE(cv == "10");
        const UPWord x = canonicalize(w("1"), w("10"));
        CHECK(x.preperiod().letters() == cu);
        CHECK(x.period().letters() == cv);
    }
    SUBCASE("rotation through the preperiod") {
        // The last two letters of the preperiod roll into the period.
        const auto [cu, cv] = oracle::canonical("0110", "10");
        const UPWord x = canonicalize(w("0110"), w("10"));
        CHECK(x.preperiod().letters() == cu);
        CHECK(x.period().letters() == cv);
        CHECK(cu.size() == 2);
    }
    CHECK_THROWS_AS(canonicalize(w("0"), FiniteWord()), Error);
}

TEST_CASE("canonical form agrees with the brute-force oracle") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const FiniteWord u = random_word(rng, rng() % 7);
        const FiniteWord v = random_word(rng, 1 + rng() % 6);
        const UPWord x(u, v);
        const std::size_t n = u.size() + 2 * v.size() + 8;
        CHECK(prefix(x, n).letters() == oracle::expand(u.letters(), v.letters(), n));
        const auto [cu, cv] = oracle::canonical(u.letters(), v.letters());
        CHECK(x.preperiod().letters() == cu);
        CHECK(x.period().letters() == cv);
    }
}

TEST_CASE("text syntax") {
    CHECK(up("(1)").to_string() == "(1)");
    CHECK(up("0011(11)").to_string() == "00(1)");
    CHECK(up("111(10)").to_string() == "111(10)");
    CHECK(up("(0101)").to_string() == "(01)");
    for (std::string_view bad : {"", "1", "()", "(", "0(1", "0)1(", "0(1)1", "(1)(0)", "0(2)"})
        CHECK_THROWS_AS(up(bad), ParseError);
    CHECK(FiniteWord::parse(Alphabet::binary(), "-").empty());
    CHECK(FiniteWord().to_string() == "-");
    CHECK_THROWS_AS(FiniteWord::parse(Alphabet::binary(), "01x"), ParseError);
}

TEST_CASE("prefix, drop and concat") {
    CHECK(prefix(up("(1)"), 3).letters() == "111");
    CHECK(prefix(up("00(1)"), 5).letters() == "00111");
    CHECK(prefix(up("0(10)"), 4).letters() == "0101");
    CHECK(prefix(up("(1)"), 0).empty());

    CHECK(concat(FiniteWord(), up("0(1)")) == up("0(1)"));
    CHECK(concat(w("1"), up("0(1)")) == up("10(1)"));
    CHECK(concat(w("0"), up("0(1)")) == up("00(1)"));

    CHECK(drop(up("0011(1)"), 3) == up("(1)"));
    CHECK(drop(up("110(01)"), 4) == up("(10)"));
    CHECK(drop(up("(01)"), 5) == up("(10)"));

    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const UPWord x = random_upword(rng);
        const FiniteWord u = random_word(rng, rng() % 6);
        CHECK(prefix(concat(u, x), u.size()) == u);
        const std::size_t n = rng() % 10;
        CHECK(concat(prefix(x, n), drop(x, n)) == x);
    }
}

TEST_CASE("longest common prefix") {
    CHECK_FALSE(longest_common_prefix_len(up("(1)"), up("(1)")).has_value());
    CHECK(longest_common_prefix_len(up("10(1)"), up("(1)")) == 1u);
    REQUIRE(oracle::lcp("1110", "1", "", "1") == 3);
    CHECK(longest_common_prefix_len(up("1110(1)"), up("(1)")) == 3u);

    Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        const UPWord x = random_upword(rng, 5, 4);
        const UPWord y = rng() % 2 ? random_upword(rng, 5, 4) : concat(prefix(x, rng() % 6), random_upword(rng, 3, 3));
        const long long expected = oracle::lcp(x.preperiod().letters(), x.period().letters(),
                                               y.preperiod().letters(), y.period().letters());
        const auto got = longest_common_prefix_len(x, y);
        if (expected < 0)
            CHECK_FALSE(got.has_value());
        else
            CHECK(got == static_cast<std::size_t>(expected));
    }
}

TEST_CASE("prefix metric") {
    CHECK(prefix_metric(up("(1)"), up("(1)")).is_zero());
    CHECK(prefix_metric(up("0(1)"), up("00(1)")) == Dyadic::pow2_neg(1));
    REQUIRE(oracle::lcp("", "1", "111110", "1") == 5);
    CHECK(prefix_metric(up("(1)"), up("111110(1)")) == Dyadic::pow2_neg(5));
    CHECK(prefix_metric(up("(1)"), up("0(1)")).to_string() == "2^-0");
    CHECK(Dyadic::zero().to_string() == "0");

    CHECK(Dyadic::zero() < Dyadic::pow2_neg(100));
    CHECK(Dyadic::pow2_neg(6) < Dyadic::pow2_neg(5));
    CHECK(Dyadic::pow2_neg(0) > Dyadic::pow2_neg(1));

    SUBCASE("metric axioms") {
        Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            const UPWord x = random_upword(rng, 4, 3);
            const UPWord y = concat(prefix(x, rng() % 5), random_upword(rng, 4, 3));
            const UPWord z = concat(prefix(y, rng() % 5), random_upword(rng, 4, 3));
            CHECK(prefix_metric(x, y) == prefix_metric(y, x));
            CHECK(prefix_metric(x, y).is_zero() == (x == y));
            CHECK(prefix_metric(x, z) <= std::max(prefix_metric(x, y), prefix_metric(y, z)));
            for (std::size_t m = 0; m < 8; ++m)
                CHECK((prefix_metric(x, y) < Dyadic::pow2_neg(m)) == (prefix(x, m + 1) == prefix(y, m + 1)));
        }
    }
}

TEST_CASE("complement letter") {
    CHECK(complement_letter(Alphabet::binary(), '0') == '1');
    CHECK(complement_letter(Alphabet::binary(), '1') == '0');
    CHECK(complement_letter(Alphabet::binary(), complement_letter(Alphabet::binary(), '1')) == '1');
    CHECK_THROWS_AS(complement_letter(Alphabet("abc"), 'a'), Error);
}
