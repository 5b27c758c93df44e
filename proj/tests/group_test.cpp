#include <doctest.h>

#include <set>

#include "b4/b4.hpp"
#include "b4/group.hpp"
#include "b4/sampling.hpp"
#include "oracles.hpp"

using namespace b4;

namespace {

GroupWord g(std::string_view s) { return GroupWord::parse(s); }
UPWord up(std::string_view s) { return UPWord::parse(s); }

// β written out as αq, so words can be checked without the library's own expansion.
GroupWord expand_beta(const GroupWord& w) {
    std::vector<Gen> out;
    for (Gen s : w.symbols()) {
        if (s == Gen::beta) {
            out.push_back(Gen::alpha);
            out.push_back(Gen::q);
        } else {
            out.push_back(s);
        }
    }
    return GroupWord(out);
}

// Smallest n with w^n acting trivially on every word of the given length.
std::uint64_t bounded_order(const GroupWord& w, std::size_t length, std::uint64_t cap) {
    const auto words = oracle::binary_words(length);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        const InitialMachine m = realize_minimal(w.power(n));
        bool trivial = true;
        for (const auto& u : words) trivial &= oracle::run(m.machine(), m.start(), u) == u;
        if (trivial) return n;
    }
    return 0;
}

}  // namespace

TEST_CASE("generator words") {
    CHECK(g("").empty());
    CHECK(g("-").empty());
    CHECK(g("paq").to_string() == "paq");
    CHECK(g("paq").inverse().to_string() == "qap");
    CHECK(g("pq").power(3).to_string() == "pqpqpq");
    CHECK(GroupWord().to_string() == "-");
    CHECK_THROWS_AS(g("px"), ParseError);
}

TEST_CASE("apply") {
    CHECK(apply(g("p"), up("(1)")) == up("0(1)"));
    CHECK(apply(g("pp"), up("(1)")) == up("(1)"));
    CHECK(apply(g("paq"), up("(1)")) == up("0011(1)"));
    CHECK(apply(g(""), up("01(0)")) == up("01(0)"));
    CHECK(apply(g("b"), up("0(1)")) == apply(g("aq"), up("0(1)")));

    Rng rng(71);
    for (int i = 0; i < 300; ++i) {
        const GroupWord w = random_group_word(rng, 6);
        const UPWord x = random_upword(rng);
        const InitialMachine m = realize(w);
        const std::size_t n = 40;
        const std::string lhs = prefix(apply(w, x), n).letters();
        CHECK(lhs == oracle::run(m.machine(), m.start(), prefix(x, n).letters()));
        // Symbol by symbol on the prefix, straight from the table.
        std::string u = prefix(x, n).letters();
        for (Gen s : w.symbols()) u = oracle::run(b4_machine(), b4_machine().state_index(std::string(1, symbol(s))), u);
        CHECK(lhs == u);
        CHECK(apply(w.inverse(), apply(w, x)) == x);
    }
}

TEST_CASE("realize") {
    CHECK(is_identity(realize(g(""))));
    CHECK(realize(g("")).state_count() == 1);
    CHECK(realize_minimal(g("pp")).state_count() == 1);
    Rng rng(73);
    for (int i = 0; i < 100; ++i) {
        const GroupWord w = random_group_word(rng, 5);
        CHECK(equivalent(realize(w), realize_minimal(w)));
    }
}

TEST_CASE("element equality") {
    CHECK(element_equal(g("pp"), g("")));
    CHECK(element_equal(g("e"), g("")));
    CHECK(element_equal(g("aq"), g("qa")));
    CHECK(element_equal(g("b"), g("aq")));
    CHECK_FALSE(element_equal(g("pq"), g("qp")));
    CHECK_FALSE(element_equal(g("p"), g("q")));
}

TEST_CASE("orders") {
    CHECK(order(g("p")).to_string() == "2");
    CHECK(order(g("q")).to_string() == "2");
    CHECK(order(g("a")).to_string() == "2");
    CHECK(order(g("aq")).to_string() == "2");
    CHECK(order(g("pq")).to_string() == "8");
    CHECK(order(g("pa")).to_string() == "4");
    CHECK(order(g("qp")).to_string() == "8");
    CHECK(order(g("ap")).to_string() == "4");
    CHECK(order(g("")).to_string() == "1");
    CHECK(order(g("e")).to_string() == "1");
    CHECK(order(g("paq"), 64).exceeds_cap());
    CHECK(order(g("pq"), 7).exceeds_cap());
    CHECK(order(g("pq"), 8).value == 8u);
    CHECK_THROWS_AS(order(g("p"), 0), Error);

    // Bounded-word cross-check of the small orders.
    for (std::string_view w : {"p", "q", "a", "aq", "pq", "pa", "qp", "ap"})
        CHECK(bounded_order(g(w), 10, 16) == order(g(w)).value);

    SUBCASE("conjugation preserves order") {
        for (std::string_view w : {"pq", "pa", "aq"})
            for (std::string_view h : {"p", "q", "a", "pq", "qap"})
                CHECK(order(conjugate(g(w), g(h))).value == order(g(w)).value);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(g("pq"), g("a")).to_string() == "apqa");
    CHECK(element_equal(conjugate(g("pq"), g("")), g("pq")));
}

TEST_CASE("normal form") {
    CHECK(normal_form(g("")).to_string() == "I");
    CHECK(normal_form(g("pp")).is_identity());
    CHECK(normal_form(g("epe")).to_string() == "p");
    CHECK(normal_form(g("aa")).is_identity());
    CHECK(normal_form(g("qa")).to_string() == "b");
    CHECK(normal_form(g("aq")).to_string() == "b");
    CHECK(normal_form(g("aqa")).to_string() == "q");
    CHECK(normal_form(g("paq")).to_string() == "pb");
    CHECK(normal_form(g("pqapqp")).to_string() == "pbpqp");

    const NormalForm nf = normal_form(g("pqpap"));
    CHECK(nf.leading_p());
    CHECK(nf.trailing_p());
    CHECK(nf.core().to_string() == "qpa");
    CHECK_FALSE(normal_form(g("q")).trailing_p());

    CHECK_THROWS_AS(NormalForm(g("pp")), Error);
    CHECK_THROWS_AS(NormalForm(g("qa")), Error);
    CHECK_THROWS_AS(NormalForm(g("e")), Error);

    Rng rng(79);
    for (int i = 0; i < 300; ++i) {
        const GroupWord w = random_group_word(rng, 10);
        const NormalForm nf = normal_form(w);
        CHECK(oracle::union_bounded_equivalent(realize_minimal(expand_beta(nf.word())), realize_minimal(w)));
        CHECK(normal_form(nf.word()) == nf);
        const auto& s = nf.word().symbols();
        for (std::size_t k = 0; k + 1 < s.size(); ++k) CHECK(((s[k] == Gen::p) != (s[k + 1] == Gen::p)));
    }
}

TEST_CASE("Klein subgroup") {
    const KleinTable t = klein_table();
    CHECK(t.report.passed());
    CHECK(t.elements[0].empty());
    for (int i = 0; i < 4; ++i) {
        CHECK(t.product[0][i] == i);
        CHECK(t.product[i][i] == 0);
        for (int j = 0; j < 4; ++j) {
            CHECK(t.product[i][j] == t.product[j][i]);
            CHECK(element_equal(t.elements[i] + t.elements[j], t.elements[t.product[i][j]]));
            if (i != j) CHECK_FALSE(oracle::union_bounded_equivalent(realize_minimal(t.elements[i]), realize_minimal(t.elements[j])));
        }
    }
    CHECK_FALSE(t.format().empty());
}

TEST_CASE("growth") {
    const auto counts = enumerate_elements(4);
    REQUIRE(counts.size() == 5);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 4);

    // Distinct elements among words of length <= 3, counted by their action on
    // all words of length 2·(largest minimal machine), which separates any two.
    std::vector<std::vector<InitialMachine>> by_length;
    std::vector<GroupWord> frontier{GroupWord()};
    std::size_t largest = 1;
    for (std::size_t len = 0; len <= 3; ++len) {
        if (len > 0) {
            std::vector<GroupWord> next;
            for (const auto& w : frontier)
                for (Gen s : {Gen::p, Gen::q, Gen::alpha, Gen::eps}) next.push_back(w + GroupWord{s});
            frontier = std::move(next);
        }
        by_length.emplace_back();
        for (const auto& w : frontier) {
            by_length.back().push_back(realize_minimal(w));
            largest = std::max(largest, by_length.back().back().state_count());
        }
    }
    REQUIRE(largest <= 8);
    const auto words = oracle::binary_words(2 * largest);
    std::set<std::string> actions;
    std::vector<std::size_t> expected;
    for (const auto& machines : by_length) {
        for (const auto& m : machines) {
            std::string action;
            for (const auto& u : words) action += oracle::run(m.machine(), m.start(), u);
            actions.insert(std::move(action));
        }
        expected.push_back(actions.size());
    }
    for (std::size_t len = 0; len <= 3; ++len) CHECK(counts[len] == expected[len]);
    for (std::size_t len = 1; len < counts.size(); ++len) CHECK(counts[len] > counts[len - 1]);
}
