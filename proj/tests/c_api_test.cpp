// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "b4/b4.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    b4_string_free(s);
    return out;
}

const char* kFlip =
    "machine flip\ninput 0 1\nstates s\nstart s\nt s 0 1 s\nt s 1 0 s\n";

}  // namespace

TEST_CASE("version and errors") {
    CHECK(std::strlen(b4_version()) > 0);
    b4_machine* m = nullptr;
    CHECK(b4_machine_parse("machine x\n", &m) == B4_ERR_PARSE);
    CHECK(m == nullptr);
    CHECK(std::strlen(b4_last_error()) > 0);
    CHECK(b4_machine_load("/nonexistent/file.machine", &m) == B4_ERR_IO);
    CHECK(b4_machine_load("builtin:nope", &m) == B4_ERR_INVALID);
    CHECK(b4_machine_load(nullptr, &m) == B4_ERR_NULL);
    b4_machine_free(nullptr);
    b4_string_free(nullptr);
}

TEST_CASE("builtin machine") {
    b4_machine* m = nullptr;
    REQUIRE(b4_machine_load("builtin:b4", &m) == B4_OK);
    size_t n = 0;
    CHECK(b4_machine_state_count(m, &n) == B4_OK);
    CHECK(n == 4);

    char* out = nullptr;
    REQUIRE(b4_transduce(m, "p", "(1)", &out) == B4_OK);
    CHECK(take(out) == "0(1)");
    REQUIRE(b4_transduce(m, "q", "0(1)", &out) == B4_OK);
    CHECK(take(out) == "00(1)");
    CHECK(b4_transduce(m, nullptr, "(1)", &out) == B4_ERR_INVALID);
    CHECK(b4_transduce(m, "z", "(1)", &out) == B4_ERR_INVALID);
    CHECK(b4_transduce(m, "p", "(2)", &out) == B4_ERR_PARSE);

    REQUIRE(b4_machine_format(m, &out) == B4_OK);
    const std::string text = take(out);
    b4_machine* again = nullptr;
    REQUIRE(b4_machine_parse(text.c_str(), &again) == B4_OK);
    REQUIRE(b4_machine_format(again, &out) == B4_OK);
    CHECK(take(out) == text);
    b4_machine_free(again);
    b4_machine_free(m);
}

TEST_CASE("compose, minimize, equivalent") {
    b4_machine* f = nullptr;
    REQUIRE(b4_machine_parse(kFlip, &f) == B4_OK);
    b4_machine* ff = nullptr;
    REQUIRE(b4_compose(f, f, &ff) == B4_OK);
    b4_machine* mm = nullptr;
    REQUIRE(b4_minimize(ff, &mm) == B4_OK);
    size_t n = 0;
    b4_machine_state_count(mm, &n);
    CHECK(n == 1);
    char* out = nullptr;
    REQUIRE(b4_transduce(ff, nullptr, "01(1)", &out) == B4_OK);
    CHECK(take(out) == "0(1)");
    int eq = -1;
    CHECK(b4_equivalent(ff, mm, &eq) == B4_OK);
    CHECK(eq == 1);
    CHECK(b4_equivalent(f, mm, &eq) == B4_OK);
    CHECK(eq == 0);

    const std::string path = "c_api_test.machine";
    CHECK(b4_machine_save(mm, path.c_str()) == B4_OK);
    b4_machine* loaded = nullptr;
    CHECK(b4_machine_load(path.c_str(), &loaded) == B4_OK);
    CHECK(b4_equivalent(loaded, mm, &eq) == B4_OK);
    CHECK(eq == 1);
    std::remove(path.c_str());

    for (b4_machine* m : {f, ff, mm, loaded}) b4_machine_free(m);
}

TEST_CASE("group elements") {
    uint64_t order = 0;
    int exceeds = -1;
    REQUIRE(b4_order("pq", 4096, &order, &exceeds) == B4_OK);
    CHECK(order == 8);
    CHECK(exceeds == 0);
    REQUIRE(b4_order("paq", 100, &order, &exceeds) == B4_OK);
    CHECK(exceeds == 1);
    CHECK(b4_order("px", 10, &order, &exceeds) == B4_ERR_PARSE);
    CHECK(b4_order("p", 0, &order, &exceeds) == B4_ERR_INVALID);

    char* out = nullptr;
    REQUIRE(b4_normal_form("pqap", &out) == B4_OK);
    CHECK(take(out) == "pbp");
    int eq = -1;
    REQUIRE(b4_element_equal("pbp", "pqap", &eq) == B4_OK);
    CHECK(eq == 1);
    REQUIRE(b4_apply("paq", "(1)", &out) == B4_OK);
    CHECK(take(out) == "00(1)");
    REQUIRE(b4_metric("(1)", "110(1)", &out) == B4_OK);
    CHECK(take(out) == "2^-2");

    std::vector<uint64_t> counts(3);
    REQUIRE(b4_enumerate(2, counts.data()) == B4_OK);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 4);
}

TEST_CASE("orbit callback") {
    std::vector<std::string> rows;
    const auto cb = [](uint64_t k, const char* u, const char* tail, void* user) -> int {
        static_cast<std::vector<std::string>*>(user)->push_back(std::to_string(k) + "," + u + "," + tail);
        return k == 5 ? 1 : 0;
    };
    REQUIRE(b4_orbit("(1)", 8, 3, cb, &rows) == B4_OK);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "1,001,(1)");
    CHECK(b4_orbit("(1)", 8, 3, nullptr, nullptr) == B4_ERR_NULL);
}

TEST_CASE("verify") {
    int passed = -1;
    size_t checks = 0;
    const auto cb = [](const char*, int, const char*, void* user) { ++*static_cast<size_t*>(user); };
    REQUIRE(b4_verify("lemma52", 6, cb, &checks, &passed) == B4_OK);
    CHECK(passed == 1);
    CHECK(checks > 0);
    CHECK(b4_verify("nosuch", 6, nullptr, nullptr, &passed) == B4_ERR_INVALID);
}
