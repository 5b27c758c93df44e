#include "b4/b4.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "b4/b4.hpp"
#include "b4/group.hpp"
#include "b4/machine_io.hpp"
#include "b4/orbit.hpp"
#include "b4/suites.hpp"

struct b4_machine {
    b4::MealyMachine machine;
    std::optional<b4::StateIndex> start;
};

namespace {

thread_local std::string g_last_error;

b4_status fail(b4_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs body, mapping exceptions to status codes.
template <class Body>
b4_status guarded(Body&& body) {
    try {
        body();
        g_last_error.clear();
        return B4_OK;
    } catch (const b4::ParseError& e) {
        return fail(B4_ERR_PARSE, e.what());
    } catch (const b4::IoError& e) {
        return fail(B4_ERR_IO, e.what());
    } catch (const b4::Error& e) {
        return fail(B4_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(B4_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(B4_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

b4::InitialMachine initial(const b4_machine* m) {
    if (!m->start) throw b4::Error("machine '" + m->machine.name() + "' has no start state");
    return b4::InitialMachine(m->machine, *m->start);
}

b4_machine* wrap(const b4::InitialMachine& m) { return new b4_machine{m.machine(), m.start()}; }

}  // namespace

#define B4_REQUIRE(...)                                             \
    do {                                                            \
        const void* ptrs[] = {__VA_ARGS__};                         \
        for (const void* p : ptrs)                                  \
            if (!p) return fail(B4_ERR_NULL, "null argument");      \
    } while (0)

extern "C" {

const char* b4_version(void) { return "1.0.0"; }

const char* b4_last_error(void) { return g_last_error.c_str(); }

void b4_string_free(char* s) { std::free(s); }

b4_status b4_machine_load(const char* source, b4_machine** out) {
    B4_REQUIRE(source, out);
    return guarded([&] {
        const std::string src = source;
        if (src == "builtin:b4") {
            *out = new b4_machine{b4::b4_machine(), std::nullopt};
            return;
        }
        if (src.rfind("builtin:", 0) == 0) throw b4::Error("unknown builtin machine '" + src + "'");
        auto file = b4::load_machine(src);
        *out = new b4_machine{std::move(file.machine), file.start};
    });
}

b4_status b4_machine_parse(const char* text, b4_machine** out) {
    B4_REQUIRE(text, out);
    return guarded([&] {
        auto file = b4::parse_machine(text);
        *out = new b4_machine{std::move(file.machine), file.start};
    });
}

void b4_machine_free(b4_machine* m) { delete m; }

b4_status b4_machine_state_count(const b4_machine* m, size_t* out) {
    B4_REQUIRE(m, out);
    *out = m->machine.state_count();
    return B4_OK;
}

b4_status b4_machine_format(const b4_machine* m, char** out) {
    B4_REQUIRE(m, out);
    return guarded([&] { *out = dup(b4::format_machine(m->machine, m->start)); });
}

b4_status b4_machine_save(const b4_machine* m, const char* path) {
    B4_REQUIRE(m, path);
    return guarded([&] { b4::save_machine(path, b4::format_machine(m->machine, m->start)); });
}

b4_status b4_transduce(const b4_machine* m, const char* state, const char* word, char** out) {
    B4_REQUIRE(m, word, out);
    return guarded([&] {
        const b4::InitialMachine im = state ? b4::InitialMachine(m->machine, std::string_view(state)) : initial(m);
        const b4::UPWord x = b4::UPWord::parse(m->machine.input(), word);
        *out = dup(b4::transduce_up(im, x).to_string());
    });
}

b4_status b4_compose(const b4_machine* first, const b4_machine* second, b4_machine** out) {
    B4_REQUIRE(first, second, out);
    return guarded([&] { *out = wrap(b4::serial_compose(initial(first), initial(second))); });
}

b4_status b4_minimize(const b4_machine* m, b4_machine** out) {
    B4_REQUIRE(m, out);
    return guarded([&] { *out = wrap(b4::minimize(initial(m))); });
}

b4_status b4_equivalent(const b4_machine* m1, const b4_machine* m2, int* out) {
    B4_REQUIRE(m1, m2, out);
    return guarded([&] { *out = b4::equivalent(initial(m1), initial(m2)) ? 1 : 0; });
}

b4_status b4_order(const char* element, uint64_t cap, uint64_t* order, int* exceeds) {
    B4_REQUIRE(element, order, exceeds);
    return guarded([&] {
        const b4::Order o = b4::order(b4::GroupWord::parse(element), cap);
        *exceeds = o.exceeds_cap() ? 1 : 0;
        *order = o.value.value_or(0);
    });
}

b4_status b4_normal_form(const char* element, char** out) {
    B4_REQUIRE(element, out);
    return guarded([&] { *out = dup(b4::normal_form(b4::GroupWord::parse(element)).to_string()); });
}

b4_status b4_element_equal(const char* w1, const char* w2, int* out) {
    B4_REQUIRE(w1, w2, out);
    return guarded([&] {
        *out = b4::element_equal(b4::GroupWord::parse(w1), b4::GroupWord::parse(w2)) ? 1 : 0;
    });
}

b4_status b4_apply(const char* element, const char* word, char** out) {
    B4_REQUIRE(element, word, out);
    return guarded([&] {
        *out = dup(b4::apply(b4::GroupWord::parse(element), b4::UPWord::parse(word)).to_string());
    });
}

b4_status b4_metric(const char* x, const char* y, char** out) {
    B4_REQUIRE(x, y, out);
    return guarded([&] {
        *out = dup(b4::prefix_metric(b4::UPWord::parse(x), b4::UPWord::parse(y)).to_string());
    });
}

b4_status b4_orbit(const char* start, uint64_t steps, size_t prefix_len, b4_orbit_cb cb, void* user) {
    B4_REQUIRE(start);
    if (!cb) return fail(B4_ERR_NULL, "null argument");
    return guarded([&] {
        b4::Orbit orbit(b4::UPWord::parse(start));
        for (uint64_t k = 1; k <= steps; ++k) {
            const b4::UPWord& x = orbit.advance();
            const std::string u = b4::prefix(x, prefix_len).to_string();
            const std::string tail = b4::drop(x, prefix_len).to_string();
            if (cb(k, u.c_str(), tail.c_str(), user) != 0) break;
        }
    });
}

b4_status b4_verify(const char* suite, size_t max, b4_check_cb cb, void* user, int* all_passed) {
    B4_REQUIRE(suite, all_passed);
    return guarded([&] {
        const b4::Report report = b4::run_suite(suite, max);
        if (cb)
            for (const auto& c : report.checks()) cb(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
        *all_passed = report.passed() ? 1 : 0;
    });
}

b4_status b4_enumerate(size_t max_len, uint64_t* counts) {
    B4_REQUIRE(counts);
    return guarded([&] {
        const auto c = b4::enumerate_elements(max_len);
        for (std::size_t i = 0; i < c.size(); ++i) counts[i] = c[i];
    });
}

}  // extern "C"
