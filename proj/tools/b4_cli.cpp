// Command-line front end over the C interface of libb4.

#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "b4/b4.h"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Failure {
    std::string message;
};

void check(b4_status status) {
    if (status != B4_OK) throw Failure{b4_last_error()};
}

struct MachineDeleter {
    void operator()(b4_machine* m) const { b4_machine_free(m); }
};
using Machine = std::unique_ptr<b4_machine, MachineDeleter>;

struct StringDeleter {
    void operator()(char* s) const { b4_string_free(s); }
};

std::string take(char* s) {
    std::unique_ptr<char, StringDeleter> owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

Machine load(const std::string& source) {
    b4_machine* m = nullptr;
    check(b4_machine_load(source.c_str(), &m));
    return Machine(m);
}

std::size_t states(const Machine& m) {
    std::size_t n = 0;
    check(b4_machine_state_count(m.get(), &n));
    return n;
}

std::vector<std::string> split_commas(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream in(list);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mealy machine B4: transduction, group elements, orbits of xi and verification sweeps"};
    app.require_subcommand(1, 1);

    std::string machine, state, word;
    auto* transduce = app.add_subcommand("transduce", "Image of an infinite word u(v) under a machine state");
    transduce->add_option("--machine", machine, "Machine file or builtin:b4")->required();
    transduce->add_option("--state", state, "Start state (defaults to the file's start)");
    transduce->add_option("--word", word, "Infinite word, e.g. (1) or 00(1)")->required();

    std::string machines, out_path;
    auto* compose = app.add_subcommand("compose", "Serial composition of machines, left to right");
    compose->add_option("--machines", machines, "Comma-separated machine files")->required();
    compose->add_option("--out", out_path, "Output machine file")->required();

    auto* minimize = app.add_subcommand("minimize", "Minimal machine inducing the same map");
    minimize->add_option("--machine", machine, "Machine file")->required();
    minimize->add_option("--out", out_path, "Output machine file")->required();

    std::string element;
    std::uint64_t cap = 4096;
    auto* order = app.add_subcommand("order", "Order of a group element");
    order->add_option("--element", element, "Generator word over p, q, a, e")->required();
    order->add_option("--cap", cap, "Largest order searched")->check(CLI::PositiveNumber);

    auto* normalform = app.add_subcommand("normalform", "Alternating normal form of a group element");
    normalform->add_option("--element", element, "Generator word over p, q, a, e")->required();

    std::string start;
    std::uint64_t steps = 0;
    std::size_t prefix_len = 0;
    bool csv = false;
    auto* orbit = app.add_subcommand("orbit", "Orbit records of a word under xi");
    orbit->add_option("--start", start, "Starting infinite word")->required();
    orbit->add_option("--steps", steps, "Number of iterations")->required();
    orbit->add_option("--prefix", prefix_len, "Split each iterate after this many letters");
    orbit->add_flag("--csv", csv, "Emit k,u_k,x_k lines");

    std::string suite;
    std::size_t max = 10;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"lemma31", "cor32", "lemma41", "lemma52", "lemma55", "lemma56", "lipschitz", "all"}));
    verify->add_option("--max", max, "Upper end of the parameter sweeps");

    std::size_t max_len = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Growth of the group by generator word length");
    enumerate->add_option("--max-len", max_len, "Longest generator word")->required();

    std::string x, y;
    auto* metric = app.add_subcommand("metric", "Exact prefix distance of two infinite words");
    metric->add_option("--x", x, "First word")->required();
    metric->add_option("--y", y, "Second word")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*transduce) {
            const Machine m = load(machine);
            char* out = nullptr;
            check(b4_transduce(m.get(), state.empty() ? nullptr : state.c_str(), word.c_str(), &out));
            std::cout << take(out) << '\n';
        } else if (*compose) {
            const auto files = split_commas(machines);
            if (files.empty()) throw Failure{"--machines needs at least one file"};
            Machine acc = load(files.front());
            for (std::size_t i = 1; i < files.size(); ++i) {
                const Machine next = load(files[i]);
                b4_machine* c = nullptr;
                check(b4_compose(acc.get(), next.get(), &c));
                acc.reset(c);
            }
            check(b4_machine_save(acc.get(), out_path.c_str()));
            std::cout << "states: " << states(acc) << '\n';
        } else if (*minimize) {
            const Machine m = load(machine);
            b4_machine* min = nullptr;
            check(b4_minimize(m.get(), &min));
            const Machine minimal(min);
            check(b4_machine_save(minimal.get(), out_path.c_str()));
            std::cout << "states: " << states(m) << " -> " << states(minimal) << '\n';
        } else if (*order) {
            std::uint64_t n = 0;
            int exceeds = 0;
            check(b4_order(element.c_str(), cap, &n, &exceeds));
            if (exceeds)
                std::cout << "EXCEEDS_CAP\n";
            else
                std::cout << n << '\n';
        } else if (*normalform) {
            char* out = nullptr;
            check(b4_normal_form(element.c_str(), &out));
            std::cout << take(out) << '\n';
        } else if (*orbit) {
            const auto emit = [](std::uint64_t k, const char* u, const char* tail, void* user) -> int {
                const bool as_csv = *static_cast<bool*>(user);
                std::cout << k << (as_csv ? "," : " ") << u << (as_csv ? "," : " ") << tail << '\n';
                return 0;
            };
            check(b4_orbit(start.c_str(), steps, prefix_len, emit, &csv));
        } else if (*verify) {
            const auto line = [](const char* name, int passed, const char* detail, void*) {
                std::cout << "CHECK " << name << (passed ? " PASS" : " FAIL");
                if (*detail) std::cout << ' ' << detail;
                std::cout << '\n';
            };
            int all_passed = 0;
            check(b4_verify(suite.c_str(), max, line, nullptr, &all_passed));
            return all_passed ? kOk : kVerifyFailed;
        } else if (*enumerate) {
            std::vector<std::uint64_t> counts(max_len + 1);
            check(b4_enumerate(max_len, counts.data()));
            for (std::size_t len = 0; len < counts.size(); ++len) std::cout << len << ',' << counts[len] << '\n';
        } else if (*metric) {
            char* out = nullptr;
            check(b4_metric(x.c_str(), y.c_str(), &out));
            std::cout << take(out) << '\n';
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return kUsage;
    }
    return kOk;
}
