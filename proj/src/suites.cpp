#include "b4/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "b4/b4.hpp"
#include "b4/group.hpp"
#include "b4/orbit.hpp"
#include "b4/sampling.hpp"

namespace b4 {

namespace {

UPWord up(std::string_view text) { return UPWord::parse(text); }

Report eta_suite(std::size_t max) {
    Report r;
    r.add("eta.image_p", eta(MorphWord::parse("p")).to_string() == "pqp");
    r.add("eta.image_q", eta(MorphWord::parse("q")).to_string() == "a");
    r.add("eta.image_a", eta(MorphWord::parse("a")).to_string() == "q");
    r.add("eta.image_pqp", eta(MorphWord::parse("pqp")).to_string() == "pqpapqp");
    for (std::size_t ell = 0; ell <= max; ++ell) r.append(verify_eta_recurrence(ell));
    return r;
}

Report swap_suite(std::size_t max) {
    Report r;
    for (std::size_t ell = 0; ell <= max; ++ell) r.append(verify_swap_identities(ell));
    return r;
}

Report cover_suite(std::size_t max) {
    Report r = verify_basis_identities();
    for (std::size_t ell = 0; ell <= max; ++ell) r.append(verify_eta_cover(ell));

    std::set<std::string> images;
    for (std::size_t ell = 0; ell <= max; ++ell)
        images.insert(apply(eta_power(ell).as_group_word(), up("(1)")).to_string());
    r.add("eta.distinct_images", images.size() == max + 1, "l<=" + std::to_string(max));

    const std::size_t machine_max = std::min<std::size_t>(max, 10);
    std::vector<InitialMachine> machines;
    for (std::size_t ell = 0; ell <= machine_max; ++ell)
        machines.push_back(realize_minimal(eta_power(ell).as_group_word()));
    bool distinct = true;
    for (std::size_t i = 0; i < machines.size(); ++i)
        for (std::size_t j = i + 1; j < machines.size(); ++j) distinct &= !equivalent(machines[i], machines[j]);
    r.add("eta.distinct_machines", distinct, "l<=" + std::to_string(machine_max));

    const std::size_t growth_max = std::min<std::size_t>(max, 6);
    const auto counts = enumerate_elements(growth_max);
    bool growing = counts.size() > 1 && counts[0] == 1 && counts[1] == 4;
    for (std::size_t len = 2; len < counts.size(); ++len) growing &= counts[len] > counts[len - 1];
    std::string detail;
    for (std::size_t c : counts) detail += (detail.empty() ? "" : ",") + std::to_string(c);
    r.add("group.growth", growing, "counts=" + detail);
    return r;
}

Report klein_suite(std::size_t max) {
    Report r = klein_table().report;
    r.append(verify_walker_parity(max));

    r.add("normal_form.q_beta", normal_form(GroupWord::parse("qb")).to_string() == "a");
    r.add("normal_form.shape", normal_form(GroupWord::parse("paq")).to_string() == "pb");
    r.add("normal_form.cancel", normal_form(GroupWord::parse("ppqq")).is_identity());
    r.add("relation.aq_is_beta", element_equal(GroupWord::parse("aq"), GroupWord::parse("b")));
    r.add("relation.q_beta", element_equal(GroupWord::parse("qb"), GroupWord::parse("a")));
    r.add("relation.beta_a", element_equal(GroupWord::parse("ba"), GroupWord::parse("q")));
    r.add("relation.aqa", element_equal(GroupWord::parse("aqa"), GroupWord::parse("q")));
    r.add("conjugate.q_by_a", element_equal(conjugate(GroupWord::parse("q"), GroupWord::parse("a")),
                                            GroupWord::parse("q")));
    for (std::string_view w : {"paq", "pqpapqp", "qapqeapq", "ppaqpbq"})
        r.add("normal_form.sound", element_equal(GroupWord::parse(w), normal_form(GroupWord::parse(w)).word()),
              std::string(w) + " -> " + normal_form(GroupWord::parse(w)).to_string());
    return r;
}

Report order_suite(std::size_t) {
    Report r;
    auto expect = [&](std::string_view w, std::uint64_t n) {
        const Order o = order(GroupWord::parse(w));
        r.add("order." + std::string(w), o.value == n, "got " + o.to_string() + " expected " + std::to_string(n));
    };
    expect("p", 2);
    expect("q", 2);
    expect("a", 2);
    expect("aq", 2);
    expect("pq", 8);
    expect("pa", 4);
    expect("qp", 8);
    expect("ap", 4);
    for (std::string_view w : {"pq", "pa"})
        for (std::string_view h : {"p", "q", "a", "pq"}) {
            const Order base = order(GroupWord::parse(w));
            const Order conj = order(conjugate(GroupWord::parse(w), GroupWord::parse(h)));
            r.add("order.conjugate_invariant", base.value == conj.value,
                  std::string(w) + " by " + std::string(h) + ": " + base.to_string() + " vs " + conj.to_string());
        }

    const GroupWord pq = GroupWord::parse("pq"), pa = GroupWord::parse("pa");
    const std::array<std::string_view, 5> cycle{"00(1)", "10(1)", "0(1)", "(1)", "00(1)"};
    bool pq_cycle = true;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) pq_cycle &= apply(pq, up(cycle[i])) == up(cycle[i + 1]);
    r.add("order.pq_short_cycle", pq_cycle, "001^w -> 101^w -> 01^w -> 1^w -> 001^w");
    r.add("order.pa_short_cycle", apply(pa, up("0(1)")) == up("(1)") && apply(pa, up("(1)")) == up("0(1)"),
          "01^w <-> 1^w");

    const Order xi_order = order(xi(), 4096);
    r.add("order.xi", xi_order.exceeds_cap(), "cap=4096 got " + xi_order.to_string());
    return r;
}

Report sweep_suite(std::size_t max) {
    Report r;
    for (std::size_t n = 1; n <= std::max<std::size_t>(max, 1); ++n) r.append(verify_xi_sweep(n));

    static constexpr std::array<std::string_view, 8> kRows{"0011(1)", "1001(1)", "0101(1)", "1100(1)",
                                                           "0000(1)", "1010(1)", "0110(1)", "11100(1)"};
    Orbit orbit(up("(1)"));
    bool rows = true;
    for (std::string_view row : kRows) rows &= orbit.advance() == up(row);
    r.add("sweep.first_rows", rows, "1^w xi^k for k=1..8");

    // Separation of powers by their action on 1^ω.
    std::set<std::string> images;
    const std::size_t powers = 64;
    Orbit from_ones(up("(1)"));
    images.insert(from_ones.current().to_string());
    for (std::size_t k = 1; k <= powers; ++k) images.insert(from_ones.advance().to_string());
    r.add("xi.distinct_powers", images.size() == powers + 1, "k<=" + std::to_string(powers));

    const std::size_t m = std::min<std::size_t>(max, 8);
    bool dense = true;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        std::string target;
        for (std::size_t i = m; i-- > 0;) target += (code >> i) & 1 ? '1' : '0';
        const WitnessReport w = density_witness(up("(1)"), up(target + "(0)"), m);
        dense &= w.found && w.achieved < w.bound;
    }
    r.add("density.from_ones", dense, "all targets in {0,1}^" + std::to_string(m));

    Rng rng(0xd3a5e);
    bool dense_any = true, transitive = true;
    for (int i = 0; i < 20; ++i) {
        const UPWord start = random_upword(rng), target = random_upword(rng);
        const WitnessReport w = density_witness(start, target, m);
        dense_any &= w.found && w.achieved < w.bound;
        const std::size_t eps = 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(m, 1));
        const WitnessReport t = transitivity_witness(start, target, eps);
        transitive &= t.found && t.achieved < t.bound;
    }
    r.add("density.random_starts", dense_any, "20 random (start, target), m=" + std::to_string(m));
    r.add("transitivity.random", transitive, "20 random (x, y, eps)");
    return r;
}

Report lipschitz_suite(std::size_t) {
    Report r;
    r.append(lipschitz_check(xi(), up("(1)"), up("0(1)"), 32));
    r.append(lipschitz_check(xi(), up("111110(1)"), up("(1)"), 64));
    Rng rng(0x11b5);
    for (int i = 0; i < 50; ++i) {
        const GroupWord w = random_group_word(rng, 6);
        const UPWord x = random_upword(rng);
        const UPWord y = concat(prefix(x, rng() % 8), random_upword(rng));
        r.append(lipschitz_check(w, x, y, 32));
    }
    bool sequential = true;
    for (Gen g : {Gen::p, Gen::q, Gen::alpha, Gen::eps})
        for (int i = 0; i < 20; ++i) sequential &= is_sequential_consistent(b4_at(g), random_word(rng, rng() % 12));
    for (int i = 0; i < 50; ++i)
        sequential &= is_sequential_consistent(random_machine(rng, 1 + rng() % 5), random_word(rng, rng() % 12));
    r.add("sequential.prefix_preserving", sequential, "B4 states and random machines");
    return r;
}

struct Suite {
    std::string_view name;
    std::function<Report(std::size_t)> run;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> kSuites{
        {"lemma31", eta_suite},  {"cor32", swap_suite},    {"lemma41", cover_suite},
        {"lemma52", klein_suite}, {"lemma55", order_suite}, {"lemma56", sweep_suite},
        {"lipschitz", lipschitz_suite},
    };
    return kSuites;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> kNames = [] {
        std::vector<std::string_view> names;
        for (const auto& s : suites()) names.push_back(s.name);
        names.push_back("all");
        return names;
    }();
    return kNames;
}

Report run_suite(std::string_view name, std::size_t max) {
    Report report;
    for (const auto& s : suites())
        if (name == "all" || name == s.name) report.append(s.run(max));
    if (report.checks().empty()) throw Error("unknown suite '" + std::string(name) + "'");
    return report;
}

}  // namespace b4
