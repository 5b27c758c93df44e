#include "b4/orbit.hpp"

#include <vector>

#include "b4/b4.hpp"
#include "b4/group.hpp"

namespace b4 {

namespace {

const InitialMachine& xi_machine() {
    static const InitialMachine kXi = realize_minimal(xi());
    return kXi;
}

std::string bits(std::uint64_t k) { return std::to_string(k); }

}  // namespace

Orbit::Orbit(UPWord start, const GroupWord& element)
    : element_(realize_minimal(element)), current_(std::move(start)) {}

Orbit::Orbit(UPWord start) : element_(xi_machine()), current_(std::move(start)) {}

const UPWord& Orbit::advance() {
    current_ = transduce_up(element_, current_);
    ++index_;
    return current_;
}

UPWord iterate(const UPWord& x, std::uint64_t k) {
    Orbit orbit(x);
    for (std::uint64_t i = 0; i < k; ++i) orbit.advance();
    return orbit.current();
}

UPWord iterate(const GroupWord& w, const UPWord& x, std::uint64_t k) {
    Orbit orbit(x, w);
    for (std::uint64_t i = 0; i < k; ++i) orbit.advance();
    return orbit.current();
}

std::string OrbitRecord::csv() const {
    return std::to_string(k) + "," + prefix.to_string() + "," + tail.to_string();
}

std::vector<OrbitRecord> orbit_records(const UPWord& start, std::uint64_t steps, std::size_t n) {
    std::vector<OrbitRecord> records;
    records.reserve(steps);
    Orbit orbit(start);
    for (std::uint64_t k = 1; k <= steps; ++k) {
        const UPWord& x = orbit.advance();
        records.push_back({k, prefix(x, n), drop(x, n)});
    }
    return records;
}

Report verify_xi_sweep(std::size_t n) {
    if (n < 1 || n > 30) throw Error("sweep length n must be in [1, 30]");
    Report report;
    const std::string tag = "n=" + std::to_string(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t half = total / 2;
    const UPWord ones = UPWord::parse("(1)");
    const UPWord marker = UPWord::parse("0(1)");
    const GroupWord step = xi();

    std::vector<bool> seen(total, false);
    std::uint64_t distinct = 0;
    std::optional<std::uint64_t> no_zero, bad_tail_ones, bad_tail_marker, bad_cycle, too_long;
    std::optional<FiniteWord> first_prefix, previous;

    Orbit orbit(ones);
    for (std::uint64_t k = 1; k <= total; ++k) {
        const UPWord& x = orbit.advance();
        const FiniteWord u = prefix(x, n);
        const UPWord tail = drop(x, n);

        if (k < total && !u.contains('0') && !no_zero) no_zero = k;
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < n; ++i) code = (code << 1) | (u[i] == '1' ? 1u : 0u);
        if (!seen[code]) {
            seen[code] = true;
            ++distinct;
        }
        if (k < half && tail != ones && !bad_tail_ones) bad_tail_ones = k;
        if (k >= half && k < total && tail != marker && !bad_tail_marker) bad_tail_marker = k;
        if (previous && apply(step, *previous) != u && !bad_cycle) bad_cycle = k;
        if (x.preperiod().size() > n + 2 && !too_long) too_long = k;

        if (!first_prefix) first_prefix = u;
        previous = u;
    }
    const bool closes = apply(step, *previous) == *first_prefix;

    auto at = [&](const std::optional<std::uint64_t>& k) { return k ? " first failure at k=" + bits(*k) : std::string(); };
    report.add("sweep.zero_in_prefix", !no_zero, tag + at(no_zero));
    report.add("sweep.exhaustive", distinct == total, tag + " distinct=" + bits(distinct) + " of " + bits(total));
    report.add("sweep.tail_ones", !bad_tail_ones, tag + at(bad_tail_ones));
    report.add("sweep.tail_marker", !bad_tail_marker, tag + at(bad_tail_marker));

    const UPWord last = orbit.current();
    const UPWord expected =
        concat(FiniteWord(Alphabet::binary(), std::string(n, '1') + "00"), ones);
    report.add("sweep.return", last == expected, tag + " got " + last.to_string() + " expected " + expected.to_string());
    report.add("sweep.single_cycle", !bad_cycle && closes, tag + at(bad_cycle));
    report.add("sweep.bounded", !too_long, tag + at(too_long));
    return report;
}

std::string WitnessReport::describe() const {
    std::string out = "target=" + target + (found ? " found k=" + std::to_string(index) : " NOT FOUND") +
                      " d=" + achieved.to_string() + " bound=" + bound.to_string() +
                      " iterations=" + std::to_string(iterations);
    if (start) out += " z=" + start->to_string();
    return out;
}

WitnessReport density_witness(const UPWord& start, const UPWord& target, std::size_t m) {
    if (m < 1 || m > 62) throw Error("prefix length m must be in [1, 62]");
    WitnessReport report;
    const FiniteWord wanted = prefix(target, m);
    report.target = wanted.to_string() + "...";
    report.bound = Dyadic::pow2_neg(m - 1);

    const std::uint64_t limit = std::uint64_t{1} << m;
    Orbit orbit(start);
    for (std::uint64_t k = 1; k <= limit; ++k) {
        const UPWord& x = orbit.advance();
        report.iterations = k;
        if (prefix(x, m) == wanted) {
            report.found = true;
            report.index = k;
            report.achieved = prefix_metric(x, target);
            return report;
        }
    }
    return report;
}

WitnessReport transitivity_witness(const UPWord& x, const UPWord& y, std::size_t eps_exp) {
    if (eps_exp < 1) throw Error("eps_exp must be at least 1");
    WitnessReport report = density_witness(x, y, eps_exp + 1);
    report.bound = Dyadic::pow2_neg(eps_exp);
    report.start = x;
    return report;
}

Report lipschitz_check(const GroupWord& w, const UPWord& x, const UPWord& y, std::uint64_t n_max) {
    Report report;
    const Dyadic d0 = prefix_metric(x, y);
    Orbit ox(x, w), oy(y, w);
    std::optional<std::uint64_t> violation;
    Dyadic worst = d0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const Dyadic dn = prefix_metric(ox.current(), oy.current());
        if (dn > d0 && !violation) {
            violation = n;
            worst = dn;
        }
        if (n < n_max) {
            ox.advance();
            oy.advance();
        }
    }
    std::string detail = "w=" + w.to_string() + " x=" + x.to_string() + " y=" + y.to_string() +
                         " d=" + d0.to_string() + " n_max=" + std::to_string(n_max);
    if (violation) detail += " violated at n=" + std::to_string(*violation) + " d_n=" + worst.to_string();
    report.add("lipschitz.nonexpansive", !violation, detail);
    return report;
}

}  // namespace b4
