#include "b4/b4.hpp"

#include <set>

#include "b4/group.hpp"

namespace b4 {

namespace {

UPWord up(std::string_view text) { return UPWord::parse(text); }
FiniteWord word(std::string letters) { return FiniteWord(Alphabet::binary(), std::move(letters)); }
FiniteWord ones(std::size_t n) { return word(std::string(n, '1')); }

std::string state_after(Gen g, const FiniteWord& u) {
    return run_finite(b4_machine(), std::string(1, symbol(g)), u).first;
}

}  // namespace

const MealyMachine& b4_machine() {
    static const MealyMachine kB4("b4", Alphabet::binary(), Alphabet::binary(), {"p", "q", "a", "e"},
                                  {
                                      {"p", '0', '1', "e"},
                                      {"p", '1', '0', "e"},
                                      {"q", '0', '0', "p"},
                                      {"q", '1', '1', "a"},
                                      {"a", '0', '0', "e"},
                                      {"a", '1', '1', "q"},
                                      {"e", '0', '0', "e"},
                                      {"e", '1', '1', "e"},
                                  });
    return kB4;
}

InitialMachine b4_at(Gen state) {
    if (state == Gen::beta) throw Error("β abbreviates αq and is not a state of B4");
    return InitialMachine(b4_machine(), std::string(1, symbol(state)));
}

MorphWord::MorphWord(std::vector<Gen> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error("η is defined on non-empty words");
    for (Gen g : letters_)
        if (g != Gen::p && g != Gen::q && g != Gen::alpha)
            throw Error(std::string("η is defined over {p, q, a}; got '") + symbol(g) + "'");
}

MorphWord MorphWord::parse(std::string_view text) { return MorphWord(GroupWord::parse(text).symbols()); }

MorphWord eta(const MorphWord& w) {
    std::vector<Gen> out;
    out.reserve(w.size() * 3);
    for (Gen g : w.letters()) {
        switch (g) {
            case Gen::p: out.insert(out.end(), {Gen::p, Gen::q, Gen::p}); break;
            case Gen::q: out.push_back(Gen::alpha); break;
            default: out.push_back(Gen::q); break;
        }
    }
    return MorphWord(std::move(out));
}

MorphWord eta_power(std::size_t ell) {
    MorphWord w({Gen::p});
    for (std::size_t i = 0; i < ell; ++i) w = eta(w);
    return w;
}

Gen eta_split_letter(std::size_t ell) { return ell % 2 == 1 ? Gen::q : Gen::alpha; }

GroupWord xi() { return {Gen::p, Gen::alpha, Gen::q}; }

Report verify_eta_recurrence(std::size_t ell) {
    Report report;
    const std::string tag = "l=" + std::to_string(ell);
    if (ell == 0) {
        report.add("eta.base", eta_power(0).to_string() == "p", tag);
        return report;
    }
    const auto whole = eta_power(ell).letters();
    const auto half = eta_power(ell - 1).letters();
    std::vector<Gen> split = half;
    split.push_back(eta_split_letter(ell));
    split.insert(split.end(), half.begin(), half.end());
    report.add("eta.recurrence", whole == split, tag);
    const std::size_t expected = (std::size_t{1} << (ell + 1)) - 1;
    report.add("eta.length", whole.size() == expected,
               tag + " length=" + std::to_string(whole.size()) + " expected=" + std::to_string(expected));
    return report;
}

Report verify_swap_identities(std::size_t ell) {
    Report report;
    const Gen delta = eta_split_letter(ell + 1);
    const GroupWord eta_l = eta_power(ell).as_group_word();
    const GroupWord delta_eta = GroupWord{delta} + eta_l;
    const FiniteWord head = ones(ell);
    const UPWord one_zero = concat(head, up("0(1)"));
    const UPWord two_zeros = concat(head, up("00(1)"));
    const std::string tag = std::string("l=") + std::to_string(ell) + " delta=" + symbol(delta);

    const UPWord lhs1 = apply(delta_eta, one_zero), rhs1 = apply(eta_l, two_zeros);
    report.add("swap.single_zero", lhs1 == rhs1, tag + " " + lhs1.to_string() + " vs " + rhs1.to_string());
    const UPWord lhs2 = apply(delta_eta, two_zeros), rhs2 = apply(eta_l, one_zero);
    report.add("swap.double_zero", lhs2 == rhs2, tag + " " + lhs2.to_string() + " vs " + rhs2.to_string());

    const std::string after00 = state_after(delta, head + word("00"));
    const std::string after01 = state_after(delta, head + word("01"));
    report.add("swap.reset_00", after00 == "e", tag + " state=" + after00);
    report.add("swap.reset_01", after01 == "e", tag + " state=" + after01);
    return report;
}

Report verify_eta_cover(std::size_t ell) {
    Report report;
    const std::string tag = "l=" + std::to_string(ell);
    const auto letters = eta_power(ell).letters();
    const GroupWord eta_l(letters);

    const UPWord image_ones = apply(eta_l, up("(1)"));
    const UPWord marker = concat(ones(ell), up("0(1)"));
    report.add("eta.ones_image", image_ones == marker, tag + " got " + image_ones.to_string());
    const UPWord back = apply(eta_l, marker);
    report.add("eta.marker_image", back == up("(1)"), tag + " got " + back.to_string());

    // Prefix maps are applied one letter at a time, carrying the current word.
    const std::size_t width = ell + 1;
    const std::size_t states = std::size_t{1} << width;
    auto sweep = [&](FiniteWord u, const std::string& name) {
        std::set<std::string> seen{u.letters()};
        bool resets = true;
        std::string first_bad;
        for (std::size_t j = 0; j < letters.size(); ++j) {
            const InitialMachine next = b4_at(letters[j]);
            const auto [end, out] = run_finite(next.machine(), next.start(), u);
            if (next.machine().state_id(end) != "e" && resets) {
                resets = false;
                first_bad = " first failure at j=" + std::to_string(j);
            }
            u = out;
            seen.insert(u.letters());
        }
        report.add("eta.cover_" + name, seen.size() == states,
                   tag + " distinct=" + std::to_string(seen.size()) + " of " + std::to_string(states));
        report.add("eta.reset_" + name, resets, tag + first_bad);
    };
    sweep(ones(width), "ones");
    sweep(ones(ell) + word("0"), "marker");
    return report;
}

Report verify_basis_identities() {
    Report report;
    auto image = [&](Gen g, std::string_view in, std::string_view expected) {
        const UPWord got = transduce_up(b4_at(g), up(in));
        report.add(std::string("basis.") + symbol(g) + "*" + std::string(in), got == up(expected),
                   "got " + got.to_string() + " expected " + up(expected).to_string());
    };
    image(Gen::p, "(1)", "0(1)");
    image(Gen::p, "0(1)", "(1)");
    image(Gen::q, "0(1)", "00(1)");
    image(Gen::q, "001(1)", "0(1)");
    image(Gen::p, "00(1)", "10(1)");
    image(Gen::p, "10(1)", "00(1)");

    auto reset = [&](Gen g, std::string u, std::string_view expected) {
        const std::string got = state_after(g, word(u));
        report.add(std::string("basis.") + symbol(g) + "o" + u, got == expected,
                   "state=" + got + " expected=" + std::string(expected));
    };
    reset(Gen::p, "1", "e");
    reset(Gen::p, "0", "e");
    reset(Gen::q, "0", "p");
    reset(Gen::p, "11", "e");
    reset(Gen::q, "01", "e");
    reset(Gen::p, "00", "e");
    reset(Gen::p, "10", "e");
    reset(Gen::q, "00", "e");
    reset(Gen::p, "01", "e");
    reset(Gen::eps, "0", "e");
    reset(Gen::eps, "1", "e");

    const GroupWord pqp{Gen::p, Gen::q, Gen::p};
    const UPWord a = apply(pqp, up("(1)"));
    report.add("basis.ones_pqp", a == up("10(1)"), "got " + a.to_string());
    const UPWord b = apply(pqp, up("10(1)"));
    report.add("basis.101_pqp", b == up("(1)"), "got " + b.to_string());
    return report;
}

Report verify_walker_parity(std::size_t max_ell) {
    Report report;
    const GroupWord alpha{Gen::alpha}, q{Gen::q};
    const GroupWord alpha_q{Gen::alpha, Gen::q}, q_alpha{Gen::q, Gen::alpha};
    const GroupWord alpha2{Gen::alpha, Gen::alpha}, q2{Gen::q, Gen::q};
    for (std::size_t ell = 0; ell <= max_ell; ++ell) {
        bool ok = true;
        for (std::string_view x1 : {"0", "1"})
            for (std::string_view tail : {"(1)", "(0)", "1(01)", "01(110)"}) {
                const FiniteWord head = ones(ell) + word("0");
                const UPWord x = concat(head + word(std::string(x1)), up(tail));
                const std::string flipped(1, complement_letter(Alphabet::binary(), x1[0]));
                const UPWord x_flip = concat(head + word(flipped), up(tail));
                const bool odd = ell % 2 == 1;
                ok &= apply(alpha, x) == (odd ? x_flip : x);
                ok &= apply(q, x) == (odd ? x : x_flip);
                ok &= apply(alpha_q, x) == x_flip;
                ok &= apply(q_alpha, x) == x_flip;
                ok &= apply(alpha2, x) == x && apply(q2, x) == x;
            }
        report.add("walker.parity", ok, "l=" + std::to_string(ell));
    }
    // On 1^ω neither walker ever sees a 0.
    report.add("walker.ones_fixed", apply(alpha, up("(1)")) == up("(1)") && apply(q, up("(1)")) == up("(1)"));
    return report;
}

}  // namespace b4
