#include "b4/group.hpp"

#include <sstream>
#include <unordered_set>

namespace b4 {

namespace {

// β is shorthand for αq; everything else is a state of B4.
std::vector<Gen> expand(const GroupWord& w) {
    std::vector<Gen> out;
    out.reserve(w.size());
    for (Gen g : w.symbols()) {
        if (g == Gen::beta) {
            out.push_back(Gen::alpha);
            out.push_back(Gen::q);
        } else {
            out.push_back(g);
        }
    }
    return out;
}

const InitialMachine& b4_machine_at(Gen g) {
    static const std::array<InitialMachine, 4> kAt{b4_at(Gen::p), b4_at(Gen::q), b4_at(Gen::alpha),
                                                   b4_at(Gen::eps)};
    switch (g) {
        case Gen::p: return kAt[0];
        case Gen::q: return kAt[1];
        case Gen::alpha: return kAt[2];
        case Gen::eps: return kAt[3];
        default: throw Error("β is not a state of B4");
    }
}

// Klein letters as bit masks so that the product is XOR: α = 01, q = 10, β = 11.
int klein_mask(Gen g) {
    switch (g) {
        case Gen::alpha: return 1;
        case Gen::q: return 2;
        case Gen::beta: return 3;
        default: return 0;
    }
}

Gen klein_letter(int mask) {
    switch (mask) {
        case 1: return Gen::alpha;
        case 2: return Gen::q;
        default: return Gen::beta;
    }
}

}  // namespace

UPWord apply(const GroupWord& w, const UPWord& x) {
    UPWord y = x;
    for (Gen g : expand(w)) y = transduce_up(b4_machine_at(g), y);
    return y;
}

FiniteWord apply(const GroupWord& w, const FiniteWord& u) {
    FiniteWord y = u;
    for (Gen g : expand(w)) y = transduce(b4_machine_at(g), y);
    return y;
}

InitialMachine realize(const GroupWord& w) {
    const auto symbols = expand(w);
    if (symbols.empty()) return identity_machine(Alphabet::binary());
    InitialMachine acc = b4_machine_at(symbols.front());
    for (std::size_t i = 1; i < symbols.size(); ++i) acc = serial_compose(acc, b4_machine_at(symbols[i]));
    return acc;
}

InitialMachine realize_minimal(const GroupWord& w) {
    const auto symbols = expand(w);
    if (symbols.empty()) return identity_machine(Alphabet::binary());
    InitialMachine acc = minimize(b4_machine_at(symbols.front()));
    for (std::size_t i = 1; i < symbols.size(); ++i)
        acc = minimize(serial_compose(acc, b4_machine_at(symbols[i])));
    return acc;
}

bool element_equal(const GroupWord& w1, const GroupWord& w2) {
    return equivalent(realize_minimal(w1), realize_minimal(w2));
}

Order order(const GroupWord& w, std::uint64_t cap) {
    if (cap == 0) throw Error("order cap must be at least 1");

    // The orbit length of 1^ω divides the order. If 1^ω has not come back
    // within the cap, neither has the element.
    const UPWord probe = UPWord::parse("(1)");
    std::uint64_t period = 0;
    UPWord x = probe;
    for (std::uint64_t n = 1; n <= cap; ++n) {
        x = apply(w, x);
        if (x == probe) {
            period = n;
            break;
        }
    }
    if (period == 0) return Order{};

    const InitialMachine m = realize_minimal(w);
    InitialMachine power = identity_machine(Alphabet::binary());
    for (std::uint64_t n = 1; n <= cap; ++n) {
        power = minimize(serial_compose(power, m));
        if (n % period == 0 && is_identity(power)) return Order{n};
    }
    return Order{};
}

GroupWord conjugate(const GroupWord& w, const GroupWord& h) { return h + w + h.inverse(); }

NormalForm::NormalForm(GroupWord reduced) : word_(std::move(reduced)) {
    for (std::size_t i = 0; i < word_.size(); ++i) {
        const Gen g = word_[i];
        if (g == Gen::eps) throw Error("normal form may not contain ε");
        if (i == 0) continue;
        const Gen prev = word_[i - 1];
        if ((g == Gen::p) == (prev == Gen::p))
            throw Error("normal form must alternate p with letters from {q, a, b}: " + word_.to_string());
    }
}

bool NormalForm::leading_p() const { return !word_.empty() && word_[0] == Gen::p; }

bool NormalForm::trailing_p() const {
    return word_.size() > 1 && word_[word_.size() - 1] == Gen::p;
}

GroupWord NormalForm::core() const {
    const auto& s = word_.symbols();
    const std::size_t begin = leading_p() ? 1 : 0;
    const std::size_t end = trailing_p() ? s.size() - 1 : s.size();
    if (begin >= end) return {};
    return GroupWord(std::vector<Gen>(s.begin() + static_cast<std::ptrdiff_t>(begin),
                                      s.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::string NormalForm::to_string() const { return is_identity() ? "I" : word_.to_string(); }

NormalForm normal_form(const GroupWord& w) {
    // A stack that always alternates p with a Klein letter; each incoming symbol
    // either cancels against the top, merges with it, or is pushed.
    std::vector<Gen> stack;
    for (Gen g : w.symbols()) {
        if (g == Gen::eps) continue;
        if (g == Gen::p) {
            if (!stack.empty() && stack.back() == Gen::p)
                stack.pop_back();
            else
                stack.push_back(g);
            continue;
        }
        if (!stack.empty() && stack.back() != Gen::p) {
            const int merged = klein_mask(stack.back()) ^ klein_mask(g);
            stack.pop_back();
            if (merged != 0) stack.push_back(klein_letter(merged));
        } else {
            stack.push_back(g);
        }
    }
    return NormalForm(GroupWord(std::move(stack)));
}

KleinTable klein_table() {
    KleinTable t{{GroupWord{}, GroupWord{Gen::alpha}, GroupWord{Gen::q}, GroupWord{Gen::alpha, Gen::q}}, {}, {}};
    static constexpr std::array<const char*, 4> kLabel{"I", "a", "q", "aq"};

    std::array<InitialMachine, 4> machines{realize_minimal(t.elements[0]), realize_minimal(t.elements[1]),
                                           realize_minimal(t.elements[2]), realize_minimal(t.elements[3])};
    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) distinct &= !equivalent(machines[i], machines[j]);
    t.report.add("klein.distinct", distinct, "4 pairwise distinct elements");

    bool closed = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const InitialMachine prod = realize_minimal(t.elements[i] + t.elements[j]);
            int match = -1, matches = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (equivalent(prod, machines[k])) {
                    match = static_cast<int>(k);
                    ++matches;
                }
            closed &= matches == 1;
            t.product[i][j] = match;
        }
    t.report.add("klein.closed", closed, "every product is exactly one of the four");

    bool involutions = true;
    for (std::size_t i = 1; i < 4; ++i) involutions &= t.product[i][i] == 0;
    t.report.add("klein.involutions", involutions, "a^2 = q^2 = (aq)^2 = I");
    t.report.add("klein.commute", element_equal({Gen::alpha, Gen::q}, {Gen::q, Gen::alpha}), "aq = qa");

    bool symmetric = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) symmetric &= t.product[i][j] == t.product[j][i];
    // A group of order 4 is cyclic iff it has an element of order 4; here every
    // non-identity element squares to I.
    t.report.add("klein.non_cyclic", closed && symmetric && involutions, "abelian, exponent 2");

    std::ostringstream table;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j)
            table << (j ? " " : "") << (t.product[i][j] >= 0 ? kLabel[t.product[i][j]] : "?");
        table << (i < 3 ? "|" : "");
    }
    t.report.add("klein.table", closed, table.str());
    return t;
}

std::string KleinTable::format() const {
    static constexpr std::array<const char*, 4> kLabel{"I", "a", "q", "aq"};
    std::ostringstream out;
    out << "*";
    for (auto* l : kLabel) out << '\t' << l;
    out << '\n';
    for (std::size_t i = 0; i < 4; ++i) {
        out << kLabel[i];
        for (std::size_t j = 0; j < 4; ++j) out << '\t' << (product[i][j] >= 0 ? kLabel[product[i][j]] : "?");
        out << '\n';
    }
    return out.str();
}

std::vector<std::size_t> enumerate_elements(std::size_t max_len) {
    static constexpr std::array<Gen, 4> kGens{Gen::p, Gen::q, Gen::alpha, Gen::eps};
    std::vector<std::size_t> counts{1};
    std::unordered_set<std::string> seen;
    std::vector<InitialMachine> frontier{identity_machine(Alphabet::binary())};
    seen.insert(canonical_key(frontier.front()));

    // Elements of length <= L are the elements of length <= L-1 extended by one
    // generator; only the elements first reached at L-1 need extending.
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<InitialMachine> next;
        for (const auto& m : frontier)
            for (Gen g : kGens) {
                InitialMachine e = minimize(serial_compose(m, b4_machine_at(g)));
                if (seen.insert(canonical_key(e)).second) next.push_back(std::move(e));
            }
        frontier = std::move(next);
        counts.push_back(seen.size());
    }
    return counts;
}

}  // namespace b4
