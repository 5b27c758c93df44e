#include "b4/mealy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace b4 {

namespace {

// Output alphabet for a derived machine whose output row set is `outs`. When
// the input and output alphabets differ, the derived map may no longer hit
// every output letter; the alphabet is narrowed to the image so the
// surjectivity requirement keeps holding.
Alphabet fitted_output(const Alphabet& input, const Alphabet& output, const std::vector<Letter>& outs) {
    if (input.same_letters(output)) return output;
    std::string image;
    for (Letter b : output.letters())
        if (std::find(outs.begin(), outs.end(), b) != outs.end()) image += b;
    if (image.empty()) return output;
    return Alphabet(std::move(image));
}

// Moore refinement over a table machine given as (next, out) with `width`
// letters per state. Returns the class index of every state; classes are
// numbered by first occurrence in state order.
std::vector<StateIndex> refine(std::size_t states, std::size_t width,
                               const std::vector<StateIndex>& next, const std::vector<Letter>& out) {
    std::vector<StateIndex> block(states);
    std::size_t count = 0;
    {
        std::map<std::vector<Letter>, StateIndex> rows;
        for (std::size_t q = 0; q < states; ++q) {
            std::vector<Letter> row(out.begin() + q * width, out.begin() + (q + 1) * width);
            auto [it, fresh] = rows.try_emplace(std::move(row), static_cast<StateIndex>(rows.size()));
            block[q] = it->second;
        }
        count = rows.size();
    }
    for (;;) {
        std::map<std::vector<StateIndex>, StateIndex> signatures;
        std::vector<StateIndex> refined(states);
        for (std::size_t q = 0; q < states; ++q) {
            std::vector<StateIndex> sig;
            sig.reserve(width + 1);
            sig.push_back(block[q]);
            for (std::size_t a = 0; a < width; ++a) sig.push_back(block[next[q * width + a]]);
            auto [it, fresh] = signatures.try_emplace(std::move(sig), static_cast<StateIndex>(signatures.size()));
            refined[q] = it->second;
        }
        block = std::move(refined);
        if (signatures.size() == count) return block;
        count = signatures.size();
    }
}

// States reachable from start, in breadth-first order over the alphabet order.
std::vector<StateIndex> reachable(const MealyMachine& m, StateIndex start) {
    std::vector<StateIndex> order{start};
    std::vector<bool> seen(m.state_count(), false);
    seen[start] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t a = 0; a < m.input().size(); ++a) {
            const StateIndex t = m.next(order[i], a);
            if (!seen[t]) {
                seen[t] = true;
                order.push_back(t);
            }
        }
    return order;
}

}  // namespace

MealyMachine::MealyMachine(std::string name, Alphabet input, Alphabet output,
                           std::vector<std::string> states, const std::vector<Transition>& transitions)
    : name_(std::move(name)), input_(std::move(input)), output_(std::move(output)), states_(std::move(states)) {
    for (std::size_t q = 0; q < states_.size(); ++q)
        if (!index_.emplace(states_[q], static_cast<StateIndex>(q)).second)
            throw Error("duplicate state id '" + states_[q] + "'");

    const std::size_t width = input_.size();
    next_.assign(states_.size() * width, 0);
    out_.assign(states_.size() * width, '\0');
    std::vector<bool> present(states_.size() * width, false);
    for (const auto& t : transitions) {
        const StateIndex q = state_index(t.from);
        const std::size_t a = input_.index_of(t.input);
        if (!output_.contains(t.output))
            throw Error(std::string("output letter '") + t.output + "' not in output alphabet");
        const std::size_t slot = q * width + a;
        if (present[slot])
            throw Error("duplicate transition for (" + t.from + ", " + std::string(1, t.input) + ")");
        present[slot] = true;
        next_[slot] = state_index(t.to);
        out_[slot] = t.output;
    }
    for (std::size_t slot = 0; slot < present.size(); ++slot)
        if (!present[slot])
            throw Error("missing transition for (" + states_[slot / width] + ", " +
                        std::string(1, input_.at(slot % width)) + ")");
    validate();
}

MealyMachine::MealyMachine(std::string name, Alphabet input, Alphabet output,
                           std::vector<std::string> states, std::vector<StateIndex> next,
                           std::vector<Letter> out)
    : name_(std::move(name)), input_(std::move(input)), output_(std::move(output)),
      states_(std::move(states)), next_(std::move(next)), out_(std::move(out)) {
    for (std::size_t q = 0; q < states_.size(); ++q)
        if (!index_.emplace(states_[q], static_cast<StateIndex>(q)).second)
            throw Error("duplicate state id '" + states_[q] + "'");
    const std::size_t cells = states_.size() * input_.size();
    if (next_.size() != cells || out_.size() != cells) throw Error("transition table is not total");
    for (StateIndex t : next_)
        if (t >= states_.size()) throw Error("transition target out of range");
    for (Letter b : out_)
        if (!output_.contains(b)) throw Error(std::string("output letter '") + b + "' not in output alphabet");
    validate();
}

void MealyMachine::validate() {
    if (states_.empty()) throw Error("machine needs at least one state");
    for (const auto& id : states_)
        if (id.empty() || std::any_of(id.begin(), id.end(), [](char c) { return static_cast<unsigned char>(c) <= ' '; }))
            throw Error("state ids must be non-empty and contain no whitespace");
    if (!input_.same_letters(output_))
        for (Letter b : output_.letters())
            if (std::find(out_.begin(), out_.end(), b) == out_.end())
                throw Error(std::string("output map is not surjective: '") + b + "' never produced");
}

StateIndex MealyMachine::state_index(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) throw Error("unknown state '" + std::string(id) + "'");
    return it->second;
}

std::vector<Transition> MealyMachine::transitions() const {
    std::vector<Transition> rows;
    rows.reserve(next_.size());
    for (StateIndex q = 0; q < states_.size(); ++q)
        for (std::size_t a = 0; a < input_.size(); ++a)
            rows.push_back({states_[q], input_.at(a), out(q, a), states_[next(q, a)]});
    return rows;
}

InitialMachine::InitialMachine(MealyMachine machine, StateIndex start)
    : machine_(std::move(machine)), start_(start) {
    if (start_ >= machine_.state_count()) throw Error("start state out of range");
}

InitialMachine::InitialMachine(MealyMachine machine, std::string_view start)
    : machine_(std::move(machine)), start_(machine_.state_index(start)) {}

InitialMachine identity_machine(const Alphabet& alphabet) {
    std::vector<Letter> out(alphabet.letters().begin(), alphabet.letters().end());
    return InitialMachine(MealyMachine("identity", alphabet, alphabet, {"I"},
                                       std::vector<StateIndex>(alphabet.size(), 0), std::move(out)),
                          StateIndex{0});
}

std::pair<std::string, Letter> step(const MealyMachine& m, std::string_view q, Letter a) {
    const StateIndex s = m.state_index(q);
    const std::size_t i = m.input().index_of(a);
    return {m.state_id(m.next(s, i)), m.out(s, i)};
}

std::pair<StateIndex, FiniteWord> run_finite(const MealyMachine& m, StateIndex q, const FiniteWord& u) {
    if (!u.alphabet().same_letters(m.input()) && !u.alphabet().subset_of(m.input()))
        throw Error("word alphabet does not fit the machine input");
    std::string out(u.size(), '\0');
    for (std::size_t i = 0; i < u.size(); ++i) {
        const std::size_t a = m.input().index_of(u[i]);
        out[i] = m.out(q, a);
        q = m.next(q, a);
    }
    return {q, FiniteWord(m.output(), std::move(out))};
}

std::pair<std::string, FiniteWord> run_finite(const MealyMachine& m, std::string_view q, const FiniteWord& u) {
    auto [end, out] = run_finite(m, m.state_index(q), u);
    return {m.state_id(end), std::move(out)};
}

FiniteWord transduce(const InitialMachine& m, const FiniteWord& u) {
    return run_finite(m.machine(), m.start(), u).second;
}

UPWord transduce_up(const InitialMachine& m, const UPWord& x) {
    const MealyMachine& mm = m.machine();
    auto [q, head] = run_finite(mm, m.start(), x.preperiod());

    // Unroll the period from the reached state. Every pass begins at phase 0
    // of the period, so the cycle search over (state, phase) pairs reduces to
    // the state at each pass boundary; it repeats within |Q| + 1 passes.
    std::vector<StateIndex> pass_start;
    std::vector<std::string> pass_out;
    for (;;) {
        const auto seen = std::find(pass_start.begin(), pass_start.end(), q);
        if (seen != pass_start.end()) {
            const std::size_t loop = static_cast<std::size_t>(seen - pass_start.begin());
            std::string pre = head.letters();
            std::string per;
            for (std::size_t i = 0; i < loop; ++i) pre += pass_out[i];
            for (std::size_t i = loop; i < pass_out.size(); ++i) per += pass_out[i];
            return UPWord(FiniteWord(mm.output(), std::move(pre)), FiniteWord(mm.output(), std::move(per)));
        }
        pass_start.push_back(q);
        auto [after, out] = run_finite(mm, q, x.period());
        pass_out.push_back(out.letters());
        q = after;
    }
}

InitialMachine serial_compose(const InitialMachine& first, const InitialMachine& second) {
    const MealyMachine& m1 = first.machine();
    const MealyMachine& m2 = second.machine();
    if (!m1.output().subset_of(m2.input()))
        throw Error("serial composition needs the first output alphabet inside the second input alphabet");

    const std::size_t width = m1.input().size();
    // Translate first-machine output letters to second-machine letter indices once.
    std::vector<std::size_t> feed(m1.state_count() * width);
    for (StateIndex q = 0; q < m1.state_count(); ++q)
        for (std::size_t a = 0; a < width; ++a) feed[q * width + a] = m2.input().index_of(m1.out(q, a));

    std::unordered_map<std::uint64_t, StateIndex> index;
    std::vector<std::pair<StateIndex, StateIndex>> pairs;
    auto intern = [&](StateIndex q1, StateIndex q2) {
        const std::uint64_t key = (std::uint64_t{q1} << 32) | q2;
        auto [it, fresh] = index.try_emplace(key, static_cast<StateIndex>(pairs.size()));
        if (fresh) pairs.emplace_back(q1, q2);
        return it->second;
    };
    intern(first.start(), second.start());

    std::vector<StateIndex> next;
    std::vector<Letter> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [q1, q2] = pairs[i];
        for (std::size_t a = 0; a < width; ++a) {
            const std::size_t b = feed[q1 * width + a];
            const StateIndex t = intern(m1.next(q1, a), m2.next(q2, b));
            next.push_back(t);
            out.push_back(m2.out(q2, b));
        }
    }

    std::vector<std::string> ids;
    ids.reserve(pairs.size());
    for (const auto& [q1, q2] : pairs) ids.push_back(m1.state_id(q1) + "|" + m2.state_id(q2));
    Alphabet output = fitted_output(m1.input(), m2.output(), out);
    return InitialMachine(MealyMachine(m1.name() + "*" + m2.name(), m1.input(), std::move(output),
                                       std::move(ids), std::move(next), std::move(out)),
                          StateIndex{0});
}

InitialMachine minimize(const InitialMachine& m) {
    const MealyMachine& mm = m.machine();
    const std::size_t width = mm.input().size();
    const std::vector<StateIndex> order = reachable(mm, m.start());

    std::vector<StateIndex> local(mm.state_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<StateIndex>(i);
    std::vector<StateIndex> next(order.size() * width);
    std::vector<Letter> out(order.size() * width);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t a = 0; a < width; ++a) {
            next[i * width + a] = local[mm.next(order[i], a)];
            out[i * width + a] = mm.out(order[i], a);
        }

    // Classes are numbered by first occurrence, so class 0 contains the start
    // and the representative of each class is its earliest breadth-first member.
    const std::vector<StateIndex> block = refine(order.size(), width, next, out);
    std::size_t classes = 0;
    for (StateIndex b : block) classes = std::max<std::size_t>(classes, b + 1);
    std::vector<std::optional<std::size_t>> rep(classes);
    for (std::size_t i = 0; i < order.size(); ++i)
        if (!rep[block[i]]) rep[block[i]] = i;

    std::vector<std::string> ids;
    std::vector<StateIndex> mnext;
    std::vector<Letter> mout;
    for (std::size_t c = 0; c < classes; ++c) {
        const std::size_t r = *rep[c];
        ids.push_back(mm.state_id(order[r]));
        for (std::size_t a = 0; a < width; ++a) {
            mnext.push_back(block[next[r * width + a]]);
            mout.push_back(out[r * width + a]);
        }
    }
    Alphabet output = fitted_output(mm.input(), mm.output(), mout);
    return InitialMachine(MealyMachine(mm.name(), mm.input(), std::move(output), std::move(ids),
                                       std::move(mnext), std::move(mout)),
                          StateIndex{0});
}

bool equivalent(const InitialMachine& m1, const InitialMachine& m2) {
    const MealyMachine& a = m1.machine();
    const MealyMachine& b = m2.machine();
    if (!a.input().same_letters(b.input())) throw Error("equivalence needs equal input alphabets");

    const std::size_t width = a.input().size();
    const std::size_t offset = a.state_count();
    std::vector<StateIndex> next;
    std::vector<Letter> out;
    next.reserve((a.state_count() + b.state_count()) * width);
    for (StateIndex q = 0; q < a.state_count(); ++q)
        for (std::size_t i = 0; i < width; ++i) {
            next.push_back(a.next(q, i));
            out.push_back(a.out(q, i));
        }
    for (StateIndex q = 0; q < b.state_count(); ++q)
        for (std::size_t i = 0; i < width; ++i) {
            const std::size_t j = b.input().index_of(a.input().at(i));
            next.push_back(static_cast<StateIndex>(offset + b.next(q, j)));
            out.push_back(b.out(q, j));
        }
    const auto block = refine(offset + b.state_count(), width, next, out);
    return block[m1.start()] == block[offset + m2.start()];
}

bool is_identity(const InitialMachine& m) {
    const MealyMachine& mm = m.machine();
    for (StateIndex q : reachable(mm, m.start()))
        for (std::size_t a = 0; a < mm.input().size(); ++a)
            if (mm.out(q, a) != mm.input().at(a)) return false;
    return true;
}

std::string canonical_key(const InitialMachine& m) {
    const MealyMachine& mm = m.machine();
    const std::vector<StateIndex> order = reachable(mm, m.start());
    std::vector<StateIndex> local(mm.state_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<StateIndex>(i);

    std::string key(mm.input().letters());
    key += '/';
    for (StateIndex q : order) {
        for (std::size_t a = 0; a < mm.input().size(); ++a) {
            key += mm.out(q, a);
            key += std::to_string(local[mm.next(q, a)]);
            key += ',';
        }
        key += ';';
    }
    return key;
}

bool is_sequential_consistent(const InitialMachine& m, const FiniteWord& v) {
    const FiniteWord full = transduce(m, v);
    if (full.size() != v.size()) return false;
    for (std::size_t n = 0; n <= v.size(); ++n) {
        const FiniteWord part = transduce(m, v.prefix(n));
        if (part.size() != n || !part.is_prefix_of(full)) return false;
    }
    return true;
}

}  // namespace b4
