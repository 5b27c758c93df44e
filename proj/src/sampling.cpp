#include "b4/sampling.hpp"

namespace b4 {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

FiniteWord random_word(Rng& rng, std::size_t length, const Alphabet& alphabet) {
    std::string letters(length, '\0');
    for (auto& c : letters) c = alphabet.at(uniform(rng, 0, alphabet.size() - 1));
    return FiniteWord(alphabet, std::move(letters));
}

UPWord random_upword(Rng& rng, std::size_t max_pre, std::size_t max_period) {
    const FiniteWord u = random_word(rng, uniform(rng, 0, max_pre));
    const FiniteWord v = random_word(rng, uniform(rng, 1, max_period));
    return UPWord(u, v);
}

GroupWord random_group_word(Rng& rng, std::size_t max_len) {
    static constexpr Gen kGens[] = {Gen::p, Gen::q, Gen::alpha, Gen::eps};
    std::vector<Gen> symbols(uniform(rng, 0, max_len));
    for (auto& g : symbols) g = kGens[uniform(rng, 0, 3)];
    return GroupWord(std::move(symbols));
}

InitialMachine random_machine(Rng& rng, std::size_t states) {
    const Alphabet& bin = Alphabet::binary();
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < states; ++i) ids.push_back("s" + std::to_string(i));
    std::vector<StateIndex> next(states * 2);
    std::vector<Letter> out(states * 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] = static_cast<StateIndex>(uniform(rng, 0, states - 1));
        out[i] = bin.at(uniform(rng, 0, 1));
    }
    return InitialMachine(MealyMachine("random", bin, bin, std::move(ids), std::move(next), std::move(out)),
                          StateIndex{0});
}

InitialMachine inflate(Rng& rng, const InitialMachine& m) {
    const MealyMachine& mm = m.machine();
    const std::size_t n = mm.state_count();
    const std::size_t width = mm.input().size();
    std::vector<std::string> ids = mm.states();
    for (std::size_t q = 0; q < n; ++q) ids.push_back(mm.state_id(static_cast<StateIndex>(q)) + "'");
    std::vector<StateIndex> next(2 * n * width);
    std::vector<Letter> out(2 * n * width);
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t a = 0; a < width; ++a) {
                const std::size_t slot = (copy * n + q) * width + a;
                next[slot] = static_cast<StateIndex>(mm.next(static_cast<StateIndex>(q), a) + n * uniform(rng, 0, 1));
                out[slot] = mm.out(static_cast<StateIndex>(q), a);
            }
    return InitialMachine(MealyMachine(mm.name(), mm.input(), mm.output(), std::move(ids), std::move(next),
                                       std::move(out)),
                          static_cast<StateIndex>(m.start() + n * uniform(rng, 0, 1)));
}

}  // namespace b4
