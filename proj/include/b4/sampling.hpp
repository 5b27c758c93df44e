/* sampling.hpp -- seeded random words, elements and machines for sweeps and property tests. */
#pragma once

#include <cstddef>
#include <random>

#include "b4/generators.hpp"
#include "b4/mealy.hpp"
#include "b4/words.hpp"

namespace b4 {

using Rng = std::mt19937_64;

FiniteWord random_word(Rng& rng, std::size_t length, const Alphabet& alphabet = Alphabet::binary());

/// u v^ω with |u| <= max_pre and 1 <= |v| <= max_period, canonicalized.
UPWord random_upword(Rng& rng, std::size_t max_pre = 6, std::size_t max_period = 6);

/// Generator word over {p, q, α, ε} of length in [0, max_len].
GroupWord random_group_word(Rng& rng, std::size_t max_len);

/// Random binary machine with `states` states "s0", "s1", ..., started at s0.
InitialMachine random_machine(Rng& rng, std::size_t states);

/// A machine inducing the same map as m but with extra states: every state gets
/// a duplicate, and transitions are randomly redirected to either copy.
InitialMachine inflate(Rng& rng, const InitialMachine& m);

}  // namespace b4
