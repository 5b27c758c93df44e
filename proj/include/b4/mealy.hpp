/* mealy.hpp -- deterministic letter-to-letter transducers.
 *
 * A MealyMachine is the algebra <Q, A, B, ∘, *> with total transition and
 * output tables. Its extension to finite words is
 *
 *     q ∘ λ = q,  q ∘ ua = (q ∘ u) ∘ a,
 *     q * λ = λ,  q * ua = (q * u)((q ∘ u) * a),
 *
 * and an InitialMachine (a machine plus start state) therefore induces a
 * length- and prefix-preserving map on A^* and on A^ω.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "b4/words.hpp"

namespace b4 {

using StateIndex = std::uint32_t;

/// One row of a machine description: from --input/output--> to.
struct Transition {
    std::string from;
    Letter input;
    Letter output;
    std::string to;
};

class MealyMachine {
public:
    /// Validates that every (state, input letter) pair occurs exactly once, and
    /// that the output map is surjective when the alphabets are different sets.
    MealyMachine(std::string name, Alphabet input, Alphabet output,
                 std::vector<std::string> states, const std::vector<Transition>& transitions);

    /// Table form: next[q * |A| + i] and out[q * |A| + i] for the i-th input letter.
    MealyMachine(std::string name, Alphabet input, Alphabet output,
                 std::vector<std::string> states, std::vector<StateIndex> next,
                 std::vector<Letter> out);

    const std::string& name() const { return name_; }
    const Alphabet& input() const { return input_; }
    const Alphabet& output() const { return output_; }
    const std::vector<std::string>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }

    /// Throws Error for unknown ids.
    StateIndex state_index(std::string_view id) const;
    bool has_state(std::string_view id) const { return index_.contains(std::string(id)); }
    const std::string& state_id(StateIndex q) const { return states_.at(q); }

    StateIndex next(StateIndex q, std::size_t letter) const { return next_[q * input_.size() + letter]; }
    Letter out(StateIndex q, std::size_t letter) const { return out_[q * input_.size() + letter]; }

    /// All rows, states in order and letters in alphabet order.
    std::vector<Transition> transitions() const;

    friend bool operator==(const MealyMachine& a, const MealyMachine& b) {
        return a.name_ == b.name_ && a.input_ == b.input_ && a.output_ == b.output_ &&
               a.states_ == b.states_ && a.next_ == b.next_ && a.out_ == b.out_;
    }

private:
    void validate();

    std::string name_;
    Alphabet input_;
    Alphabet output_;
    std::vector<std::string> states_;
    std::unordered_map<std::string, StateIndex> index_;
    std::vector<StateIndex> next_;
    std::vector<Letter> out_;
};

class InitialMachine {
public:
    InitialMachine(MealyMachine machine, StateIndex start);
    InitialMachine(MealyMachine machine, std::string_view start);

    const MealyMachine& machine() const { return machine_; }
    StateIndex start() const { return start_; }
    const std::string& start_id() const { return machine_.state_id(start_); }
    std::size_t state_count() const { return machine_.state_count(); }

    friend bool operator==(const InitialMachine&, const InitialMachine&) = default;

private:
    MealyMachine machine_;
    StateIndex start_;
};

/// The one-state machine a -> a over the given alphabet.
InitialMachine identity_machine(const Alphabet& alphabet);

/// (q ∘ a, q * a).
std::pair<std::string, Letter> step(const MealyMachine& m, std::string_view q, Letter a);

/// (q ∘ u, q * u).
std::pair<std::string, FiniteWord> run_finite(const MealyMachine& m, std::string_view q,
                                              const FiniteWord& u);
std::pair<StateIndex, FiniteWord> run_finite(const MealyMachine& m, StateIndex q,
                                             const FiniteWord& u);

FiniteWord transduce(const InitialMachine& m, const FiniteWord& u);

/// Exact image of an ultimately periodic word.
UPWord transduce_up(const InitialMachine& m, const UPWord& x);

/// The machine computing second(first(u)); states are the reachable pairs, named "q|q'".
InitialMachine serial_compose(const InitialMachine& first, const InitialMachine& second);

/// Minimal machine inducing the same map: reachable part, then Moore partition refinement.
/// States are named after the first member of each class in breadth-first order.
InitialMachine minimize(const InitialMachine& m);

/// Whether the induced maps on A^ω coincide (joint partition refinement).
bool equivalent(const InitialMachine& m1, const InitialMachine& m2);

/// True iff every reachable state copies its input; i.e. the induced map is the identity.
bool is_identity(const InitialMachine& m);

/// Breadth-first relabelling of the reachable part of m, serialized. Two minimal
/// machines induce the same map exactly when their keys are equal.
std::string canonical_key(const InitialMachine& m);

/// Checks |q0 * u| = |u| and q0 * u ∈ Pref(q0 * v) for every prefix u of v.
bool is_sequential_consistent(const InitialMachine& m, const FiniteWord& v);

}  // namespace b4
