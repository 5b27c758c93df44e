/* b4.hpp -- the four-state binary machine B4 and the words built from it.
 *
 *     state | on 1        | on 0
 *     ------+-------------+------------
 *       p   | 0, go to ε  | 1, go to ε
 *       q   | 1, go to α  | 0, go to p
 *       α   | 1, go to q  | 0, go to ε
 *       ε   | 1, stay     | 0, stay
 *
 * p flips the first letter. α and q walk the leading block of 1s in
 * alternation; at the first 0 the walker α passes the rest unchanged while
 * q hands over to p, which flips the letter after that 0.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "b4/generators.hpp"
#include "b4/mealy.hpp"
#include "b4/report.hpp"

namespace b4 {

/// The machine with states p, q, a (α), e (ε) over {0,1}.
const MealyMachine& b4_machine();

/// B4 started in the given state. Throws Error for β, which is not a state.
InitialMachine b4_at(Gen state);

/// Non-empty word over {p, q, α}: the domain of the morphism η.
class MorphWord {
public:
    explicit MorphWord(std::vector<Gen> letters);
    static MorphWord parse(std::string_view text);

    const std::vector<Gen>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    GroupWord as_group_word() const { return GroupWord(letters_); }
    std::string to_string() const { return as_group_word().to_string(); }

    friend bool operator==(const MorphWord&, const MorphWord&) = default;

private:
    std::vector<Gen> letters_;
};

/// Letterwise p -> pqp, q -> α, α -> q.
MorphWord eta(const MorphWord& w);

/// η^ℓ(p); its length is 2^(ℓ+1) - 1.
MorphWord eta_power(std::size_t ell);

/// The middle letter δ in η^ℓ(p) = η^(ℓ-1)(p) δ η^(ℓ-1)(p), ℓ >= 1: q for odd ℓ, α for even ℓ.
Gen eta_split_letter(std::size_t ell);

/// ξ as the generator word p α q.
GroupWord xi();

/// The η recursion for one ℓ >= 1: the split with eta_split_letter and the length 2^(ℓ+1) - 1,
/// with η^ℓ(p) computed by direct substitution.
Report verify_eta_recurrence(std::size_t ell);

/// For δ = eta_split_letter(ℓ + 1): δ̄ followed by η̄^ℓ swaps the images of 1^ℓ01^ω and
/// 1^ℓ001^ω, and δ ∘ 1^ℓ00 = ε = δ ∘ 1^ℓ01.
Report verify_swap_identities(std::size_t ell);

/// For one ℓ: 1^ω η̄^ℓ = 1^ℓ01^ω and back; the prefix maps η̄^ℓ_j, j = 0..2^(ℓ+1)-1,
/// carry 1^(ℓ+1) and 1^ℓ0 through all of {0,1}^(ℓ+1); and each next letter of η^ℓ(p)
/// lands in ε on the current word.
Report verify_eta_cover(std::size_t ell);

/// The hand-derived single-step identities for p and q used in the η argument
/// (p * 1^ω = 01^ω, q ∘ 01 = p ∘ 1 = ε, ...).
Report verify_basis_identities();

/// The parity behaviour of ᾱ and q̄ on 1^ℓ 0 x1 x2 ... for ℓ = 0..max_ell.
Report verify_walker_parity(std::size_t max_ell);

}  // namespace b4
