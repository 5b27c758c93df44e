/* group.hpp -- elements of the group generated by the state maps of B4.
 *
 * Elements are generator words. Equality of elements is decided on the
 * minimal realizing machines, never on the words themselves.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b4/b4.hpp"
#include "b4/generators.hpp"
#include "b4/mealy.hpp"
#include "b4/report.hpp"
#include "b4/words.hpp"

namespace b4 {

/// x s̄1 s̄2 ... s̄k, one B4 transduction per symbol (β as α then q).
UPWord apply(const GroupWord& w, const UPWord& x);
FiniteWord apply(const GroupWord& w, const FiniteWord& u);

/// Left fold of serial_compose over the B4 machines started at each symbol.
/// The empty word gives the one-state identity machine.
InitialMachine realize(const GroupWord& w);
/// Same map as realize(w), minimized after every composition step.
InitialMachine realize_minimal(const GroupWord& w);

bool element_equal(const GroupWord& w1, const GroupWord& w2);

/// Result of an order computation: the order, or nothing when it exceeds the cap.
struct Order {
    std::optional<std::uint64_t> value;
    bool exceeds_cap() const { return !value.has_value(); }
    std::string to_string() const { return value ? std::to_string(*value) : "EXCEEDS_CAP"; }
};

/// Smallest n in [1, cap] with w^n the identity. Throws Error when cap is 0.
Order order(const GroupWord& w, std::uint64_t cap = 4096);

/// h w h⁻¹.
GroupWord conjugate(const GroupWord& w, const GroupWord& h);

/// s a1 p a2 p ... p an σ with ai ∈ {q, α, β} and s, σ ∈ {λ, p}.
class NormalForm {
public:
    explicit NormalForm(GroupWord reduced);

    bool is_identity() const { return word_.empty(); }
    bool leading_p() const;
    bool trailing_p() const;
    /// a1 p a2 p ... p an, without the optional outer p's.
    GroupWord core() const;
    /// The whole reduced word.
    const GroupWord& word() const { return word_; }

    /// The reduced word in generator syntax; "I" for the identity.
    std::string to_string() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    GroupWord word_;
};

/// Rewrites with ε = 1, pp = 1 and the Klein relations among q, α, β.
/// The result is equal to w as an element; it is not claimed to be unique per element.
NormalForm normal_form(const GroupWord& w);

struct KleinTable {
    /// Rows and columns in the order of `elements`; entries index into it.
    std::array<GroupWord, 4> elements;
    std::array<std::array<int, 4>, 4> product;
    Report report;

    std::string format() const;
};

/// The subgroup generated by ᾱ and q̄: its four elements, their products and checks
/// that it is the Klein four-group.
KleinTable klein_table();

/// counts[L] = number of distinct elements written by generator words of length <= L.
std::vector<std::size_t> enumerate_elements(std::size_t max_len);

}  // namespace b4
