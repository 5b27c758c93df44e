/* generators.hpp -- symbols naming the state maps of B4.
 *
 * Text syntax uses one ASCII character per symbol: p, q, a (α), e (ε) and,
 * in normal-form output only, b (β = αq).
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "b4/error.hpp"

namespace b4 {

enum class Gen : char { p = 'p', q = 'q', alpha = 'a', eps = 'e', beta = 'b' };

inline char symbol(Gen g) { return static_cast<char>(g); }
Gen parse_gen(char c);

/// A word s1 s2 ... sk over generators, denoting x -> x s̄1 s̄2 ... s̄k (applied left to right).
/// The empty word is the identity map.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Gen> symbols) : symbols_(std::move(symbols)) {}
    GroupWord(std::initializer_list<Gen> symbols) : symbols_(symbols) {}

    /// "paq" style; "" or "-" is the empty word.
    static GroupWord parse(std::string_view text);

    const std::vector<Gen>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Gen operator[](std::size_t i) const { return symbols_[i]; }

    GroupWord power(std::size_t n) const;
    /// The inverse element: every generator is an involution, so this is the reversal.
    GroupWord inverse() const;

    /// "-" for the empty word.
    std::string to_string() const;

    friend GroupWord operator+(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Gen> symbols_;
};

}  // namespace b4
