/* words.hpp -- finite words and ultimately periodic infinite words.
 *
 * Every infinite word handled by the library has the shape u v v v ... and is
 * stored as the canonical pair (u, v): v primitive, and u either empty or
 * ending in a letter different from the last letter of v. Two such words are
 * equal exactly when their canonical pairs are equal.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "b4/error.hpp"

namespace b4 {

using Letter = char;

/// Ordered set of distinct single-character symbols.
class Alphabet {
public:
    /// Throws Error on empty input, duplicates, whitespace or reserved characters "()-".
    explicit Alphabet(std::string letters);

    static const Alphabet& binary();

    std::string_view letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    Letter at(std::size_t i) const { return letters_.at(i); }
    bool contains(Letter a) const { return letters_.find(a) != std::string::npos; }
    /// Position of a in the alphabet order; throws Error when a is not a member.
    std::size_t index_of(Letter a) const;

    /// Same set of symbols, ignoring order.
    bool same_letters(const Alphabet& other) const;
    bool subset_of(const Alphabet& other) const;
    bool is_binary() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string letters_;
};

class FiniteWord {
public:
    /// The empty word over the binary alphabet.
    FiniteWord();
    FiniteWord(Alphabet alphabet, std::string letters);

    /// Parses the textual form: symbols of the alphabet, or "-" for the empty word.
    static FiniteWord parse(const Alphabet& alphabet, std::string_view text);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    FiniteWord prefix(std::size_t n) const;
    FiniteWord power(std::size_t k) const;
    bool is_prefix_of(const FiniteWord& other) const;
    bool contains(Letter a) const { return letters_.find(a) != std::string::npos; }

    /// "-" for the empty word.
    std::string to_string() const;

    friend FiniteWord operator+(const FiniteWord& a, const FiniteWord& b);
    friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
        return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
    }

private:
    Alphabet alphabet_;
    std::string letters_;
};

/// An ultimately periodic infinite word u v^ω, always held in canonical form.
class UPWord {
public:
    /// Throws Error when v is empty or the alphabets differ.
    UPWord(const FiniteWord& preperiod, const FiniteWord& period);

    /// Textual form "u(v)": "(1)" is 1^ω, "00(1)" is 001^ω. Non-canonical input is accepted.
    static UPWord parse(const Alphabet& alphabet, std::string_view text);
    /// Shorthand for binary words.
    static UPWord parse(std::string_view text) { return parse(Alphabet::binary(), text); }

    const Alphabet& alphabet() const { return preperiod_.alphabet(); }
    const FiniteWord& preperiod() const { return preperiod_; }
    const FiniteWord& period() const { return period_; }

    Letter at(std::size_t i) const;

    /// Canonical "u(v)".
    std::string to_string() const;

    friend bool operator==(const UPWord&, const UPWord&) = default;

private:
    FiniteWord preperiod_;
    FiniteWord period_;
};

UPWord canonicalize(const FiniteWord& u, const FiniteWord& v);

/// First n letters of x.
FiniteWord prefix(const UPWord& x, std::size_t n);
/// The suffix x[n, ∞).
UPWord drop(const UPWord& x, std::size_t n);
UPWord concat(const FiniteWord& u, const UPWord& x);

/// Length of the longest common prefix; nullopt when x == y (infinite agreement).
std::optional<std::size_t> longest_common_prefix_len(const UPWord& x, const UPWord& y);

/// An exact value of the prefix metric: 0 or 2^-exponent.
class Dyadic {
public:
    static Dyadic zero() { return Dyadic{true, 0}; }
    static Dyadic pow2_neg(std::size_t exponent) { return Dyadic{false, exponent}; }

    bool is_zero() const { return zero_; }
    /// Meaningless for zero.
    std::size_t exponent() const { return exponent_; }

    /// "0" or "2^-m".
    std::string to_string() const;

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    Dyadic(bool zero, std::size_t exponent) : zero_(zero), exponent_(zero ? 0 : exponent) {}

    bool zero_;
    std::size_t exponent_;
};

Dyadic prefix_metric(const UPWord& x, const UPWord& y);

/// 0 <-> 1. Throws Error unless the alphabet is {0,1}.
Letter complement_letter(const Alphabet& alphabet, Letter a);

}  // namespace b4
