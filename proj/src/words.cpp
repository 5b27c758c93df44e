#include "b4/words.hpp"

#include <algorithm>
#include <numeric>

namespace b4 {

namespace {

constexpr std::string_view kReserved = "()-";

void check_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (a != b)
        throw Error("alphabet mismatch: {" + std::string(a.letters()) + "} vs {" +
                    std::string(b.letters()) + "}");
}

// Length of the primitive root of a non-empty word.
std::size_t primitive_root_len(const std::string& v) {
    const std::size_t n = v.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = v[i] == v[i - d];
        if (periodic) return d;
    }
    return n;
}

}  // namespace

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error("alphabet must be non-empty");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const Letter a = letters_[i];
        if (kReserved.find(a) != std::string_view::npos || static_cast<unsigned char>(a) <= ' ')
            throw Error(std::string("reserved symbol in alphabet: '") + a + "'");
        if (letters_.find(a, i + 1) != std::string::npos)
            throw Error(std::string("duplicate symbol in alphabet: '") + a + "'");
    }
}

const Alphabet& Alphabet::binary() {
    static const Alphabet kBinary("01");
    return kBinary;
}

std::size_t Alphabet::index_of(Letter a) const {
    const auto pos = letters_.find(a);
    if (pos == std::string::npos)
        throw Error(std::string("letter '") + a + "' not in alphabet {" + letters_ + "}");
    return pos;
}

bool Alphabet::same_letters(const Alphabet& other) const {
    return size() == other.size() && subset_of(other);
}

bool Alphabet::subset_of(const Alphabet& other) const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [&](Letter a) { return other.contains(a); });
}

bool Alphabet::is_binary() const { return size() == 2 && contains('0') && contains('1'); }

FiniteWord::FiniteWord() : alphabet_(Alphabet::binary()) {}

FiniteWord::FiniteWord(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (Letter a : letters_)
        if (!alphabet_.contains(a))
            throw Error(std::string("letter '") + a + "' not in alphabet {" +
                        std::string(alphabet_.letters()) + "}");
}

FiniteWord FiniteWord::parse(const Alphabet& alphabet, std::string_view text) {
    if (text == "-") return FiniteWord(alphabet, {});
    try {
        return FiniteWord(alphabet, std::string(text));
    } catch (const Error& e) {
        throw ParseError("bad finite word \"" + std::string(text) + "\": " + e.what());
    }
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
    return FiniteWord(alphabet_, letters_.substr(0, std::min(n, letters_.size())));
}

FiniteWord FiniteWord::power(std::size_t k) const {
    std::string out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += letters_;
    return FiniteWord(alphabet_, std::move(out));
}

bool FiniteWord::is_prefix_of(const FiniteWord& other) const {
    return size() <= other.size() && std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

std::string FiniteWord::to_string() const { return letters_.empty() ? "-" : letters_; }

FiniteWord operator+(const FiniteWord& a, const FiniteWord& b) {
    check_same_alphabet(a.alphabet_, b.alphabet_);
    return FiniteWord(a.alphabet_, a.letters_ + b.letters_);
}

UPWord::UPWord(const FiniteWord& preperiod, const FiniteWord& period) {
    if (period.empty()) throw Error("period of an infinite word must be non-empty");
    check_same_alphabet(preperiod.alphabet(), period.alphabet());

    std::string u = preperiod.letters();
    std::string v = period.letters().substr(0, primitive_root_len(period.letters()));
    // Absorb the tail of u into the period: u a (w a)^ω = u (a w)^ω.
    while (!u.empty() && u.back() == v.back()) {
        u.pop_back();
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
    preperiod_ = FiniteWord(preperiod.alphabet(), std::move(u));
    period_ = FiniteWord(period.alphabet(), std::move(v));
}

UPWord UPWord::parse(const Alphabet& alphabet, std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')' ||
        text.find('(', open + 1) != std::string_view::npos ||
        text.find(')') != text.size() - 1)
        throw ParseError("bad infinite word \"" + std::string(text) + "\": expected u(v)");
    try {
        return UPWord(FiniteWord(alphabet, std::string(text.substr(0, open))),
                      FiniteWord(alphabet, std::string(text.substr(open + 1, text.size() - open - 2))));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("bad infinite word \"" + std::string(text) + "\": " + e.what());
    }
}

Letter UPWord::at(std::size_t i) const {
    const std::size_t u = preperiod_.size();
    return i < u ? preperiod_[i] : period_[(i - u) % period_.size()];
}

std::string UPWord::to_string() const {
    return preperiod_.letters() + "(" + period_.letters() + ")";
}

UPWord canonicalize(const FiniteWord& u, const FiniteWord& v) { return UPWord(u, v); }

FiniteWord prefix(const UPWord& x, std::size_t n) {
    std::string out(n, '\0');
    for (std::size_t i = 0; i < n; ++i) out[i] = x.at(i);
    return FiniteWord(x.alphabet(), std::move(out));
}

UPWord drop(const UPWord& x, std::size_t n) {
    const auto& u = x.preperiod().letters();
    const auto& v = x.period().letters();
    if (n <= u.size())
        return UPWord(FiniteWord(x.alphabet(), u.substr(n)), x.period());
    const std::size_t shift = (n - u.size()) % v.size();
    return UPWord(FiniteWord(x.alphabet(), {}),
                  FiniteWord(x.alphabet(), v.substr(shift) + v.substr(0, shift)));
}

UPWord concat(const FiniteWord& u, const UPWord& x) {
    return UPWord(u + x.preperiod(), x.period());
}

std::optional<std::size_t> longest_common_prefix_len(const UPWord& x, const UPWord& y) {
    check_same_alphabet(x.alphabet(), y.alphabet());
    if (x == y) return std::nullopt;
    // Words that agree up to this bound agree everywhere; unequal canonical
    // words therefore differ somewhere before it.
    const std::size_t bound = std::max(x.preperiod().size(), y.preperiod().size()) +
                              std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = 0; i < bound; ++i)
        if (x.at(i) != y.at(i)) return i;
    throw Error("internal: canonical words differ but agree up to the decision bound");
}

std::string Dyadic::to_string() const {
    return zero_ ? "0" : "2^-" + std::to_string(exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    // 2^-a < 2^-b exactly when a > b.
    return b.exponent_ <=> a.exponent_;
}

Dyadic prefix_metric(const UPWord& x, const UPWord& y) {
    const auto m = longest_common_prefix_len(x, y);
    return m ? Dyadic::pow2_neg(*m) : Dyadic::zero();
}

Letter complement_letter(const Alphabet& alphabet, Letter a) {
    if (!alphabet.is_binary()) throw Error("complement is defined only over {0,1}");
    if (a == '0') return '1';
    if (a == '1') return '0';
    throw Error(std::string("letter '") + a + "' is not binary");
}

}  // namespace b4
