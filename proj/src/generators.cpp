#include "b4/generators.hpp"

#include <algorithm>

namespace b4 {

Gen parse_gen(char c) {
    switch (c) {
        case 'p': return Gen::p;
        case 'q': return Gen::q;
        case 'a': return Gen::alpha;
        case 'e': return Gen::eps;
        case 'b': return Gen::beta;
        default: throw ParseError(std::string("unknown generator '") + c + "'");
    }
}

GroupWord GroupWord::parse(std::string_view text) {
    if (text == "-") return {};
    std::vector<Gen> symbols;
    symbols.reserve(text.size());
    for (char c : text) symbols.push_back(parse_gen(c));
    return GroupWord(std::move(symbols));
}

GroupWord GroupWord::power(std::size_t n) const {
    std::vector<Gen> out;
    out.reserve(symbols_.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), symbols_.begin(), symbols_.end());
    return GroupWord(std::move(out));
}

GroupWord GroupWord::inverse() const {
    return GroupWord(std::vector<Gen>(symbols_.rbegin(), symbols_.rend()));
}

std::string GroupWord::to_string() const {
    if (symbols_.empty()) return "-";
    std::string out;
    for (Gen g : symbols_) out += symbol(g);
    return out;
}

GroupWord operator+(const GroupWord& a, const GroupWord& b) {
    std::vector<Gen> out = a.symbols_;
    out.insert(out.end(), b.symbols_.begin(), b.symbols_.end());
    return GroupWord(std::move(out));
}

}  // namespace b4
