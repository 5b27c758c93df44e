#include "b4/report.hpp"

#include <algorithm>

namespace b4 {

void Report::add(std::string name, bool passed, std::string detail) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

std::string Report::format() const {
    std::string out;
    for (const auto& c : checks_) {
        out += "CHECK " + c.name + (c.passed ? " PASS" : " FAIL");
        if (!c.detail.empty()) out += " " + c.detail;
        out += '\n';
    }
    return out;
}

}  // namespace b4
