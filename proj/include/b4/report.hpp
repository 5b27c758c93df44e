#pragma once

#include <string>
#include <vector>

namespace b4 {

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

/// Ordered list of named pass/fail checks.
class Report {
public:
    void add(std::string name, bool passed, std::string detail = {});
    void append(const Report& other);

    bool passed() const;
    std::size_t failures() const;
    const std::vector<Check>& checks() const { return checks_; }

    /// One "CHECK <name> PASS|FAIL <detail>" line per check.
    std::string format() const;

private:
    std::vector<Check> checks_;
};

}  // namespace b4
