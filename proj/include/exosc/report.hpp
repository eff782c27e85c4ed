#pragma once

#include <map>
#include <string>
#include <vector>

#include "exosc/version.hpp"

namespace exosc {

enum class CheckKind { exact, floating };

struct Check {
    std::string name;
    CheckKind kind = CheckKind::exact;
    std::string residual_str;     // exact path: "0" or the surviving expression
    double residual_float = 0.0;  // float path: residual magnitude
    bool pass = false;
};

Check exact_check(const std::string& name, bool zero, const std::string& residual = "0");
Check float_check(const std::string& name, double residual, double tolerance);

struct Report {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<Check> checks;
    std::string engine_version = EXOSC_VERSION;

    bool overall_pass() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    void add_all(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
    size_t failed_count() const;
    std::string first_failure() const;

    // Key-sorted, locale-independent serialization.
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace exosc
