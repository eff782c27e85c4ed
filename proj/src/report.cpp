#include "exosc/report.hpp"

#include <json.hpp>
#include <sstream>

namespace exosc {

Check exact_check(const std::string& name, bool zero, const std::string& residual) {
    Check c;
    c.name = name;
    c.kind = CheckKind::exact;
    c.pass = zero;
    c.residual_str = zero ? "0" : residual;
    c.residual_float = zero ? 0.0 : 1.0;
    return c;
}

Check float_check(const std::string& name, double residual, double tolerance) {
    Check c;
    c.name = name;
    c.kind = CheckKind::floating;
    c.residual_float = residual;
    c.residual_str = std::to_string(residual);
    c.pass = residual <= tolerance;
    return c;
}

bool Report::overall_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

size_t Report::failed_count() const {
    size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.name;
    return "";
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["engine_version"] = engine_version;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["kind"] = (c.kind == CheckKind::exact) ? "exact" : "float";
        if (c.kind == CheckKind::exact)
            jc["residual"] = c.residual_str;
        else
            jc["residual"] = c.residual_float;
        jc["pass"] = c.pass;
        arr.push_back(jc);
    }
    j["checks"] = arr;
    j["overall_pass"] = overall_pass();
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << command;
    for (const auto& [k, v] : parameters) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
           << (c.kind == CheckKind::exact ? " (exact)" : " (float)") << " residual=";
        if (c.kind == CheckKind::exact)
            os << c.residual_str;
        else
            os << c.residual_float;
        os << "\n";
    }
    os << (overall_pass() ? "OVERALL: PASS" : "OVERALL: FAIL") << " (" << checks.size()
       << " checks, " << failed_count() << " failed)\n";
    return os.str();
}

}  // namespace exosc
