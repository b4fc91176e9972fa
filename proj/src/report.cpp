#include "skewhopf/report.hpp"

#include <json.hpp>

#include <sstream>

namespace skewhopf {

int Report::exit_code() const {
    if (checks.count(Status::fail) > 0) return 1;
    if (checks.count(Status::unresolved) > 0) return 3;
    return 0;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input_digest"] = input_digest;
    j["command"] = command;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks.items) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        jc["law"] = c.law;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        j["checks"].push_back(jc);
    }
    nlohmann::ordered_json jr = nlohmann::ordered_json::object();
    for (const auto& [k, v] : results) jr[k] = v;
    j["results"] = jr;
    j["summary"] = {{"pass", checks.count(Status::pass)},
                    {"fail", checks.count(Status::fail)},
                    {"unresolved", checks.count(Status::unresolved)}};
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks.items) {
        out << to_string(c.status) << "  " << c.name;
        if (!c.witness.empty()) out << "  [witness: " << c.witness << "]";
        out << "\n";
    }
    for (const auto& [k, v] : results) out << k << ": " << v << "\n";
    out << "summary: " << checks.count(Status::pass) << " pass, " << checks.count(Status::fail)
        << " fail, " << checks.count(Status::unresolved) << " unresolved\n";
    return out.str();
}

std::string input_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << h;
    return out.str();
}

}  // namespace skewhopf
