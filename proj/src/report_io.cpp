#include "torvex/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace torvex {

std::string report_to_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["checked"] = r.checked;
    j["passed"] = r.passed();
    j["violations"] = nlohmann::ordered_json::array();
    for (auto& v : r.violations)
        j["violations"].push_back({{"identity", v.identity}, {"witness", v.witness}});
    return j.dump(2);
}

Report report_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.checked = j.at("checked").get<long long>();
    for (auto& v : j.at("violations"))
        r.fail(v.at("identity").get<std::string>(), v.at("witness").get<std::string>());
    return r;
}

std::string report_to_text(const Report& r)
{
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << " " << r.suite << ": " << r.checked
       << " identities checked, " << r.violations.size() << " violations\n";
    for (auto& v : r.violations)
        os << "  violated " << v.identity << " at " << v.witness << "\n";
    return os.str();
}

} // namespace torvex
