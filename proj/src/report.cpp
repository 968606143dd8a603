#include "gessel/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gessel {

IdentityInstance make_instance(std::string id, ParamList params, const CountInt& lhs,
                               const CountInt& rhs) {
    IdentityInstance inst;
    inst.identity_id = std::move(id);
    inst.params = std::move(params);
    inst.lhs = lhs.str();
    inst.rhs = rhs.str();
    inst.passed = (lhs == rhs);
    return inst;
}

IdentityInstance make_instance(std::string id, ParamList params, const Rational& lhs,
                               const Rational& rhs) {
    IdentityInstance inst;
    inst.identity_id = std::move(id);
    inst.params = std::move(params);
    inst.lhs = rational_str(lhs);
    inst.rhs = rational_str(rhs);
    inst.passed = (lhs == rhs);
    return inst;
}

int SuiteResult::passed_count() const {
    int n = 0;
    for (const auto& i : instances) n += i.passed ? 1 : 0;
    return n;
}

int SuiteResult::failed_count() const {
    return static_cast<int>(instances.size()) - passed_count();
}

int SuiteResult::allowlisted_failed_count() const {
    int n = 0;
    for (const auto& i : instances) n += (!i.passed && i.allowlisted) ? 1 : 0;
    return n;
}

bool all_passed(const std::vector<SuiteResult>& results, bool strict) {
    for (const auto& s : results) {
        for (const auto& i : s.instances) {
            if (i.passed) continue;
            if (strict || !i.allowlisted) return false;
        }
    }
    return true;
}

namespace {

std::string params_str(const ParamList& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ';';
        first = false;
        os << k << '=' << v;
    }
    return os.str();
}

} // namespace

std::string render_text(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    int total = 0, failed = 0, tolerated = 0;
    for (const auto& s : results) {
        os << "suite " << s.id << ": " << s.passed_count() << '/' << s.instances.size()
           << " passed";
        if (int a = s.allowlisted_failed_count(); a > 0)
            os << " (" << a << " documented discrepanc" << (a == 1 ? "y" : "ies") << ")";
        os << '\n';
        for (const auto& i : s.instances) {
            if (i.passed) continue;
            os << "  " << (i.allowlisted ? "allowlisted " : "FAILED ") << i.identity_id;
            if (!i.params.empty()) os << '[' << params_str(i.params) << ']';
            os << ": lhs=" << i.lhs << " rhs=" << i.rhs;
            if (!i.note.empty()) os << " (" << i.note << ")";
            os << '\n';
        }
        total += static_cast<int>(s.instances.size());
        failed += s.failed_count();
        tolerated += s.allowlisted_failed_count();
    }
    os << "total: " << (total - failed) << '/' << total << " passed, " << failed << " failed";
    if (tolerated > 0) os << " (" << tolerated << " allowlisted)";
    os << '\n';
    return os.str();
}

std::string render_json(const std::vector<SuiteResult>& results) {
    using json = nlohmann::ordered_json;
    json suites = json::array();
    for (const auto& s : results) {
        json instances = json::array();
        for (const auto& i : s.instances) {
            json params = json::object();
            for (const auto& [k, v] : i.params) params[k] = v;
            json inst = {{"identity_id", i.identity_id},
                         {"params", params},
                         {"lhs", i.lhs},
                         {"rhs", i.rhs},
                         {"passed", i.passed}};
            if (i.allowlisted) inst["allowlisted"] = true;
            if (!i.note.empty()) inst["note"] = i.note;
            instances.push_back(std::move(inst));
        }
        suites.push_back(json{{"id", s.id},
                              {"instances", std::move(instances)},
                              {"passed_count", s.passed_count()},
                              {"failed_count", s.failed_count()}});
    }
    return json{{"suites", std::move(suites)}}.dump(2) + "\n";
}

std::string render_csv(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << "suite,identity_id,params,lhs,rhs,passed,allowlisted\n";
    for (const auto& s : results)
        for (const auto& i : s.instances)
            os << s.id << ',' << i.identity_id << ',' << params_str(i.params) << ',' << i.lhs
               << ',' << i.rhs << ',' << (i.passed ? "true" : "false") << ','
               << (i.allowlisted ? "true" : "false") << '\n';
    return os.str();
}

} // namespace gessel
