#pragma once

// Verification results and their renderers. An IdentityInstance is one
// concrete check (an identity id plus parameter bindings, both sides as
// exact decimal strings, and the outcome); suites group instances. All
// renderers are deterministic: same results in, same bytes out.

#include <string>
#include <utility>
#include <vector>

#include "gessel/exact.hpp"

namespace gessel {

using ParamList = std::vector<std::pair<std::string, long long>>;

struct IdentityInstance {
    std::string identity_id;
    ParamList params; // rendered in insertion order
    std::string lhs;
    std::string rhs;
    bool passed = false;
    // A known discrepancy verified as printed; counts as failed only
    // under strict evaluation.
    bool allowlisted = false;
    std::string note; // optional context, e.g. first mismatching point
};

IdentityInstance make_instance(std::string id, ParamList params, const CountInt& lhs,
                               const CountInt& rhs);
IdentityInstance make_instance(std::string id, ParamList params, const Rational& lhs,
                               const Rational& rhs);

struct SuiteResult {
    std::string id;
    std::vector<IdentityInstance> instances;

    int passed_count() const;
    int failed_count() const;
    int allowlisted_failed_count() const;
};

// True when no instance failed; allowlisted failures are tolerated unless
// strict is set.
bool all_passed(const std::vector<SuiteResult>& results, bool strict);

std::string render_text(const std::vector<SuiteResult>& results);
std::string render_json(const std::vector<SuiteResult>& results);
std::string render_csv(const std::vector<SuiteResult>& results);

} // namespace gessel
