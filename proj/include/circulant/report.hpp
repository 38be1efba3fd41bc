#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

// One verified equality: |lhs - rhs| (absolute or relative, as the caller
// declared via the residual it computed) against a stated tolerance.
struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline CheckResult make_check_absolute(std::string name, double lhs, double rhs, double tolerance) {
    CheckResult c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = std::abs(lhs - rhs);
    c.tolerance = tolerance;
    c.pass = c.residual <= tolerance;
    return c;
}

// Relative residual against rhs as the reference value; falls back to the
// absolute difference when the reference is zero.
inline CheckResult make_check_relative(std::string name, double lhs, double rhs, double tolerance) {
    CheckResult c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    const double diff = std::abs(lhs - rhs);
    c.residual = rhs == 0.0 ? diff : diff / std::abs(rhs);
    c.tolerance = tolerance;
    c.pass = c.residual <= tolerance;
    return c;
}

// Exact (rational/integer) comparison already performed by the caller;
// residual is 0 on success and 1 on mismatch, with a zero tolerance.
inline CheckResult make_check_exact(std::string name, bool equal) {
    CheckResult c;
    c.name = std::move(name);
    c.lhs = equal ? 1.0 : 0.0;
    c.rhs = 1.0;
    c.residual = equal ? 0.0 : 1.0;
    c.tolerance = 0.0;
    c.pass = equal;
    return c;
}

// An exhaustive list of checks: every comparison performed is recorded,
// pass or fail, and the worst residual is available for reporting.
class VerificationReport {
public:
    void add(CheckResult check) { checks_.push_back(std::move(check)); }

    void add_absolute(std::string name, double lhs, double rhs, double tolerance) {
        add(make_check_absolute(std::move(name), lhs, rhs, tolerance));
    }
    void add_relative(std::string name, double lhs, double rhs, double tolerance) {
        add(make_check_relative(std::move(name), lhs, rhs, tolerance));
    }
    void add_exact(std::string name, bool equal) {
        add(make_check_exact(std::move(name), equal));
    }

    void merge(const VerificationReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool empty() const { return checks_.empty(); }
    std::size_t size() const { return checks_.size(); }

    bool all_pass() const {
        return std::all_of(checks_.begin(), checks_.end(),
                           [](const CheckResult& c) { return c.pass; });
    }

    double worst_residual() const {
        double worst = 0.0;
        for (const CheckResult& c : checks_) worst = std::max(worst, c.residual);
        return worst;
    }

private:
    std::vector<CheckResult> checks_;
};

// Process exit-code policy shared by every verifying command: 0 when all
// checks pass, 2 when any recorded check failed (1 is reserved for usage and
// input errors and never derives from a report).
inline int exit_code_for(const VerificationReport& report) {
    return report.all_pass() ? 0 : 2;
}

} // namespace circulant
