#pragma once

#include "contlab/kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace contlab {

enum class EqStatus { Verified, BoundedVerified, Refuted };

struct Counterexample {
    std::string bindings;   // complete variable assignment reproducing the failure
    std::string detail;     // evaluated sides
    Nat block = 0;          // canonical block index
    Nat inner = 0;          // instance index within the block
};

struct EquationResult {
    std::string tag;
    std::string note;  // e.g. "determining" when the equation fixes a table outright
    Nat checked = 0;
    Nat deferred = 0;
    Nat blocked = 0;
    std::optional<Counterexample> failure;

    EqStatus status() const {
        if (failure) return EqStatus::Refuted;
        return deferred > 0 ? EqStatus::BoundedVerified : EqStatus::Verified;
    }
};

struct EquationReport {
    std::vector<EquationResult> equations;
    // set when the quantifier domains themselves are truncated by fuel, so a
    // clean pass is still only a bounded verdict
    bool bounded_domain = false;

    bool refuted() const {
        for (const auto& e : equations)
            if (e.failure) return true;
        return false;
    }
    bool bounded() const {
        if (bounded_domain) return true;
        for (const auto& e : equations)
            if (e.deferred > 0) return true;
        return false;
    }
    EqStatus overall() const {
        if (refuted()) return EqStatus::Refuted;
        return bounded() ? EqStatus::BoundedVerified : EqStatus::Verified;
    }
    bool verified_or_bounded() const { return !refuted(); }
    std::size_t passed_count() const {
        std::size_t n = 0;
        for (const auto& e : equations)
            if (!e.failure) ++n;
        return n;
    }
    const EquationResult* find(const std::string& tag) const {
        for (const auto& e : equations)
            if (e.tag == tag) return &e;
        return nullptr;
    }
};

const char* status_name(EqStatus s);
std::string format_report(const EquationReport& r);

} // namespace contlab
