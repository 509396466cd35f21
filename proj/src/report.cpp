#include "contlab/report.hpp"

#include <sstream>

namespace contlab {

const char* status_name(EqStatus s) {
    switch (s) {
    case EqStatus::Verified: return "Verified";
    case EqStatus::BoundedVerified: return "BoundedVerified";
    case EqStatus::Refuted: return "Refuted";
    }
    return "?";
}

std::string format_report(const EquationReport& r) {
    std::ostringstream os;
    for (const auto& e : r.equations) {
        os << "  " << e.tag;
        for (std::size_t i = e.tag.size(); i < 16; ++i) os << ' ';
        os << ' ' << status_name(e.status()) << "  checked=" << e.checked;
        if (e.deferred) os << " deferred=" << e.deferred;
        if (e.blocked) os << " blocked=" << e.blocked;
        if (!e.note.empty()) os << " (" << e.note << ")";
        if (e.failure) os << "  at " << e.failure->bindings;
        os << '\n';
    }
    os << "verdict: " << status_name(r.overall()) << " (" << r.passed_count() << "/"
       << r.equations.size() << ")\n";
    return os.str();
}

} // namespace contlab
