#include "lcskit/report.hpp"

#include <sstream>

namespace lcskit {

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "subject: " << subject << "\n";
    for (const auto& c : checks) {
        out << "check " << c.name << ": " << status_name(c.status);
        if (!c.witness.empty()) out << " [" << c.witness << "]";
        out << "\n";
    }
    out << "result: " << (all_passed() ? "ok" : "failed") << "\n";
    return out.str();
}

} // namespace lcskit
