#include "carloscale/scl.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace carloscale {

namespace {

// .scl is an ASCII format; squash anything else to '_'
std::string ascii_sanitize(const std::string& text, bool keep_spaces) {
    std::string out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        if (c < 0x80 && (std::isalnum(c) || c == '-' || c == '_' || c == '.' ||
                         (keep_spaces && (c == ' ' || std::ispunct(c)))))
            out += static_cast<char>(c);
        else
            out += '_';
    }
    return out;
}

}  // namespace

std::string export_scl(const DerivedScale& scale, long long steps, const std::string& description) {
    if (steps < 1)
        throw std::domain_error("scl export needs at least one step");
    if (!(scale.unit_cents > 0.0))
        throw std::domain_error("scl export needs a positive unit size");

    std::string out;
    out += "! " + ascii_sanitize(scale.system.label, false) + ".scl\n";
    out += "!\n";
    out += ascii_sanitize(description, true) + "\n";
    out += " " + std::to_string(steps) + "\n";
    out += "!\n";
    char line[64];
    for (long long k = 1; k <= steps; ++k) {
        std::snprintf(line, sizeof line, " %.5f\n", static_cast<double>(k) * scale.unit_cents);
        out += line;
    }
    return out;
}

}  // namespace carloscale
