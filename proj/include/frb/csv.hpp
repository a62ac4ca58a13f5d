#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace frb {

// Round-trippable float formatting: 17 significant digits.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Comma-separated, '\n' line ends, header row, numeric-only payload.
inline std::string to_csv(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) out += ',';
        out += header[j];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += fmt17(row[j]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace frb
