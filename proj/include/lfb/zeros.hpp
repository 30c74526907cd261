// zeros.hpp -- nontrivial-zero lists supplied by the user.
//
// File format: UTF-8 text, one zero per line, '#' starts a comment.  A single
// column holds ordinates gamma (requires critical_assumed: beta = 1/2 and the
// conjugate -gamma is implied); two columns hold "beta gamma".
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lfb/errors.hpp"

namespace lfb {

struct Zero {
    double beta = 0.5;
    double gamma = 0.0;
};

struct ZeroSet {
    std::vector<Zero> entries;  // gamma >= 0, sorted by gamma
    double height_limit = 0.0;  // T
    bool critical_assumed = false;

    std::size_t size() const { return entries.size(); }

    ZeroSet truncated(std::size_t count) const {
        ZeroSet z = *this;
        if (count < z.entries.size()) z.entries.resize(count);
        z.height_limit = z.entries.empty() ? 0.0 : z.entries.back().gamma;
        return z;
    }
};

inline ZeroSet zeroset_from_ordinates(const std::vector<double>& gammas) {
    ZeroSet z;
    z.critical_assumed = true;
    for (double g : gammas) z.entries.push_back(Zero{0.5, g});
    std::sort(z.entries.begin(), z.entries.end(),
              [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
    z.height_limit = z.entries.empty() ? 0.0 : z.entries.back().gamma;
    return z;
}

inline ZeroSet load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open zeros file: " + path);
    ZeroSet z;
    bool saw_two_columns = false, saw_one_column = false;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double a, b;
        if (!(ss >> a)) continue;  // blank
        if (ss >> b) {
            saw_two_columns = true;
            if (!(a >= 0.0 && a <= 1.0))
                throw parse_error("beta outside [0,1]", lineno);
            if (b < 0.0) throw parse_error("gamma must be >= 0", lineno);
            z.entries.push_back(Zero{a, b});
        } else {
            saw_one_column = true;
            if (a < 0.0) throw parse_error("gamma must be >= 0", lineno);
            z.entries.push_back(Zero{0.5, a});
        }
    }
    if (saw_one_column && saw_two_columns)
        throw parse_error("zeros file mixes one- and two-column lines");
    z.critical_assumed = saw_one_column;
    std::sort(z.entries.begin(), z.entries.end(),
              [](const Zero& x, const Zero& y) { return x.gamma < y.gamma; });
    z.height_limit = z.entries.empty() ? 0.0 : z.entries.back().gamma;
    return z;
}

}  // namespace lfb
