#pragma once

#include <cstdio>
#include <cstddef>
#include <string>
#include <vector>

namespace sab {

// Formats a double with 17 significant digits (round-trip safe, byte-stable).
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

struct Failure {
    std::string input;   // human-readable descriptor of the failing input
    double residual = 0.0;
};

// Outcome of one verification check. verdict is pass iff failures is empty.
struct CheckReport {
    std::string name;
    std::size_t trials = 0;
    double max_residual = 0.0;
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }

    void record(std::size_t n_trials, double residual, bool ok, const std::string& input) {
        trials = n_trials;
        if (residual > max_residual) max_residual = residual;
        if (!ok) failures.push_back({input, residual});
    }

    // {name, trials, max_residual, verdict, failures[]} with stable key order.
    std::string to_json() const {
        std::string out = "{\"name\":\"" + json_escape(name) + "\"";
        out += ",\"trials\":" + std::to_string(trials);
        out += ",\"max_residual\":" + fmt17(max_residual);
        out += std::string(",\"verdict\":\"") + (pass() ? "pass" : "fail") + "\"";
        out += ",\"failures\":[";
        for (std::size_t i = 0; i < failures.size(); ++i) {
            if (i) out += ",";
            out += "{\"input\":\"" + json_escape(failures[i].input) +
                   "\",\"residual\":" + fmt17(failures[i].residual) + "}";
        }
        out += "]}";
        return out;
    }
};

} // namespace sab
