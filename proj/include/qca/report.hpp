#pragma once

#include <string>
#include <vector>

namespace qca {

// One verified identity: machine-readable line per check.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckLine> lines;

    void add(std::string name, bool pass, std::string detail = "") {
        lines.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t c = 0;
        for (const auto& l : lines)
            if (!l.pass) ++c;
        return c;
    }
};

} // namespace qca
