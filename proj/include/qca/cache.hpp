#pragma once

#include "qca/dcb.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace qca {

inline constexpr const char* kToolVersion = "1.0";

// Disk cache for solved dual-canonical-basis degrees: one JSON file per
// (n, variant, gamma), written atomically via temp-file rename.  Keys include
// the tool version; mismatching files are ignored.
class DcbCache {
public:
    explicit DcbCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    // Load every cached element of the degree into the solver.
    bool load_degree(DcbSolver& solver, const Root& gamma) const;

    // Store all currently solved elements of the degree.
    void store_degree(const DcbSolver& solver, const Root& gamma) const;

private:
    std::filesystem::path dir_;
    std::filesystem::path file_for(const Context& ctx, const Root& gamma) const;
};

// Cache-aware degree solve: returns the elements of the degree, reading and
// populating the cache when one is supplied.
std::vector<std::pair<ExpVec, DualPBWElement>> solve_degree_cached(DcbSolver& solver, const Root& gamma,
                                                                   const DcbCache* cache);

} // namespace qca
