#include "qca/cache.hpp"

#include "qca/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qca {

std::filesystem::path DcbCache::file_for(const Context& ctx, const Root& gamma) const {
    std::ostringstream name;
    name << "dcb_n" << ctx.rank() << "_" << variant_name(ctx.variant()) << "_";
    for (std::size_t t = 0; t < gamma.d.size(); ++t) {
        if (t) name << "-";
        name << gamma.d[t];
    }
    name << ".json";
    return dir_ / name.str();
}

bool DcbCache::load_degree(DcbSolver& solver, const Root& gamma) const {
    const Context& ctx = solver.context();
    std::ifstream in(file_for(ctx, gamma));
    if (!in) return false;
    json j;
    try {
        in >> j;
        if (j.at("tool_version").get<std::string>() != kToolVersion) return false;
        if (j.at("n").get<int>() != ctx.rank() ||
            j.at("variant").get<std::string>() != variant_name(ctx.variant()))
            return false;
        if (j.at("degree").get<std::vector<int>>() != gamma.d) return false;
        for (const auto& entry : j.at("elements")) {
            ExpVec a = entry.at("a").get<ExpVec>();
            DualPBWElement b = pbw_from_json(ctx, entry.at("element"));
            solver.preload(a, std::move(b));
        }
    } catch (const std::exception&) {
        return false; // unreadable cache entries are treated as misses
    }
    return true;
}

void DcbCache::store_degree(const DcbSolver& solver, const Root& gamma) const {
    const Context& ctx = solver.context();
    json elements = json::array();
    for (const auto& [a, b] : solver.solved()) {
        if (ctx.deg_of_exp(a) != gamma) continue;
        elements.push_back({{"a", a}, {"element", pbw_to_json(ctx, b)}});
    }
    json j = {{"tool_version", kToolVersion},
              {"n", ctx.rank()},
              {"variant", variant_name(ctx.variant())},
              {"degree", gamma.d},
              {"elements", elements}};
    std::filesystem::create_directories(dir_);
    const auto path = file_for(ctx, gamma);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::pair<ExpVec, DualPBWElement>> solve_degree_cached(DcbSolver& solver, const Root& gamma,
                                                                   const DcbCache* cache) {
    bool hit = cache != nullptr && cache->load_degree(solver, gamma);
    auto result = solver.solve_degree(gamma);
    if (cache != nullptr && !hit) cache->store_degree(solver, gamma);
    return result;
}

} // namespace qca
