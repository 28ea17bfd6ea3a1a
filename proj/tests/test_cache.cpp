#include <doctest.h>

#include "qca/cache.hpp"

#include <filesystem>
#include <fstream>

using namespace qca;

TEST_CASE("dcb disk cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "qca_cache_test";
    std::filesystem::remove_all(dir);
    DcbCache cache(dir);

    Context ctx(5, Variant::full);
    PbwAlgebra alg(ctx);
    const Root gamma = Root::interval(5, 1, 3) + Root::interval(5, 2, 3);

    DcbSolver cold(alg);
    auto first = solve_degree_cached(cold, gamma, &cache);
    REQUIRE(!first.empty());
    // cache file exists and no stray temp files remain
    bool has_file = false, has_tmp = false;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".json") has_file = true;
        if (e.path().extension() == ".tmp") has_tmp = true;
    }
    CHECK(has_file);
    CHECK_FALSE(has_tmp);

    // a fresh solver served from the cache gives identical elements
    DcbSolver warm(alg);
    auto second = solve_degree_cached(warm, gamma, &cache);
    REQUIRE(second.size() == first.size());
    for (std::size_t t = 0; t < first.size(); ++t) {
        CHECK(first[t].first == second[t].first);
        CHECK(first[t].second == second[t].second);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt cache entries are recomputed") {
    const auto dir = std::filesystem::temp_directory_path() / "qca_cache_corrupt";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    Context ctx(3, Variant::full);
    PbwAlgebra alg(ctx);
    const Root gamma = Root::interval(3, 1, 3);
    {
        std::ofstream bad(dir / "dcb_n3_full_1-1-1.json");
        bad << "{not json";
    }
    DcbCache cache(dir);
    DcbSolver solver(alg);
    auto result = solve_degree_cached(solver, gamma, &cache);
    CHECK(!result.empty());
    std::filesystem::remove_all(dir);
}
