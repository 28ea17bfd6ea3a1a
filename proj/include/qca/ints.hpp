#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qca {

using Int = boost::multiprecision::cpp_int;

// Exponent vector over the 2n generator slots (also reused for torus and
// polynomial exponents).
using ExpVec = std::vector<int>;

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct ExpVecHash {
    std::size_t operator()(const ExpVec& e) const {
        std::size_t h = e.size();
        for (int x : e) h = hash_combine(h, static_cast<std::size_t>(x) + 0x7fff);
        return h;
    }
};

inline Int int_binomial(long k, long l) {
    if (l < 0 || l > k) return 0;
    Int r = 1;
    for (long j = 1; j <= l; ++j) {
        r *= (k - l + j);
        r /= j;
    }
    return r;
}

} // namespace qca
