#pragma once

#include <random>
#include <vector>

#include "liealc/alcove.hpp"
#include "liealc/lie_data.hpp"

namespace liealc::testing {

// Deterministic generators for property tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int max_num, int max_den) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    // Random barycentric tuple with small denominators.
    std::vector<Rational> barycentric(std::size_t size, int max_weight = 8) {
        std::vector<long> w(size);
        long total = 0;
        while (total == 0) {
            total = 0;
            for (auto& x : w) total += (x = integer(0, max_weight));
        }
        std::vector<Rational> t;
        for (long x : w) t.emplace_back(x, total);
        return t;
    }

    AlcovePoint alcove_point(const Alcove& alc) { return from_barycentric(alc, barycentric(alc.vertices().size())); }

    // Rational combination of simple roots, so it lies in the root space.
    RationalVector root_space_point(const RootSystem& rs, int max_num = 12, int max_den = 6) {
        RationalVector v(rs.ambient_dim());
        for (const auto& a : rs.simple_roots()) v += rational(max_num, max_den) * a;
        return v;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline std::vector<SimpleType> types_with_center() {
    std::vector<SimpleType> out;
    for (const auto& t : catalog_types())
        if (build_root_system(t).center_order() > 1) out.push_back(t);
    return out;
}

}  // namespace liealc::testing
