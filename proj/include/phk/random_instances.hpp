#pragma once

/// Deterministic family of symmetric partial actions for stress sweeps:
/// a cyclic group C_n (n = 2, 3, 4) acts globally on a product of at most
/// four copies of the base field by a coordinate permutation with
/// sigma^n = id; restricting to the ideal spanned by a random subset of
/// the coordinates gives classical partial action data on the restricted
/// product algebra. Instances are reproducible from their seed alone and
/// serialize through the spec format.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "phk/fixtures.hpp"
#include "phk/paction.hpp"
#include "phk/scalar.hpp"
#include "phk/specfile.hpp"

namespace phk {

/// splitmix64: tiny, seedable, stable across platforms.
struct SplitMix {
    std::uint64_t state;

    explicit SplitMix(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct RandomInstance {
    std::uint64_t seed;
    std::string label;
    Field field;
    GroupPartialActionData data; // on the restricted algebra
    PartialAction action;        // validated and marked symmetric
};

inline RandomInstance random_instance(std::uint64_t seed) {
    SplitMix rng(seed ^ 0x5bf0'3635'dce1'3801ull);

    const std::size_t n = 2 + rng.below(3); // group order
    const std::size_t m = 1 + rng.below(4); // ambient coordinates

    Field field = Field::rationals();
    switch (rng.below(4)) {
        case 0: break;
        case 1: field = Field::prime(3); break;
        case 2: field = Field::prime(5); break;
        default: field = Field::prime(7); break;
    }

    // permutation of the coordinates with sigma^n = id: shuffle, then cut
    // into cycles whose lengths divide n
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    for (std::size_t i = m; i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(order[i - 1], order[j]);
    }
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<std::size_t> sigma(m);
    std::size_t used = 0;
    while (used < m) {
        std::size_t d = divisors[rng.below(divisors.size())];
        if (d > m - used) d = 1;
        for (std::size_t i = 0; i < d; ++i)
            sigma[order[used + i]] = order[used + (i + 1) % d];
        used += d;
    }

    // nonempty support
    const std::uint64_t bits = 1 + rng.below((1ull << m) - 1);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < m; ++i)
        if (bits & (1ull << i)) support.push_back(i);
    const std::size_t k = support.size();
    std::vector<std::size_t> pos(m, m); // ambient coordinate -> support index
    for (std::size_t i = 0; i < k; ++i) pos[support[i]] = i;

    // powers of sigma
    std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(m));
    for (std::size_t c = 0; c < m; ++c) power[0][c] = c;
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t c = 0; c < m; ++c) power[g][c] = sigma[power[g - 1][c]];

    FinDimAlgebra restricted = product_field_algebra(k, field);
    std::vector<Vec> idempotents;
    std::vector<Matrix> isos;
    for (std::size_t g = 0; g < n; ++g) {
        Vec idem = vec_zero(k, field);
        Matrix iso(k, k, field);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t image = power[g][support[j]];
            if (pos[image] < m) {
                idem[pos[image]] = field.one();
                iso.at(pos[image], j) = field.one();
            }
        }
        idempotents.push_back(std::move(idem));
        isos.push_back(std::move(iso));
    }

    GroupPartialActionData data{cyclic_table(n), restricted, std::move(idempotents),
                                std::move(isos)};
    PartialAction action = from_group_partial_action(data);

    std::string label = "C" + std::to_string(n) + " on k^" + std::to_string(m) +
                        " restricted to {";
    for (std::size_t i = 0; i < k; ++i)
        label += (i ? "," : "") + std::to_string(support[i]);
    label += "} over " + field.to_string();

    return RandomInstance{seed, std::move(label), field, std::move(data),
                          std::move(action)};
}

inline SpecFile to_specfile(const RandomInstance& inst) {
    SpecFile s;
    s.name = inst.label;
    s.field = inst.field;
    s.algebra = inst.data.algebra;
    s.group_action = inst.data;
    return s;
}

} // namespace phk
