#pragma once

/// Finite groups given by multiplication tables, and their group algebras.
/// Tables use indices 0..m-1; table[i][j] is the index of g_i g_j.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "phk/algebra.hpp"
#include "phk/error.hpp"

namespace phk {

using GroupTable = std::vector<std::vector<std::size_t>>;

/// Validates closure, associativity, a two-sided identity and inverses.
/// Returns the identity index; throws StructuralError when not a group.
inline std::size_t validate_group_table(const GroupTable& t) {
    const std::size_t m = t.size();
    if (m == 0) throw StructuralError("group table is empty");
    for (const auto& row : t) {
        if (row.size() != m) throw StructuralError("group table is ragged");
        for (std::size_t v : row)
            if (v >= m) throw StructuralError("group table entry out of range");
    }
    std::size_t e = m;
    for (std::size_t i = 0; i < m; ++i) {
        bool left_id = true, right_id = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (t[i][j] != j) left_id = false;
            if (t[j][i] != j) right_id = false;
        }
        if (left_id && right_id) { e = i; break; }
    }
    if (e == m) throw StructuralError("group table has no identity");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]])
                    throw StructuralError("group table is not associative");
    for (std::size_t i = 0; i < m; ++i) {
        bool has_inv = false;
        for (std::size_t j = 0; j < m; ++j)
            if (t[i][j] == e && t[j][i] == e) { has_inv = true; break; }
        if (!has_inv) throw StructuralError("group table element has no inverse");
    }
    return e;
}

inline std::size_t group_inverse(const GroupTable& t, std::size_t e, std::size_t g) {
    for (std::size_t j = 0; j < t.size(); ++j)
        if (t[g][j] == e && t[j][g] == e) return j;
    throw StructuralError("element has no inverse");
}

inline GroupTable cyclic_table(std::size_t n) {
    GroupTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

/// Symmetric group on {0..m-1}; elements are the permutations in
/// lexicographic one-line order, composition is (p*q)(x) = p(q(x)).
inline GroupTable symmetric_table(std::size_t m) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(
            std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    GroupTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> comp(m);
            for (std::size_t x = 0; x < m; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return t;
}

/// Group algebra k[G]: basis indexed by group elements, e_i e_j = e_{ij}.
inline FinDimAlgebra group_algebra(const GroupTable& t, const Field& f) {
    const std::size_t e = validate_group_table(t);
    const std::size_t m = t.size();
    FinDimAlgebra a(m, f);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.c(i, j, t[i][j]) = f.one();
    a.set_unit(basis_vec(m, e, f));
    return a;
}

} // namespace phk
