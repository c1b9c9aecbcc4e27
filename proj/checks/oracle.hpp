#ifndef QAC_CHECKS_ORACLE_HPP
#define QAC_CHECKS_ORACLE_HPP

// Brute-force reference for small rings: every tuple, every submodule by span
// comparison, every idempotent by squaring. No transforms involved.

#include <map>
#include <set>
#include <vector>

#include "qac/groupalg.hpp"
#include "qac/linalg.hpp"
#include "support.hpp"

namespace qac::testing {

using Subspace = linalg::Matrix;  // rref rows

inline Subspace span_of_tuple(const Tuple& a) {
    linalg::Matrix rows;
    const std::size_t m = a.at(0).ring.size();
    for (std::size_t h = 0; h < m; ++h) {
        linalg::Row r;
        for (const auto& x : a) {
            const auto s = shift(x, h);
            r.insert(r.end(), s.coeffs.begin(), s.coeffs.end());
        }
        rows.push_back(std::move(r));
    }
    return linalg::rref(a[0].ring.scalars(), std::move(rows)).rows;
}

/// Ideal R a_1 + ... + R a_l of R.
inline Subspace ideal_sum(const Tuple& a) {
    linalg::Matrix rows;
    for (const auto& x : a)
        for (std::size_t h = 0; h < x.ring.size(); ++h) rows.push_back(shift(x, h).coeffs);
    return linalg::rref(a.at(0).ring.scalars(), std::move(rows)).rows;
}

// (r u)(g) = sum_h r(h) u(g - h), computed with G arithmetic directly.
inline std::vector<elem_t> act_on_ambient(const GroupRingElement& r, const std::vector<elem_t>& u) {
    const SubgroupContext& H = r.ring.group();
    const AbelianGroup& G = H.group();
    const Field& F = r.ring.scalars();
    std::vector<elem_t> w(u.size(), 0);
    for (std::size_t h = 0; h < r.coeffs.size(); ++h) {
        if (!r.coeffs[h]) continue;
        for (std::uint64_t g = 0; g < u.size(); ++g) {
            const std::uint64_t t = G.index_of(G.add(H.element(h), G.element(g)));
            w[t] = F.add(w[t], F.mul(r.coeffs[h], u[g]));
        }
    }
    return w;
}

inline std::uint64_t ring_cardinality(const GroupRing& R) { return nt::checked_pow(R.scalars().order(), R.size()); }

inline std::vector<GroupRingElement> all_elements(const GroupRing& R) {
    std::vector<GroupRingElement> out;
    for (std::uint64_t c = 0; c < ring_cardinality(R); ++c) out.push_back(element_at(R, c));
    return out;
}

inline std::vector<GroupRingElement> all_idempotents(const GroupRing& R) {
    std::vector<GroupRingElement> out;
    for (auto& u : all_elements(R))
        if (convolve(u, u) == u) out.push_back(u);
    return out;
}

/// The idempotent e with R e = R a_1 + ... + R a_l.
inline GroupRingElement brute_idempotent(const Tuple& a, const std::vector<GroupRingElement>& idempotents) {
    const auto target = ideal_sum(a);
    for (const auto& e : idempotents)
        if (ideal_sum({e}) == target) return e;
    throw std::logic_error("no idempotent generates the ideal");
}

inline GroupRingElement brute_idempotent(const Tuple& a, const std::map<Subspace, GroupRingElement>& by_ideal) {
    auto it = by_ideal.find(ideal_sum(a));
    if (it == by_ideal.end()) throw std::logic_error("no idempotent generates the ideal");
    return it->second;
}

/// Units of R e: x = x e with x y = e for some y in R e.
inline std::vector<GroupRingElement> brute_units(const GroupRingElement& e) {
    std::set<std::vector<elem_t>> seen;
    std::vector<GroupRingElement> members;
    for (auto& f : all_elements(e.ring)) {
        auto x = convolve(f, e);
        if (seen.insert(x.coeffs).second) members.push_back(x);
    }
    std::vector<GroupRingElement> units;
    for (const auto& x : members)
        for (const auto& y : members)
            if (convolve(x, y) == e) {
                units.push_back(x);
                break;
            }
    return units;
}

struct BruteCensus {
    /// idempotent coefficients -> distinct code subspaces with that idempotent
    std::map<std::vector<elem_t>, std::set<Subspace>> codes;
    std::uint64_t tuples = 0;
};

inline BruteCensus brute_census(const GroupRing& R, std::size_t l) {
    BruteCensus out;
    std::map<Subspace, GroupRingElement> by_ideal;
    for (auto& e : all_idempotents(R)) by_ideal.emplace(ideal_sum({e}), e);
    const auto elems = all_elements(R);
    std::vector<std::size_t> digits(l, 0);
    for (;;) {
        Tuple a;
        for (auto d : digits) a.push_back(elems[d]);
        out.codes[brute_idempotent(a, by_ideal).coeffs].insert(span_of_tuple(a));
        ++out.tuples;
        std::size_t i = 0;
        while (i < l && ++digits[i] == elems.size()) digits[i++] = 0;
        if (i == l) break;
    }
    return out;
}

}  // namespace qac::testing

#endif  // QAC_CHECKS_ORACLE_HPP
