#ifndef QAC_CHECKS_SUPPORT_HPP
#define QAC_CHECKS_SUPPORT_HPP

#include <random>

#include "qac/groupalg.hpp"

namespace qac::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline elem_t random_scalar(const Field& F) { return std::uniform_int_distribution<elem_t>(0, F.order() - 1)(rng()); }

inline GroupRingElement random_element(const GroupRing& R) {
    auto u = GroupRingElement::zero(R);
    for (auto& c : u.coeffs) c = random_scalar(R.scalars());
    return u;
}

inline Tuple random_tuple(const GroupRing& R, std::size_t l) {
    Tuple a;
    for (std::size_t i = 0; i < l; ++i) a.push_back(random_element(R));
    return a;
}

/// Element number `code` in base-|F| digit order, position 0 least significant.
inline GroupRingElement element_at(const GroupRing& R, std::uint64_t code) {
    auto u = GroupRingElement::zero(R);
    for (auto& c : u.coeffs) {
        c = code % R.scalars().order();
        code /= R.scalars().order();
    }
    return u;
}

inline SubgroupContext subgroup(const std::string& group, const std::string& gens) {
    const auto G = AbelianGroup::parse(group);
    return SubgroupContext::make(G, parse_generators(G, gens));
}

}  // namespace qac::testing

#endif  // QAC_CHECKS_SUPPORT_HPP
