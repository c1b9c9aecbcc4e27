#ifndef QAC_IDEMPOTENT_HPP
#define QAC_IDEMPOTENT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupalg.hpp"
#include "linalg.hpp"

namespace qac {

struct PrimitiveIdempotent {
    GroupRingElement element;
    CyclotomicClass inducing_class;
    std::size_t class_index = 0;  // position in the transform's class list
    unsigned dimension = 0;       // k = |class| = dim R e
};

/// F-dimension of R u: rank of {Y^h u}.
inline std::size_t module_dimension(const GroupRingElement& u) {
    linalg::Matrix rows;
    for (std::size_t h = 0; h < u.ring.size(); ++h) rows.push_back(shift(u, h).coeffs);
    return linalg::rank(u.ring.scalars(), std::move(rows));
}

/// F-dimension of R a_1 + ... + R a_l, as a space of l-tuples.
inline std::size_t module_dimension(const Tuple& a) {
    if (a.empty()) return 0;
    linalg::Matrix rows;
    for (std::size_t h = 0; h < a[0].ring.size(); ++h) {
        linalg::Row r;
        for (const auto& x : a) {
            auto s = shift(x, h);
            r.insert(r.end(), s.coeffs.begin(), s.coeffs.end());
        }
        rows.push_back(std::move(r));
    }
    return linalg::rank(a[0].ring.scalars(), std::move(rows));
}

/// Rank self-check of k_j is skipped above this |H| (cubic cost).
inline constexpr std::size_t kRankCheckLimit = 512;

/// One idempotent per class, in class order: the inverse transform of each
/// indicator spectrum.
inline std::vector<PrimitiveIdempotent> primitive_idempotents(const SpectralTransform& T) {
    std::vector<PrimitiveIdempotent> out;
    const auto& cls = T.classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
        PrimitiveIdempotent e{T.inverse(T.indicator({c})), cls[c], c, static_cast<unsigned>(cls[c].size())};
        if (T.ring().size() <= kRankCheckLimit && module_dimension(e.element) != e.dimension)
            throw std::logic_error("idempotent dimension differs from its class size");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<PrimitiveIdempotent> primitive_idempotents(const GroupRing& R) {
    return primitive_idempotents(SpectralTransform(R));
}

/// Sum of the primitive idempotents of the listed classes.
inline GroupRingElement idempotent_of_classes(const SpectralTransform& T, const std::vector<std::size_t>& classes) {
    return T.inverse(T.indicator(classes));
}

/// Classes where some a_i has nonzero spectrum.
inline std::vector<std::size_t> spectral_support(const Tuple& a, const SpectralTransform& T) {
    std::vector<char> hit(T.classes().size(), 0);
    for (const auto& x : a) {
        const auto s = T.forward(x);
        for (std::size_t c = 0; c < s.size(); ++c) hit[c] |= s.values[c] != 0;
    }
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < hit.size(); ++c)
        if (hit[c]) out.push_back(c);
    return out;
}

/// e with R e = R a_1 + ... + R a_l.
inline GroupRingElement idempotent_generator_of(const Tuple& a, const SpectralTransform& T) {
    return idempotent_of_classes(T, spectral_support(a, T));
}

/// f = 1 - e.
inline GroupRingElement idempotent_check_of(const Tuple& a, const SpectralTransform& T) {
    return sub(GroupRingElement::one(T.ring()), idempotent_generator_of(a, T));
}

/// Discrete logarithm to a fixed base of known order (baby-step giant-step).
class DiscreteLog {
public:
    DiscreteLog() = default;

    DiscreteLog(Field F, elem_t base, std::uint64_t order) : F_(std::move(F)), base_(base), order_(order) {
        step_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order_))));
        if (step_ == 0) step_ = 1;
        elem_t x = 1;
        for (std::uint64_t j = 0; j < step_; ++j) {
            baby_.emplace(x, j);
            x = F_.mul(x, base_);
        }
        giant_ = F_.inv(F_.upow(base_, step_));
    }

    std::uint64_t order() const { return order_; }

    /// m in [0, order) with base^m = y.
    std::uint64_t operator()(elem_t y) const {
        if (y == 0) throw std::domain_error("discrete log of zero");
        elem_t g = y;
        for (std::uint64_t i = 0; i <= step_; ++i) {
            auto it = baby_.find(g);
            if (it != baby_.end()) return (i * step_ + it->second) % order_;
            g = F_.mul(g, giant_);
        }
        throw std::logic_error("discrete log failed: element outside the subgroup generated by the base");
    }

private:
    Field F_;
    elem_t base_ = 1;
    std::uint64_t order_ = 1, step_ = 1;
    elem_t giant_ = 1;
    std::unordered_map<elem_t, std::uint64_t> baby_;
};

/// Refinement of a primitive idempotent e_j of R over S = F_{q^l}[H].
struct ComponentDecomposition {
    PrimitiveIdempotent parent;  // over R
    std::vector<PrimitiveIdempotent> children;  // over S; children[0] contains the parent's representative
    std::vector<unsigned> tau;  // child representative = q^tau * parent representative
    unsigned k = 1, d = 1, s = 1;
    std::uint64_t L = 1;
    std::uint64_t component_order = 2;  // q^{l d}; |T| counting the zero exponent
    Field component_field;              // F_{q^{l d}} built on its own
    Embedding component_into_spectrum;  // into the shared splitting field
    elem_t beta = 1;                    // primitive element of the component field, in the splitting field
    DiscreteLog log;
    std::vector<GroupRingElement> pi;  // pi_i: spectrum beta at child i, 0 elsewhere

    std::size_t exponent_set_size() const { return static_cast<std::size_t>(component_order); }
};

inline ComponentDecomposition refine_over_extension(const PrimitiveIdempotent& ej, const QacContext& ctx) {
    const SpectralTransform& RT = ctx.r_transform();
    const SpectralTransform& ST = ctx.s_transform();
    if (ej.class_index >= RT.classes().size() || !(RT.classes()[ej.class_index] == ej.inducing_class))
        throw std::invalid_argument("idempotent does not belong to this context");
    ComponentDecomposition dec;
    dec.parent = ej;
    const std::uint64_t q = ctx.q();
    const unsigned l = ctx.index();
    dec.k = static_cast<unsigned>(ej.inducing_class.size());
    dec.s = std::gcd(l, dec.k);
    dec.d = dec.k / dec.s;
    const auto [p, m] = nt::prime_power(q);
    dec.component_order = nt::checked_pow(q, std::uint64_t{l} * dec.d);
    dec.L = (dec.component_order - 1) / (nt::checked_pow(q, dec.k) - 1);

    const auto& scls = ST.classes();
    const std::size_t h = ej.inducing_class.representative;
    for (std::size_t c = 0; c < scls.size(); ++c) {
        if (!ej.inducing_class.contains(scls[c].representative)) continue;
        PrimitiveIdempotent child{ST.inverse(ST.indicator({c})), scls[c], c, static_cast<unsigned>(scls[c].size())};
        unsigned t = 0;
        std::size_t x = h;
        const auto qq = static_cast<std::int64_t>(q % ctx.H().exponent());
        while (x != scls[c].representative) {
            x = ctx.H().scalar_multiple(qq, x);
            ++t;
        }
        dec.tau.push_back(t);
        dec.children.push_back(std::move(child));
    }
    if (dec.children.size() != dec.s || dec.children[0].inducing_class.representative != h)
        throw std::logic_error("refinement does not split into gcd(l, k) children");
    for (const auto& c : dec.children)
        if (c.dimension != dec.d) throw std::logic_error("child class size differs from d");

    dec.component_field = Field::create(p, m * l * dec.d);
    dec.component_into_spectrum = Embedding(dec.component_field, ST.splitting_field());
    dec.beta = dec.component_order > 2 ? dec.component_into_spectrum(dec.component_field.primitive_element()) : 1;
    dec.log = DiscreteLog(ST.splitting_field(), dec.beta, dec.component_order - 1);
    for (const auto& c : dec.children) {
        auto sp = ST.empty();
        sp.values[c.class_index] = dec.beta;
        dec.pi.push_back(ST.inverse(sp));
    }
    return dec;
}

inline const GroupRingElement& component_primitive_element(std::size_t child, const ComponentDecomposition& dec) {
    return dec.pi.at(child);
}

}  // namespace qac

#endif  // QAC_IDEMPOTENT_HPP
