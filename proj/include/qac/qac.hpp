#ifndef QAC_QAC_HPP
#define QAC_QAC_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupalg.hpp"
#include "idempotent.hpp"
#include "lincode.hpp"

namespace qac {

/// Position of a generator inside one component Se_j: first nonzero child t
/// (0-based), its exponent nu_t in [0, L), and exponents of the later children
/// (nullopt = the zero element).
struct ComponentIndex {
    std::size_t t = 0;
    std::uint64_t nu = 0;
    std::vector<std::optional<std::uint64_t>> trailing;

    friend bool operator==(const ComponentIndex&, const ComponentIndex&) = default;

    std::string to_string() const {
        std::string s = "t=" + std::to_string(t + 1) + " nu=" + std::to_string(nu);
        if (!trailing.empty()) {
            s += " [";
            for (std::size_t i = 0; i < trailing.size(); ++i) {
                if (i) s += ",";
                s += trailing[i] ? std::to_string(*trailing[i]) : "inf";
            }
            s += "]";
        }
        return s;
    }
};

using RepresentativeIndex = std::vector<ComponentIndex>;

/// (q^{l k} - 1) / (q^k - 1): number of codes per component.
inline std::uint64_t component_code_count(std::uint64_t q, unsigned l, unsigned k) {
    return (nt::checked_pow(q, std::uint64_t{l} * k) - 1) / (nt::checked_pow(q, k) - 1);
}

/// Product over the chosen classes; the empty choice (zero code) counts 1.
inline std::uint64_t count_one_generator(const QacContext& ctx, const std::vector<std::size_t>& classes) {
    std::uint64_t total = 1;
    for (auto c : classes)
        total = nt::checked_mul(
            total, component_code_count(ctx.q(), ctx.index(), static_cast<unsigned>(ctx.r_transform().classes().at(c).size())));
    return total;
}

inline bool is_full_generator(const Tuple& a, const GroupRingElement& e, const SpectralTransform& T) {
    return idempotent_generator_of(a, T) == e;
}

/// Lazy, indexable list of 1-generator codes with a fixed idempotent
/// generator e = sum of the chosen primitive idempotents. Index order is mixed
/// radix over components, the first chosen class most significant; within a
/// component, t ascending, then nu_t, then trailing exponents with zero first.
class GeneratorEnumerator {
public:
    GeneratorEnumerator(QacContext ctx, std::vector<std::size_t> classes) : ctx_(std::move(ctx)), classes_(std::move(classes)) {
        std::sort(classes_.begin(), classes_.end());
        classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
        const auto prim = primitive_idempotents(ctx_.r_transform());
        for (auto c : classes_) {
            if (c >= prim.size()) throw std::out_of_range("idempotent number " + std::to_string(c + 1) + " does not exist");
            decs_.push_back(refine_over_extension(prim[c], ctx_));
            counts_.push_back(component_code_count(ctx_.q(), ctx_.index(), decs_.back().k));
        }
        total_ = 1;
        for (auto n : counts_) total_ = nt::checked_mul(total_, n);
        idempotent_ = idempotent_of_classes(ctx_.r_transform(), classes_);
    }

    const QacContext& context() const { return ctx_; }
    const std::vector<std::size_t>& classes() const { return classes_; }
    const std::vector<ComponentDecomposition>& decompositions() const { return decs_; }
    std::uint64_t count() const { return total_; }
    std::uint64_t component_count(std::size_t j) const { return counts_.at(j); }
    const GroupRingElement& idempotent() const { return idempotent_; }
    std::size_t dimension() const {
        std::size_t k = 0;
        for (const auto& d : decs_) k += d.k;
        return k;
    }

    ComponentIndex decode_component(std::size_t j, std::uint64_t rank) const {
        const auto& d = decs_.at(j);
        const std::uint64_t T = d.component_order;
        for (std::size_t t = 0; t < d.s; ++t) {
            const std::uint64_t tail = nt::checked_pow(T, d.s - 1 - t);
            const std::uint64_t block = d.L * tail;
            if (rank >= block) {
                rank -= block;
                continue;
            }
            ComponentIndex ci{t, rank / tail, std::vector<std::optional<std::uint64_t>>(d.s - 1 - t)};
            std::uint64_t rem = rank % tail;
            for (std::size_t i = ci.trailing.size(); i-- > 0;) {
                const std::uint64_t digit = rem % T;
                rem /= T;
                if (digit) ci.trailing[i] = digit - 1;
            }
            return ci;
        }
        throw std::out_of_range("component rank out of range");
    }

    std::uint64_t encode_component(std::size_t j, const ComponentIndex& ci) const {
        const auto& d = decs_.at(j);
        const std::uint64_t T = d.component_order;
        std::uint64_t rank = 0;
        for (std::size_t t = 0; t < ci.t; ++t) rank += d.L * nt::checked_pow(T, d.s - 1 - t);
        std::uint64_t tail = 0;
        for (const auto& x : ci.trailing) tail = tail * T + (x ? *x + 1 : 0);
        return rank + ci.nu * nt::checked_pow(T, d.s - 1 - ci.t) + tail;
    }

    RepresentativeIndex decode(std::uint64_t index) const {
        if (index >= total_) throw std::out_of_range("generator index " + std::to_string(index) + " out of range");
        RepresentativeIndex r(decs_.size());
        for (std::size_t j = decs_.size(); j-- > 0;) {
            r[j] = decode_component(j, index % counts_[j]);
            index /= counts_[j];
        }
        return r;
    }

    std::uint64_t encode(const RepresentativeIndex& r) const {
        std::uint64_t index = 0;
        for (std::size_t j = 0; j < decs_.size(); ++j) index = index * counts_[j] + encode_component(j, r.at(j));
        return index;
    }

    /// S-spectrum of the representative.
    SpectrumView spectrum(const RepresentativeIndex& r) const {
        const auto& ST = ctx_.s_transform();
        const Field& E = ST.splitting_field();
        auto sp = ST.empty();
        for (std::size_t j = 0; j < decs_.size(); ++j) {
            const auto& d = decs_[j];
            sp.values[d.children[r[j].t].class_index] = E.upow(d.beta, r[j].nu);
            for (std::size_t i = 0; i < r[j].trailing.size(); ++i)
                if (r[j].trailing[i]) sp.values[d.children[r[j].t + 1 + i].class_index] = E.upow(d.beta, *r[j].trailing[i]);
        }
        return sp;
    }

    /// A in S.
    GroupRingElement generator_element(std::uint64_t index) const { return ctx_.s_transform().inverse(spectrum(decode(index))); }
    /// a = varphi^{-1}(A) in R^l.
    Tuple generator(std::uint64_t index) const { return varphi_inverse(generator_element(index), ctx_); }

    /// Representatives of [(Se_j)*] in index order, as elements of S.
    std::vector<GroupRingElement> component_representatives(std::size_t j) const {
        std::vector<GroupRingElement> out;
        const auto& ST = ctx_.s_transform();
        const Field& E = ST.splitting_field();
        const auto& d = decs_.at(j);
        for (std::uint64_t r = 0; r < counts_[j]; ++r) {
            const auto ci = decode_component(j, r);
            auto sp = ST.empty();
            sp.values[d.children[ci.t].class_index] = E.upow(d.beta, ci.nu);
            for (std::size_t i = 0; i < ci.trailing.size(); ++i)
                if (ci.trailing[i]) sp.values[d.children[ci.t + 1 + i].class_index] = E.upow(d.beta, *ci.trailing[i]);
            out.push_back(ST.inverse(sp));
        }
        return out;
    }

    /// Canonical form of A in S (A must lie in Se with every component nonzero).
    RepresentativeIndex canonical_form(const GroupRingElement& A) const {
        const auto& ST = ctx_.s_transform();
        return canonical_form(ST.forward(A));
    }

    RepresentativeIndex canonical_form(const Tuple& a) const { return canonical_form(varphi(a, ctx_)); }

    RepresentativeIndex canonical_form(const SpectrumView& sp) const {
        const Field& E = ctx_.s_transform().splitting_field();
        std::vector<char> inside(sp.size(), 0);
        RepresentativeIndex out;
        for (std::size_t j = 0; j < decs_.size(); ++j) {
            const auto& d = decs_[j];
            std::vector<elem_t> v;
            for (const auto& c : d.children) {
                v.push_back(sp.values[c.class_index]);
                inside[c.class_index] = 1;
            }
            out.push_back(canonical_component(d, v, E));
        }
        for (std::size_t c = 0; c < sp.size(); ++c)
            if (!inside[c] && sp.values[c] != 0)
                throw precondition_error("generator has a component outside the chosen idempotent");
        return out;
    }

    std::uint64_t canonical_index(const GroupRingElement& A) const { return encode(canonical_form(A)); }
    std::uint64_t canonical_index(const Tuple& a) const { return encode(canonical_form(a)); }

    /// Index of the code generated by A^q. Needs a normal basis, where A^q
    /// corresponds to a coordinate permutation of the code of A.
    std::uint64_t frobenius_successor(std::uint64_t index) const {
        require_normal_basis();
        return canonical_index(ring_frobenius(generator_element(index), ctx_.q()));
    }

    std::vector<std::uint64_t> frobenius_orbit(std::uint64_t index) const {
        std::vector<std::uint64_t> orbit{index};
        for (std::uint64_t x = frobenius_successor(index); x != index; x = frobenius_successor(x)) {
            orbit.push_back(x);
            if (orbit.size() > 4096) throw std::logic_error("Frobenius orbit does not close");
        }
        return orbit;
    }

    bool is_orbit_minimum(std::uint64_t index) const {
        const auto orbit = frobenius_orbit(index);
        return *std::min_element(orbit.begin(), orbit.end()) == index;
    }

    void require_normal_basis() const {
        if (!is_normal_basis(ctx_.basis(), ctx_.extension_field(), ctx_.q()))
            throw precondition_error(
                "Frobenius deduplication needs a normal basis {alpha^(q^i)} of F_(q^l) over F_q: only then does A -> A^q "
                "permute coordinates of the code; rerun with the normal basis");
    }

private:
    ComponentIndex canonical_component(const ComponentDecomposition& d, const std::vector<elem_t>& v, const Field& E) const {
        std::size_t t = 0;
        while (t < v.size() && v[t] == 0) ++t;
        if (t == v.size()) throw precondition_error("generator is zero on an idempotent component: not a full generator");
        const std::uint64_t n = d.component_order - 1;
        const std::uint64_t m = d.log(v[t]);
        ComponentIndex ci{t, m % d.L, {}};
        // Unit with value c at child t; c lies in the order-(q^k - 1) subgroup.
        const elem_t c = E.upow(d.beta, (ci.nu + n - m % n) % n);
        elem_t w = c;
        for (unsigned i = 0; i < (d.k - d.tau[t]) % d.k; ++i) w = E.upow(w, ctx_.q());
        for (std::size_t i = t + 1; i < v.size(); ++i) {
            elem_t wi = w;
            for (unsigned r = 0; r < d.tau[i]; ++r) wi = E.upow(wi, ctx_.q());
            const elem_t x = E.mul(v[i], wi);
            ci.trailing.push_back(x ? std::optional<std::uint64_t>(d.log(x)) : std::nullopt);
        }
        return ci;
    }

    QacContext ctx_;
    std::vector<std::size_t> classes_;
    std::vector<ComponentDecomposition> decs_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 1;
    GroupRingElement idempotent_;
};

/// R a = R b: same idempotent generator and b = u a for a unit u of R e,
/// decided from the spectral ratios component by component.
inline bool same_code(const Tuple& a, const Tuple& b, const QacContext& ctx) {
    const auto& RT = ctx.r_transform();
    const auto sa = spectral_support(a, RT);
    if (sa != spectral_support(b, RT)) return false;
    if (sa.empty()) return true;
    const GeneratorEnumerator en(ctx, sa);
    const auto& ST = ctx.s_transform();
    const Field& E = ST.splitting_field();
    const auto A = ST.forward(varphi(a, ctx)), B = ST.forward(varphi(b, ctx));
    for (const auto& d : en.decompositions()) {
        std::size_t t = 0;
        while (A.values[d.children[t].class_index] == 0) ++t;
        const elem_t c = E.div(B.values[d.children[t].class_index], A.values[d.children[t].class_index]);
        const std::uint64_t qk = nt::checked_pow(ctx.q(), d.k);
        if (E.upow(c, qk) != c) return false;  // not in F_{q^k}
        elem_t w = c;
        for (unsigned i = 0; i < (d.k - d.tau[t]) % d.k; ++i) w = E.upow(w, ctx.q());
        for (std::size_t i = 0; i < d.children.size(); ++i) {
            elem_t wi = w;
            for (unsigned r = 0; r < d.tau[i]; ++r) wi = E.upow(wi, ctx.q());
            if (E.mul(A.values[d.children[i].class_index], wi) != B.values[d.children[i].class_index]) return false;
        }
    }
    return true;
}

/// Orbit minima of A -> A^q among indices in [lo, hi).
inline std::vector<std::uint64_t> frobenius_dedup(const GeneratorEnumerator& en, std::uint64_t lo, std::uint64_t hi) {
    en.require_normal_basis();
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = lo; i < std::min(hi, en.count()); ++i)
        if (en.is_orbit_minimum(i)) out.push_back(i);
    return out;
}

enum class CodeView { concatenated, group };

/// Span of {Y^h a}: concatenated blocks (length l |H|) or, in the group view,
/// Phi^{-1} of each row (length |G|).
inline LinearCode code_from_generator(const Tuple& a, const QacContext& ctx, CodeView view = CodeView::concatenated) {
    linalg::Matrix rows;
    for (std::size_t h = 0; h < ctx.H().subgroup_order(); ++h) {
        Tuple s;
        for (const auto& x : a) s.push_back(shift(x, h));
        if (view == CodeView::group) {
            rows.push_back(phi_merge(s, ctx));
        } else {
            linalg::Row r;
            for (const auto& x : s) r.insert(r.end(), x.coeffs.begin(), x.coeffs.end());
            rows.push_back(std::move(r));
        }
    }
    const std::size_t n = ctx.index() * ctx.H().subgroup_order();
    auto C = LinearCode::from_rows(ctx.base_field(), n, rows);
    std::size_t k = 0;
    for (auto c : spectral_support(a, ctx.r_transform())) k += ctx.r_transform().classes()[c].size();
    if (C.dimension() != k) throw std::logic_error("code dimension differs from the idempotent dimension");
    return C;
}

/// C_(a,b) = {(f a, f b)}: length 2|H|, positions in enumeration order of H.
inline LinearCode c_ab_code(const GroupRingElement& a, const GroupRingElement& b) {
    detail::same_ring(a, b);
    linalg::Matrix rows;
    for (std::size_t h = 0; h < a.ring.size(); ++h) {
        auto r = shift(a, h).coeffs;
        const auto s = shift(b, h).coeffs;
        r.insert(r.end(), s.begin(), s.end());
        rows.push_back(std::move(r));
    }
    return LinearCode::from_rows(a.ring.scalars(), 2 * a.ring.size(), rows);
}

}  // namespace qac

#endif  // QAC_QAC_HPP
