#ifndef QAC_GROUPALG_HPP
#define QAC_GROUPALG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abgroup.hpp"
#include "field.hpp"

namespace qac {

/// F[H]: scalars plus an enumerated subgroup. Coefficients are indexed by H position.
class GroupRing {
public:
    GroupRing() = default;
    GroupRing(Field scalars, SubgroupContext H) : F_(std::move(scalars)), H_(std::move(H)) {}

    const Field& scalars() const { return F_; }
    const SubgroupContext& group() const { return H_; }
    std::size_t size() const { return H_.subgroup_order(); }

    friend bool operator==(const GroupRing& a, const GroupRing& b) { return a.F_ == b.F_ && a.H_ == b.H_; }

    std::string describe() const { return F_.describe() + "[" + H_.describe() + "]"; }

private:
    Field F_;
    SubgroupContext H_;
};

struct GroupRingElement {
    GroupRing ring;
    std::vector<elem_t> coeffs;

    static GroupRingElement zero(const GroupRing& R) { return {R, std::vector<elem_t>(R.size(), 0)}; }
    static GroupRingElement one(const GroupRing& R) { return monomial(R, 0); }
    /// c Y^h, h an H position.
    static GroupRingElement monomial(const GroupRing& R, std::size_t pos, elem_t c = 1) {
        auto u = zero(R);
        u.coeffs.at(pos) = c;
        return u;
    }
    static GroupRingElement from_coeffs(const GroupRing& R, std::vector<elem_t> c) {
        if (c.size() != R.size())
            throw std::invalid_argument("expected " + std::to_string(R.size()) + " coefficients, got " +
                                        std::to_string(c.size()));
        for (auto x : c)
            if (!R.scalars().contains(x)) throw std::invalid_argument("coefficient outside scalar field");
        return {R, std::move(c)};
    }
    /// Comma-separated coefficients in enumeration order.
    static GroupRingElement parse(const GroupRing& R, const std::string& text) {
        std::vector<elem_t> c;
        std::string tok;
        int depth = 0;
        for (char ch : text + ",") {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0) {
                c.push_back(R.scalars().parse(tok));
                tok.clear();
            } else {
                tok += ch;
            }
        }
        return from_coeffs(R, std::move(c));
    }

    bool is_zero() const {
        for (auto x : coeffs)
            if (x) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += ring.scalars().format(coeffs[i]);
        }
        return s;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.ring == b.ring && a.coeffs == b.coeffs;
    }
};

using Tuple = std::vector<GroupRingElement>;

namespace detail {
inline const GroupRing& same_ring(const GroupRingElement& u, const GroupRingElement& v) {
    if (!(u.ring == v.ring)) throw std::invalid_argument("ring mismatch: " + u.ring.describe() + " vs " + v.ring.describe());
    return u.ring;
}
}  // namespace detail

inline GroupRingElement add(const GroupRingElement& u, const GroupRingElement& v) {
    const Field& F = detail::same_ring(u, v).scalars();
    auto w = u;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] = F.add(w.coeffs[i], v.coeffs[i]);
    return w;
}

inline GroupRingElement neg(const GroupRingElement& u) {
    auto w = u;
    for (auto& x : w.coeffs) x = u.ring.scalars().neg(x);
    return w;
}

inline GroupRingElement sub(const GroupRingElement& u, const GroupRingElement& v) { return add(u, neg(v)); }

inline GroupRingElement scale(elem_t c, const GroupRingElement& u) {
    auto w = u;
    for (auto& x : w.coeffs) x = u.ring.scalars().mul(c, x);
    return w;
}

/// (u v)(g) = sum_h u(h) v(g - h).
inline GroupRingElement convolve(const GroupRingElement& u, const GroupRingElement& v) {
    const GroupRing& R = detail::same_ring(u, v);
    const Field& F = R.scalars();
    const SubgroupContext& H = R.group();
    auto w = GroupRingElement::zero(R);
    for (std::size_t a = 0; a < u.coeffs.size(); ++a) {
        if (!u.coeffs[a]) continue;
        for (std::size_t b = 0; b < v.coeffs.size(); ++b) {
            if (!v.coeffs[b]) continue;
            auto& t = w.coeffs[H.add(a, b)];
            t = F.add(t, F.mul(u.coeffs[a], v.coeffs[b]));
        }
    }
    return w;
}

/// Y^h u.
inline GroupRingElement shift(const GroupRingElement& u, std::size_t pos) {
    auto w = GroupRingElement::zero(u.ring);
    for (std::size_t g = 0; g < u.coeffs.size(); ++g) w.coeffs[u.ring.group().add(pos, g)] = u.coeffs[g];
    return w;
}

/// u^q for q a power of the characteristic: coefficients raised to q, Y^g -> Y^{qg}.
inline GroupRingElement ring_frobenius(const GroupRingElement& u, std::uint64_t q) {
    const Field& F = u.ring.scalars();
    const SubgroupContext& H = u.ring.group();
    std::uint64_t t = q;
    while (t % F.characteristic() == 0) t /= F.characteristic();
    if (t != 1 || q == 1) throw std::invalid_argument("Frobenius exponent must be a power of the characteristic");
    const auto qq = static_cast<std::int64_t>(q % H.exponent());
    auto w = GroupRingElement::zero(u.ring);
    for (std::size_t g = 0; g < u.coeffs.size(); ++g) {
        auto& c = w.coeffs[H.scalar_multiple(qq, g)];
        c = F.add(c, F.upow(u.coeffs[g], q));
    }
    return w;
}

inline std::size_t hamming_weight(const std::vector<elem_t>& v) {
    std::size_t n = 0;
    for (auto x : v) n += x != 0;
    return n;
}

inline std::size_t hamming_weight(const GroupRingElement& u) { return hamming_weight(u.coeffs); }

/// Coefficientwise image under a field embedding.
inline GroupRingElement embed(const GroupRingElement& u, const Embedding& emb, const GroupRing& target) {
    if (!(u.ring.scalars() == emb.src()) || !(target.scalars() == emb.dst()) || !(u.ring.group() == target.group()))
        throw std::invalid_argument("embedding does not match rings");
    auto w = GroupRingElement::zero(target);
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) w.coeffs[i] = emb(u.coeffs[i]);
    return w;
}

/// Transform values, one per Q-cyclotomic class, all stored in the splitting field.
/// The value at a class of size k lies in its subfield of order Q^k.
struct SpectrumView {
    Field field;
    std::uint64_t base_order = 2;
    std::shared_ptr<const std::vector<CyclotomicClass>> classes;
    std::vector<elem_t> values;

    std::size_t size() const { return values.size(); }

    bool is_idempotent() const {
        for (auto v : values)
            if (v != 0 && v != 1) return false;
        return true;
    }

    friend bool operator==(const SpectrumView& a, const SpectrumView& b) {
        return a.field == b.field && a.base_order == b.base_order && a.values == b.values;
    }
};

inline SpectrumView multiply(const SpectrumView& a, const SpectrumView& b) {
    if (!(a.field == b.field) || a.values.size() != b.values.size()) throw std::invalid_argument("spectrum mismatch");
    auto c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.field.mul(a.values[i], b.values[i]);
    return c;
}

inline SpectrumView add(const SpectrumView& a, const SpectrumView& b) {
    if (!(a.field == b.field) || a.values.size() != b.values.size()) throw std::invalid_argument("spectrum mismatch");
    auto c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.field.add(a.values[i], b.values[i]);
    return c;
}

/// Character transform of F_Q[H]. The splitting field defaults to
/// F_{Q^{ord_N(Q)}}, N = exp(H), with zeta = gamma^{(|E|-1)/N} for its
/// primitive element gamma; a caller may supply its own (E, zeta) so that
/// several rings over the same H share one set of characters.
class SpectralTransform {
    struct Data {
        GroupRing ring;
        Field E;
        Embedding emb;
        std::uint64_t Q = 2, N = 1;
        std::vector<elem_t> zeta_pow;  // zeta^i, i < N
        CharacterPairing pairing;
        std::shared_ptr<const std::vector<CyclotomicClass>> classes;
        std::vector<std::size_t> class_of;
        std::vector<std::size_t> times_q;  // H position -> Q * position
        std::vector<elem_t> image;         // embedded scalars, when small
        elem_t inv_order = 1;
    };

public:
    SpectralTransform() = default;

    explicit SpectralTransform(const GroupRing& R) {
        const Field& F = R.scalars();
        const std::uint64_t N = R.group().exponent();
        require_semisimple(F.order(), R.size());
        const auto ord = static_cast<unsigned>(nt::multiplicative_order(F.order(), N));
        Field E = F.degree() * ord == F.degree() ? F : Field::create(F.characteristic(), F.degree() * ord);
        init(R, E, root_of_unity(E, N));
    }

    SpectralTransform(const GroupRing& R, const Field& E, elem_t zeta) {
        require_semisimple(R.scalars().order(), R.size());
        init(R, E, zeta);
    }

    /// Primitive N-th root of unity gamma^{(|E|-1)/N}.
    static elem_t root_of_unity(const Field& E, std::uint64_t N) {
        if ((E.order() - 1) % N != 0)
            throw precondition_error(E.describe() + " has no primitive " + std::to_string(N) + "-th root of unity");
        if (E.order() == 2) return 1;
        return E.upow(E.primitive_element(), (E.order() - 1) / N);
    }

    const GroupRing& ring() const { return d_->ring; }
    const Field& splitting_field() const { return d_->E; }
    const Embedding& scalar_embedding() const { return d_->emb; }
    elem_t zeta() const { return d_->zeta_pow.size() > 1 ? d_->zeta_pow[1] : 1; }
    std::uint64_t base_order() const { return d_->Q; }
    const std::vector<CyclotomicClass>& classes() const { return *d_->classes; }
    std::size_t class_of(std::size_t pos) const { return d_->class_of[pos]; }
    const CharacterPairing& pairing() const { return d_->pairing; }

    /// chi_h(g) in E.
    elem_t character(std::size_t h, std::size_t g) const { return d_->zeta_pow[d_->pairing(h, g)]; }

    /// Value at an arbitrary h (not only class representatives).
    elem_t evaluate(const GroupRingElement& u, std::size_t h) const {
        const Field& E = d_->E;
        elem_t s = 0;
        for (std::size_t g = 0; g < u.coeffs.size(); ++g)
            if (u.coeffs[g]) s = E.add(s, E.mul(lift(u.coeffs[g]), character(h, g)));
        return s;
    }

    SpectrumView empty() const { return {d_->E, d_->Q, d_->classes, std::vector<elem_t>(d_->classes->size(), 0)}; }

    SpectrumView forward(const GroupRingElement& u) const {
        if (!(u.ring == d_->ring)) throw std::invalid_argument("element is not in " + d_->ring.describe());
        auto s = empty();
        for (std::size_t c = 0; c < s.values.size(); ++c) s.values[c] = evaluate(u, (*d_->classes)[c].representative);
        return s;
    }

    /// u(g) = |H|^{-1} sum over classes of Tr_{F_{Q^k}/F_Q}(value * chi_h(-g)).
    GroupRingElement inverse(const SpectrumView& s) const {
        const Field& E = d_->E;
        const auto& cls = *d_->classes;
        if (!(s.field == E) || s.values.size() != cls.size()) throw std::invalid_argument("spectrum from another transform");
        const std::size_t m = d_->ring.size();
        std::vector<elem_t> full(m, 0);
        for (std::size_t c = 0; c < cls.size(); ++c) {
            std::size_t x = cls[c].representative;
            elem_t v = s.values[c];
            for (std::size_t i = 0; i < cls[c].size(); ++i) {
                full[x] = v;
                x = d_->times_q[x];
                v = E.upow(v, d_->Q);
            }
            if (v != s.values[c])
                throw std::domain_error("spectral value outside the subfield of order Q^" + std::to_string(cls[c].size()));
        }
        auto u = GroupRingElement::zero(d_->ring);
        const std::uint64_t N = d_->N;
        for (std::size_t g = 0; g < m; ++g) {
            elem_t t = 0;
            for (std::size_t h = 0; h < m; ++h)
                if (full[h]) t = E.add(t, E.mul(full[h], d_->zeta_pow[(N - d_->pairing(h, g)) % N]));
            t = E.mul(t, d_->inv_order);
            auto back = d_->emb.try_pull(t);
            if (!back) throw std::domain_error("inverse transform left the scalar field");
            u.coeffs[g] = *back;
        }
        return u;
    }

    /// Spectrum that is 1 on the listed classes and 0 elsewhere.
    SpectrumView indicator(const std::vector<std::size_t>& class_indices) const {
        auto s = empty();
        for (auto c : class_indices) s.values.at(c) = 1;
        return s;
    }

private:
    void init(const GroupRing& R, const Field& E, elem_t zeta) {
        auto d = std::make_shared<Data>();
        d->ring = R;
        d->E = E;
        d->emb = Embedding(R.scalars(), E);
        d->Q = R.scalars().order();
        const SubgroupContext& H = R.group();
        d->N = H.exponent();
        elem_t z = 1;
        for (std::uint64_t i = 0; i < d->N; ++i) {
            if (i > 0 && z == 1) throw precondition_error("zeta is not a primitive N-th root of unity");
            d->zeta_pow.push_back(z);
            z = E.mul(z, zeta);
        }
        if (z != 1) throw precondition_error("zeta is not an N-th root of unity");
        d->pairing = CharacterPairing(H);
        d->classes = std::make_shared<const std::vector<CyclotomicClass>>(cyclotomic_partition(H, d->Q));
        d->class_of.assign(R.size(), 0);
        for (std::size_t c = 0; c < d->classes->size(); ++c)
            for (auto x : (*d->classes)[c].members) d->class_of[x] = c;
        const auto qq = static_cast<std::int64_t>(d->Q % d->N);
        for (std::size_t x = 0; x < R.size(); ++x) d->times_q.push_back(H.scalar_multiple(qq, x));
        if (R.scalars().order() <= Field::kLogTableLimit)
            for (elem_t x = 0; x < R.scalars().order(); ++x) d->image.push_back(d->emb(x));
        d->inv_order = E.inv(E.from_int(static_cast<std::int64_t>(R.size() % E.characteristic())));
        d_ = std::move(d);
    }

    elem_t lift(elem_t x) const { return d_->image.empty() ? d_->emb(x) : d_->image[x]; }

    std::shared_ptr<const Data> d_;
};

/// Setting of the construction: G, H <= G, index l, F_q, F_{q^l} with a basis
/// over F_q, and the rings R = F_q[H], S = F_{q^l}[H] with transforms that
/// share one splitting field and one root of unity.
class QacContext {
    struct Data {
        SubgroupContext H;
        std::uint64_t q = 2;
        unsigned l = 1;
        Field Fq, Fql;
        Embedding base_into_ext;
        SubfieldCoordinates coords;
        GroupRing R, S;
        SpectralTransform r_spec, s_spec;
    };

public:
    QacContext() = default;

    static QacContext make(const AbelianGroup& G, const std::vector<GroupElement>& generators, std::uint64_t q,
                           BasisKind basis = BasisKind::polynomial) {
        return make(SubgroupContext::make(G, generators), q, basis);
    }

    static QacContext make(const SubgroupContext& H, std::uint64_t q, BasisKind basis = BasisKind::polynomial) {
        auto [p, m] = nt::prime_power(q);
        require_semisimple(q, H.subgroup_order());
        auto d = std::make_shared<Data>();
        d->H = H;
        d->q = q;
        d->l = static_cast<unsigned>(H.index());
        d->Fq = Field::create(p, m);
        d->Fql = Field::create(p, m * d->l);
        d->base_into_ext = Embedding(d->Fq, d->Fql);
        ExtensionBasis b = basis == BasisKind::normal ? normal_basis(d->base_into_ext) : polynomial_basis(d->base_into_ext);
        d->coords = SubfieldCoordinates(d->base_into_ext, b);
        d->R = GroupRing(d->Fq, H);
        d->S = GroupRing(d->Fql, H);
        d->s_spec = SpectralTransform(d->S);
        d->r_spec = SpectralTransform(d->R, d->s_spec.splitting_field(), d->s_spec.zeta());
        return QacContext(std::move(d));
    }

    const SubgroupContext& H() const { return d_->H; }
    const AbelianGroup& G() const { return d_->H.group(); }
    std::uint64_t q() const { return d_->q; }
    unsigned index() const { return d_->l; }
    std::uint64_t extension_order() const { return d_->Fql.order(); }
    const Field& base_field() const { return d_->Fq; }
    const Field& extension_field() const { return d_->Fql; }
    const Embedding& base_into_ext() const { return d_->base_into_ext; }
    const SubfieldCoordinates& coordinates() const { return d_->coords; }
    const ExtensionBasis& basis() const { return d_->coords.basis(); }
    const GroupRing& R() const { return d_->R; }
    const GroupRing& S() const { return d_->S; }
    const SpectralTransform& r_transform() const { return d_->r_spec; }
    const SpectralTransform& s_transform() const { return d_->s_spec; }

    std::string describe() const {
        return "G = " + G().to_string() + ", " + H().describe() + ", q = " + std::to_string(q()) + ", l = " +
               std::to_string(index());
    }

private:
    explicit QacContext(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Phi: an element of F_q[G] (indexed by G index) to its l coset components
/// a_i(h) = u(h + g_i).
inline Tuple phi_split(const std::vector<elem_t>& u, const QacContext& ctx) {
    const SubgroupContext& H = ctx.H();
    if (u.size() != H.group_order()) throw std::invalid_argument("element length differs from |G|");
    Tuple a(ctx.index(), GroupRingElement::zero(ctx.R()));
    for (std::uint64_t g = 0; g < u.size(); ++g) a[H.coset_of(g)].coeffs[H.offset_of(g)] = u[g];
    return a;
}

inline std::vector<elem_t> phi_merge(const Tuple& a, const QacContext& ctx) {
    const SubgroupContext& H = ctx.H();
    if (a.size() != ctx.index()) throw std::invalid_argument("tuple length differs from the index");
    std::vector<elem_t> u(H.group_order(), 0);
    for (std::uint64_t g = 0; g < u.size(); ++g) u[g] = a[H.coset_of(g)].coeffs.at(H.offset_of(g));
    return u;
}

/// (a_1, ..., a_l) -> sum alpha_i a_i in S.
inline GroupRingElement varphi(const Tuple& a, const QacContext& ctx) {
    if (a.size() != ctx.index()) throw std::invalid_argument("tuple length differs from the index");
    for (const auto& x : a)
        if (!(x.ring == ctx.R())) throw std::invalid_argument("tuple component outside R");
    auto A = GroupRingElement::zero(ctx.S());
    std::vector<elem_t> c(a.size());
    for (std::size_t h = 0; h < A.coeffs.size(); ++h) {
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].coeffs[h];
        A.coeffs[h] = ctx.coordinates().recompose(c);
    }
    return A;
}

inline Tuple varphi_inverse(const GroupRingElement& A, const QacContext& ctx) {
    if (!(A.ring == ctx.S())) throw std::invalid_argument("element outside S");
    Tuple a(ctx.index(), GroupRingElement::zero(ctx.R()));
    for (std::size_t h = 0; h < A.coeffs.size(); ++h) {
        auto c = ctx.coordinates().decompose(A.coeffs[h]);
        for (std::size_t i = 0; i < a.size(); ++i) a[i].coeffs[h] = c[i];
    }
    return a;
}

/// Blocks joined by '|', each a comma-separated coefficient list.
inline Tuple parse_tuple(const GroupRing& R, const std::string& text) {
    Tuple a;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|')) a.push_back(GroupRingElement::parse(R, block));
    return a;
}

inline std::string format_tuple(const Tuple& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += "|";
        s += a[i].to_string();
    }
    return s;
}

}  // namespace qac

#endif  // QAC_GROUPALG_HPP
