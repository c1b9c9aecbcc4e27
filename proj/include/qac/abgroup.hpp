#ifndef QAC_ABGROUP_HPP
#define QAC_ABGROUP_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace qac {

struct GroupElement {
    std::vector<std::uint32_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

/// Z_{n_1} x ... x Z_{n_t}. Elements are enumerated mixed-radix with the first
/// coordinate fastest: (i, j) has index j * n_1 + i.
class AbelianGroup {
public:
    AbelianGroup() : AbelianGroup(std::vector<std::uint32_t>{1}) {}

    explicit AbelianGroup(std::vector<std::uint32_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
        if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
        order_ = 1;
        exponent_ = 1;
        for (auto n : orders_) {
            if (n < 1) throw std::invalid_argument("cyclic orders must be >= 1");
            order_ = nt::checked_mul(order_, n);
            exponent_ = std::lcm(exponent_, std::uint64_t{n});
        }
    }

    /// "Z3xZ6", "Z5".
    static AbelianGroup parse(const std::string& text) {
        std::vector<std::uint32_t> orders;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, 'x')) {
            if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z'))
                throw std::invalid_argument("bad group syntax '" + text + "', expected e.g. Z3xZ6");
            std::size_t used = 0;
            const unsigned long n = std::stoul(part.substr(1), &used);
            if (used + 1 != part.size() || n < 1) throw std::invalid_argument("bad cyclic factor '" + part + "'");
            orders.push_back(static_cast<std::uint32_t>(n));
        }
        if (orders.empty() || text.back() == 'x') throw std::invalid_argument("bad group syntax '" + text + "'");
        return AbelianGroup(orders);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(orders_[i]);
        return s;
    }

    const std::vector<std::uint32_t>& cyclic_orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::uint64_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }

    GroupElement element(std::uint64_t index) const {
        GroupElement g;
        for (auto n : orders_) {
            g.coords.push_back(static_cast<std::uint32_t>(index % n));
            index /= n;
        }
        return g;
    }

    std::uint64_t index_of(const GroupElement& g) const {
        check(g);
        std::uint64_t idx = 0;
        for (std::size_t i = orders_.size(); i-- > 0;) idx = idx * orders_[i] + g.coords[i];
        return idx;
    }

    bool contains(const GroupElement& g) const {
        if (g.coords.size() != orders_.size()) return false;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (g.coords[i] >= orders_[i]) return false;
        return true;
    }

    GroupElement identity() const { return GroupElement{std::vector<std::uint32_t>(orders_.size(), 0)}; }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        check(a);
        check(b);
        GroupElement r = a;
        for (std::size_t i = 0; i < orders_.size(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
        return r;
    }

    GroupElement neg(const GroupElement& a) const {
        check(a);
        GroupElement r = a;
        for (std::size_t i = 0; i < orders_.size(); ++i) r.coords[i] = (orders_[i] - a.coords[i]) % orders_[i];
        return r;
    }

    /// k . h, componentwise k h_i mod n_i; negative k allowed.
    GroupElement scalar_multiple(std::int64_t k, const GroupElement& h) const {
        check(h);
        GroupElement r = h;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const auto n = static_cast<std::int64_t>(orders_[i]);
            const std::int64_t kk = ((k % n) + n) % n;
            r.coords[i] = static_cast<std::uint32_t>(kk * h.coords[i] % n);
        }
        return r;
    }

    std::uint64_t order_of(const GroupElement& h) const {
        check(h);
        std::uint64_t o = 1;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint64_t n = orders_[i];
            o = std::lcm(o, n / std::gcd(n, std::uint64_t{h.coords[i]}));
        }
        return o;
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.orders_ == b.orders_; }

private:
    void check(const GroupElement& g) const {
        if (!contains(g)) throw std::invalid_argument("element " + g.to_string() + " not in " + to_string());
    }

    std::vector<std::uint32_t> orders_;
    std::uint64_t order_ = 1, exponent_ = 1;
};

/// Parses "(1,0);(0,2)" into group elements of G.
inline std::vector<GroupElement> parse_generators(const AbelianGroup& G, const std::string& text) {
    std::vector<GroupElement> gens;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::string s;
        for (char ch : part)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) continue;
        if (s.front() == '(') {
            if (s.back() != ')') throw std::invalid_argument("unterminated generator tuple: " + part);
            s = s.substr(1, s.size() - 2);
        }
        GroupElement g;
        std::stringstream cs(s);
        std::string tok;
        while (std::getline(cs, tok, ',')) g.coords.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        if (!G.contains(g)) throw std::invalid_argument("generator " + g.to_string() + " is not an element of " + G.to_string());
        gens.push_back(std::move(g));
    }
    return gens;
}

/// H = <generators> inside G, enumerated as a subset of G in G's order, with
/// the coset decomposition G = union (H + g_i). H positions index everything
/// downstream (group-ring coefficient vectors, cyclotomic classes).
class SubgroupContext {
    struct Data {
        AbelianGroup G;
        std::vector<std::uint64_t> h_elems;   // G indices, ascending
        std::vector<std::int64_t> h_pos;      // G index -> H position or -1
        std::vector<std::uint64_t> reps;      // coset representatives (G indices), reps[0] = 0
        std::vector<std::uint32_t> coset_of;  // G index -> coset number
        std::vector<std::uint32_t> offset_of; // G index -> H position h with g = h + rep
        std::vector<std::uint32_t> add;       // |H| x |H|
        std::vector<std::uint32_t> neg;
        std::vector<std::uint64_t> ord;
        std::uint64_t exponent = 1;
    };

public:
    static constexpr std::uint64_t kMaxSubgroupOrder = 2048;

    SubgroupContext() : SubgroupContext(whole(AbelianGroup())) {}

    static SubgroupContext make(const AbelianGroup& G, const std::vector<GroupElement>& generators) {
        auto d = std::make_shared<Data>();
        d->G = G;
        const std::uint64_t n = G.order();
        std::vector<char> in(n, 0);
        std::vector<std::uint64_t> elems{0};
        in[0] = 1;
        for (std::size_t head = 0; head < elems.size(); ++head) {
            const GroupElement x = G.element(elems[head]);
            for (const auto& g : generators) {
                const std::uint64_t y = G.index_of(G.add(x, g));
                if (!in[y]) {
                    in[y] = 1;
                    elems.push_back(y);
                }
            }
        }
        std::sort(elems.begin(), elems.end());
        if (elems.size() > kMaxSubgroupOrder)
            throw std::length_error("subgroup order " + std::to_string(elems.size()) + " exceeds supported maximum");
        d->h_elems = elems;
        d->h_pos.assign(n, -1);
        for (std::size_t i = 0; i < elems.size(); ++i) d->h_pos[elems[i]] = static_cast<std::int64_t>(i);

        d->coset_of.assign(n, 0);
        d->offset_of.assign(n, 0);
        std::vector<char> covered(n, 0);
        for (std::uint64_t g = 0; g < n; ++g) {
            if (covered[g]) continue;
            const auto c = static_cast<std::uint32_t>(d->reps.size());
            d->reps.push_back(g);
            const GroupElement rep = G.element(g);
            for (std::size_t i = 0; i < elems.size(); ++i) {
                const std::uint64_t y = G.index_of(G.add(G.element(elems[i]), rep));
                covered[y] = 1;
                d->coset_of[y] = c;
                d->offset_of[y] = static_cast<std::uint32_t>(i);
            }
        }

        const std::size_t m = elems.size();
        d->add.resize(m * m);
        d->neg.resize(m);
        d->ord.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const GroupElement a = G.element(elems[i]);
            for (std::size_t j = 0; j < m; ++j)
                d->add[i * m + j] = static_cast<std::uint32_t>(d->h_pos[G.index_of(G.add(a, G.element(elems[j])))]);
            d->neg[i] = static_cast<std::uint32_t>(d->h_pos[G.index_of(G.neg(a))]);
            d->ord[i] = G.order_of(a);
            d->exponent = std::lcm(d->exponent, d->ord[i]);
        }
        return SubgroupContext(std::move(d));
    }

    /// H = G, index 1.
    static SubgroupContext whole(const AbelianGroup& G) {
        std::vector<GroupElement> gens;
        for (std::size_t i = 0; i < G.rank(); ++i) {
            GroupElement e = G.identity();
            e.coords[i] = G.cyclic_orders()[i] > 1 ? 1 : 0;
            gens.push_back(e);
        }
        return make(G, gens);
    }

    const AbelianGroup& group() const { return d_->G; }
    std::uint64_t group_order() const { return d_->G.order(); }
    std::uint64_t subgroup_order() const { return d_->h_elems.size(); }
    std::uint64_t index() const { return d_->reps.size(); }
    std::uint64_t exponent() const { return d_->exponent; }

    /// G index of the element at H position pos.
    std::uint64_t group_index(std::size_t pos) const { return d_->h_elems.at(pos); }
    GroupElement element(std::size_t pos) const { return d_->G.element(d_->h_elems.at(pos)); }
    std::int64_t position_of(const GroupElement& g) const { return d_->h_pos[d_->G.index_of(g)]; }

    /// Coset representatives as G indices, ascending; the first is 0.
    const std::vector<std::uint64_t>& coset_representatives() const { return d_->reps; }
    std::uint32_t coset_of(std::uint64_t g_index) const { return d_->coset_of[g_index]; }
    std::uint32_t offset_of(std::uint64_t g_index) const { return d_->offset_of[g_index]; }

    std::size_t add(std::size_t a, std::size_t b) const { return d_->add[a * d_->h_elems.size() + b]; }
    std::size_t neg(std::size_t a) const { return d_->neg[a]; }
    std::uint64_t order_of(std::size_t a) const { return d_->ord[a]; }

    std::size_t scalar_multiple(std::int64_t k, std::size_t pos) const {
        return static_cast<std::size_t>(position_of(d_->G.scalar_multiple(k, element(pos))));
    }

    friend bool operator==(const SubgroupContext& a, const SubgroupContext& b) {
        return a.d_ == b.d_ || (a.d_->G == b.d_->G && a.d_->h_elems == b.d_->h_elems);
    }

    std::string describe() const {
        std::string s = "H <= " + d_->G.to_string() + ", |H| = " + std::to_string(subgroup_order()) +
                         ", [G:H] = " + std::to_string(index());
        return s;
    }

private:
    explicit SubgroupContext(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// S_Q(h) as H positions.
struct CyclotomicClass {
    std::uint64_t multiplier = 1;
    std::size_t representative = 0;    // enumeration-least member
    std::vector<std::size_t> members;  // ascending

    std::size_t size() const { return members.size(); }
    bool contains(std::size_t pos) const { return std::binary_search(members.begin(), members.end(), pos); }
    friend bool operator==(const CyclotomicClass&, const CyclotomicClass&) = default;
};

inline void require_semisimple(std::uint64_t q, std::uint64_t h_order) {
    if (std::gcd(q, h_order) != 1)
        throw precondition_error("group ring not semisimple: gcd(q=" + std::to_string(q) + ", |H|=" + std::to_string(h_order) +
                                 ") != 1");
}

/// Q-cyclotomic classes of H, sorted by representative.
inline std::vector<CyclotomicClass> cyclotomic_partition(const SubgroupContext& H, std::uint64_t q) {
    require_semisimple(q, H.subgroup_order());
    const std::size_t m = H.subgroup_order();
    const auto qq = static_cast<std::int64_t>(q % H.exponent());
    std::vector<char> seen(m, 0);
    std::vector<CyclotomicClass> out;
    for (std::size_t pos = 0; pos < m; ++pos) {
        if (seen[pos]) continue;
        CyclotomicClass c;
        c.multiplier = q;
        std::size_t x = pos;
        do {
            seen[x] = 1;
            c.members.push_back(x);
            x = H.scalar_multiple(qq, x);
        } while (x != pos);
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members.front();
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<CyclotomicClass> cyclotomic_partition(const AbelianGroup& H, std::uint64_t q) {
    return cyclotomic_partition(SubgroupContext::whole(H), q);
}

/// Nondegenerate pairing H x H -> Z_N (N = exp H), giving the identification
/// h -> chi_h(g) = zeta^{<h,g>} of H with its character group.
class CharacterPairing {
public:
    CharacterPairing() = default;

    explicit CharacterPairing(const SubgroupContext& H) : m_(H.subgroup_order()), exponent_(H.exponent()) {
        table_.assign(m_ * m_, 0);
        if (!try_coordinate_pairing(H)) basis_pairing(H);
    }

    std::uint64_t exponent() const { return exponent_; }
    /// True when the pairing is the G-coordinate one, sum (E/n_i) h_i g_i rescaled.
    bool uses_group_coordinates() const { return coordinate_; }
    std::uint64_t operator()(std::size_t h, std::size_t g) const { return table_[h * m_ + g]; }

private:
    bool try_coordinate_pairing(const SubgroupContext& H) {
        const AbelianGroup& G = H.group();
        const std::uint64_t E = G.exponent();
        const std::uint64_t scale = E / exponent_;
        std::vector<GroupElement> el;
        for (std::size_t i = 0; i < m_; ++i) el.push_back(H.element(i));
        for (std::size_t a = 0; a < m_; ++a) {
            bool nonzero = false;
            for (std::size_t b = 0; b < m_; ++b) {
                std::uint64_t v = 0;
                for (std::size_t i = 0; i < G.rank(); ++i)
                    v += (E / G.cyclic_orders()[i]) * el[a].coords[i] % E * el[b].coords[i] % E;
                v %= E;
                if (v % scale != 0) return false;
                table_[a * m_ + b] = v / scale;
                nonzero |= v != 0;
            }
            if (a != 0 && !nonzero) return false;
        }
        coordinate_ = true;
        return true;
    }

    void basis_pairing(const SubgroupContext& H) {
        // Greedy basis of each primary component: pick an element of maximal
        // order modulo the span so far, then correct it by an element of the span
        // so its order equals its quotient order.
        std::vector<std::pair<std::size_t, std::uint64_t>> basis;
        for (auto [r, e] : nt::factorize(H.subgroup_order())) {
            (void)e;
            auto is_r_power = [&](std::uint64_t o) {
                while (o % r == 0) o /= r;
                return o == 1;
            };
            std::vector<std::size_t> P;
            for (std::size_t i = 0; i < m_; ++i)
                if (is_r_power(H.order_of(i))) P.push_back(i);
            std::vector<char> inC(m_, 0);
            std::vector<std::size_t> C{0};
            inC[0] = 1;
            while (C.size() < P.size()) {
                auto quotient_order = [&](std::size_t y) {
                    std::uint64_t o = 1;
                    std::size_t x = y;
                    while (!inC[x]) {
                        x = H.add(x, y);
                        ++o;
                    }
                    return o;
                };
                std::uint64_t best = 0;
                for (auto y : P) best = std::max(best, quotient_order(y));
                bool grown = false;
                for (auto y : P) {
                    if (quotient_order(y) != best) continue;
                    const std::size_t oy = H.scalar_multiple(static_cast<std::int64_t>(best), y);
                    for (auto c : C) {
                        if (H.scalar_multiple(static_cast<std::int64_t>(best), c) != oy) continue;
                        const std::size_t b = H.add(y, H.neg(c));
                        basis.emplace_back(b, best);
                        std::vector<std::size_t> next;
                        std::size_t mult = 0;
                        for (std::uint64_t t = 0; t < best; ++t) {
                            for (auto x : C) {
                                const std::size_t z = H.add(x, mult);
                                if (!inC[z]) next.push_back(z);
                            }
                            mult = H.add(mult, b);
                        }
                        for (auto z : next) inC[z] = 1;
                        C.insert(C.end(), next.begin(), next.end());
                        grown = true;
                        break;
                    }
                    if (grown) break;
                }
                if (!grown) throw std::logic_error("cyclic decomposition failed");
            }
        }
        // Coordinates of every element in the basis.
        std::vector<std::vector<std::uint64_t>> coord(m_);
        std::vector<std::uint64_t> digits(basis.size(), 0);
        for (std::uint64_t count = 0; count < m_; ++count) {
            std::size_t x = 0;
            for (std::size_t i = 0; i < basis.size(); ++i)
                x = H.add(x, H.scalar_multiple(static_cast<std::int64_t>(digits[i]), basis[i].first));
            coord[x] = digits;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (++digits[i] < basis[i].second) break;
                digits[i] = 0;
            }
        }
        for (std::size_t a = 0; a < m_; ++a)
            for (std::size_t b = 0; b < m_; ++b) {
                std::uint64_t v = 0;
                for (std::size_t i = 0; i < basis.size(); ++i)
                    v = (v + exponent_ / basis[i].second * (coord[a][i] * coord[b][i] % basis[i].second)) % exponent_;
                table_[a * m_ + b] = v;
            }
        coordinate_ = false;
    }

    std::size_t m_ = 1;
    std::uint64_t exponent_ = 1;
    bool coordinate_ = true;
    std::vector<std::uint64_t> table_{0};
};

}  // namespace qac

#endif  // QAC_ABGROUP_HPP
