#ifndef QAC_FIELD_HPP
#define QAC_FIELD_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numtheory.hpp"

namespace qac {

/// Packed field element: base-p digits of the polynomial-basis coordinates,
/// coordinate 0 (constant term) least significant.
using elem_t = std::uint64_t;

namespace poly {

/// Polynomial over F_p, coefficients low-to-high.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::pair<Poly, Poly> divmod(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const unsigned lead_inv = static_cast<unsigned>(nt::powmod(b.back(), p - 2, p));
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const unsigned c = static_cast<unsigned>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<unsigned>((a[shift + i] + static_cast<std::uint64_t>(p - c) * b[i]) % p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
    return divmod(mul(a, b, p), f, p).second;
}

inline Poly sub(Poly a, const Poly& b, unsigned p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly gcd(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or: f of degree m is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= m/2.
inline bool is_irreducible(const Poly& f_in, unsigned p) {
    Poly f = f_in;
    trim(f);
    const int m = degree(f);
    if (m < 1) return false;
    if (m == 1) return true;
    const Poly x{0, 1};
    Poly power = x;
    for (int i = 1; 2 * i <= m; ++i) {
        // power <- power^p mod f
        Poly acc{1};
        Poly base = power;
        for (unsigned e = p; e; e >>= 1) {
            if (e & 1) acc = mulmod(acc, base, f, p);
            base = mulmod(base, base, f, p);
        }
        power = acc;
        auto g = gcd(f, sub(power, x, p), p);
        if (degree(g) > 0) return false;
    }
    return true;
}

/// Monic polynomial whose coefficient tuple (c_0, ..., c_{d-1}) has lexicographic
/// rank r, c_0 most significant.
inline Poly monic_at_rank(unsigned p, unsigned d, std::uint64_t r) {
    Poly f(d + 1, 0);
    f[d] = 1;
    for (unsigned i = 0; i < d; ++i) {
        f[d - 1 - i] = static_cast<unsigned>(r % p);
        r /= p;
    }
    return f;
}

/// Complete factorization into monic irreducibles by trial division in
/// increasing degree; only used for diagnostics.
inline std::vector<std::pair<Poly, unsigned>> factor(Poly f, unsigned p) {
    trim(f);
    std::vector<std::pair<Poly, unsigned>> out;
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(std::max(degree(f), 0)); ++d) {
        const std::uint64_t count = nt::checked_pow(p, d);
        for (std::uint64_t r = 0; r < count; ++r) {
            Poly g = monic_at_rank(p, d, r);
            unsigned e = 0;
            for (;;) {
                auto [q, rem] = divmod(f, g, p);
                if (!rem.empty()) break;
                f = std::move(q);
                ++e;
            }
            if (e) out.emplace_back(g, e);
        }
    }
    if (degree(f) > 0) {
        // Make monic.
        const unsigned inv = static_cast<unsigned>(nt::powmod(f.back(), p - 2, p));
        for (auto& c : f) c = static_cast<unsigned>(static_cast<std::uint64_t>(c) * inv % p);
        out.emplace_back(f, 1);
    }
    return out;
}

inline std::string to_string(const Poly& f_in) {
    Poly f = f_in;
    trim(f);
    if (f.empty()) return "0";
    std::string s;
    for (int i = degree(f); i >= 0; --i) {
        const unsigned c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace poly

namespace detail {

/// Solves y = sum_j x_j col_j over F_p for a fixed full-column-rank matrix.
class ModpSolver {
public:
    ModpSolver() = default;

    /// columns: c vectors of length rows.
    ModpSolver(unsigned p, std::size_t rows, const std::vector<std::vector<unsigned>>& columns)
        : p_(p), rows_(rows), cols_(columns.size()) {
        // Augmented [A | I], A is rows x cols.
        std::vector<std::vector<unsigned>> a(rows, std::vector<unsigned>(cols_ + rows, 0));
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows; ++i) a[i][j] = columns[j][i] % p;
        for (std::size_t i = 0; i < rows; ++i) a[i][cols_ + i] = 1;
        std::vector<bool> used(rows, false);
        pivot_row_.assign(cols_, 0);
        for (std::size_t j = 0; j < cols_; ++j) {
            std::size_t piv = rows;
            for (std::size_t i = 0; i < rows; ++i)
                if (!used[i] && a[i][j] != 0) {
                    piv = i;
                    break;
                }
            if (piv == rows) throw precondition_error("singular basis: vectors are linearly dependent");
            used[piv] = true;
            pivot_row_[j] = piv;
            const unsigned inv = static_cast<unsigned>(nt::powmod(a[piv][j], p - 2, p));
            for (auto& v : a[piv]) v = static_cast<unsigned>(static_cast<std::uint64_t>(v) * inv % p);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == piv || a[i][j] == 0) continue;
                const std::uint64_t f = p - a[i][j];
                for (std::size_t c = 0; c < a[i].size(); ++c)
                    a[i][c] = static_cast<unsigned>((a[i][c] + f * a[piv][c]) % p);
            }
        }
        transform_.assign(rows, std::vector<unsigned>(rows));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < rows; ++c) transform_[i][c] = a[i][cols_ + c];
        for (std::size_t i = 0; i < rows; ++i)
            if (!used[i]) zero_rows_.push_back(i);
    }

    /// Coefficients x with A x = y, or nullopt when y is outside the column span.
    std::optional<std::vector<unsigned>> solve(const std::vector<unsigned>& y) const {
        auto apply_row = [&](std::size_t i) {
            std::uint64_t s = 0;
            for (std::size_t c = 0; c < rows_; ++c) s += static_cast<std::uint64_t>(transform_[i][c]) * y[c];
            return static_cast<unsigned>(s % p_);
        };
        for (auto i : zero_rows_)
            if (apply_row(i) != 0) return std::nullopt;
        std::vector<unsigned> x(cols_);
        for (std::size_t j = 0; j < cols_; ++j) x[j] = apply_row(pivot_row_[j]);
        return x;
    }

private:
    unsigned p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<unsigned>> transform_;
    std::vector<std::size_t> pivot_row_, zero_rows_;
};

}  // namespace detail

/// Finite field F_{p^m} = F_p[x]/(modulus). Cheap to copy; the descriptor is
/// immutable and shared.
class Field {
    struct Data {
        unsigned p = 2, m = 1;
        poly::Poly modulus;
        std::uint64_t order = 2;
        std::vector<std::uint64_t> place;  // p^i
        // Full tables for order <= 256.
        std::vector<std::uint8_t> add8, mul8, neg8, inv8;
        // Log tables for order <= 2^16.
        std::vector<std::uint32_t> exp_table, log_table;
        elem_t primitive = 0;
    };

public:
    static constexpr std::uint64_t kSmallTableLimit = 256;
    static constexpr std::uint64_t kLogTableLimit = 1u << 16;

    Field() : Field(create(2, 1)) {}

    /// Builds F_{p^m}. Without a modulus, the lexicographically smallest monic
    /// irreducible (c_0 most significant) is used.
    static Field create(unsigned p, unsigned m, std::optional<poly::Poly> modulus = std::nullopt) {
        if (!nt::is_prime(p)) throw precondition_error("characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("field degree must be >= 1");
        auto d = std::make_shared<Data>();
        d->p = p;
        d->m = m;
        d->order = nt::checked_pow(p, m);
        if (d->order > (std::uint64_t{1} << 62)) throw std::invalid_argument("field order exceeds 2^62");
        for (unsigned i = 0; i <= m; ++i) d->place.push_back(nt::checked_pow(p, i));
        if (modulus) {
            poly::Poly f = *modulus;
            poly::trim(f);
            if (poly::degree(f) != static_cast<int>(m) || f.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree " + std::to_string(m));
            for (auto c : f)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
            if (!poly::is_irreducible(f, p)) {
                std::string msg = "reducible: ";
                for (auto& [g, e] : poly::factor(f, p)) {
                    msg += "(" + poly::to_string(g) + ")";
                    if (e > 1) msg += "^" + std::to_string(e);
                }
                throw precondition_error(msg);
            }
            d->modulus = std::move(f);
        } else {
            for (std::uint64_t r = 0;; ++r) {
                auto f = poly::monic_at_rank(p, m, r);
                if (poly::is_irreducible(f, p)) {
                    d->modulus = std::move(f);
                    break;
                }
            }
        }
        Field f(std::move(d));
        f.build_tables();
        return f;
    }

    /// F_q for a prime power q, default modulus.
    static Field of_order(std::uint64_t q) {
        auto [p, m] = nt::prime_power(q);
        return create(p, m);
    }

    unsigned characteristic() const { return d_->p; }
    unsigned degree() const { return d_->m; }
    std::uint64_t order() const { return d_->order; }
    const poly::Poly& modulus() const { return d_->modulus; }
    bool is_prime_field() const { return d_->m == 1; }

    elem_t zero() const { return 0; }
    elem_t one() const { return 1; }
    /// Class of x in F_p[x]/(modulus); zero for prime fields with modulus x.
    elem_t generator_x() const { return d_->m == 1 ? from_int(-static_cast<std::int64_t>(d_->modulus[0])) : d_->p; }

    /// Image of an integer in the prime subfield.
    elem_t from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(d_->p);
        return static_cast<elem_t>(((v % p) + p) % p);
    }

    bool contains(elem_t x) const { return x < d_->order; }

    std::vector<unsigned> coords(elem_t x) const {
        std::vector<unsigned> c(d_->m);
        for (unsigned i = 0; i < d_->m; ++i) {
            c[i] = static_cast<unsigned>(x % d_->p);
            x /= d_->p;
        }
        return c;
    }

    elem_t from_coords(std::span<const unsigned> c) const {
        if (c.size() != d_->m) throw std::invalid_argument("coordinate count does not match field degree");
        elem_t x = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= d_->p) throw std::invalid_argument("coordinate out of range");
            x = x * d_->p + c[i];
        }
        return x;
    }

    elem_t add(elem_t a, elem_t b) const {
        if (!d_->add8.empty()) return d_->add8[a * d_->order + b];
        if (d_->p == 2) return a ^ b;
        if (d_->m == 1) return (a + b) % d_->p;
        elem_t r = 0;
        for (unsigned i = 0; i < d_->m; ++i) {
            const elem_t da = a % d_->p, db = b % d_->p;
            r += ((da + db) % d_->p) * d_->place[i];
            a /= d_->p;
            b /= d_->p;
        }
        return r;
    }

    elem_t neg(elem_t a) const {
        if (!d_->neg8.empty()) return d_->neg8[a];
        if (d_->p == 2) return a;
        if (d_->m == 1) return (d_->p - a) % d_->p;
        elem_t r = 0;
        for (unsigned i = 0; i < d_->m; ++i) {
            r += ((d_->p - a % d_->p) % d_->p) * d_->place[i];
            a /= d_->p;
        }
        return r;
    }

    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const {
        if (!d_->mul8.empty()) return d_->mul8[a * d_->order + b];
        if (a == 0 || b == 0) return 0;
        if (d_->m == 1) return nt::mulmod(a, b, d_->p);
        if (!d_->log_table.empty()) {
            const std::uint64_t s = std::uint64_t{d_->log_table[a]} + d_->log_table[b];
            return d_->exp_table[s % (d_->order - 1)];
        }
        return mul_slow(a, b);
    }

    /// Multiplication by an integer of the prime subfield.
    elem_t scale(std::uint64_t c, elem_t a) const { return mul(from_int(static_cast<std::int64_t>(c % d_->p)), a); }

    elem_t inv(elem_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(d_->order));
        if (!d_->inv8.empty()) return d_->inv8[a];
        if (!d_->log_table.empty()) return d_->exp_table[(d_->order - 1 - d_->log_table[a]) % (d_->order - 1)];
        return pow(a, static_cast<std::int64_t>(d_->order - 2));
    }

    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

    /// Square-and-multiply; negative exponents invert first.
    elem_t pow(elem_t a, std::int64_t e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        if (a == 0) return e == 0 ? 1 : 0;
        if (!d_->log_table.empty()) {
            const std::uint64_t n = d_->order - 1;
            return d_->exp_table[nt::mulmod(d_->log_table[a], static_cast<std::uint64_t>(e) % n, n)];
        }
        elem_t r = 1;
        auto ue = static_cast<std::uint64_t>(e);
        while (ue) {
            if (ue & 1) r = mul(r, a);
            a = mul(a, a);
            ue >>= 1;
        }
        return r;
    }

    /// Unsigned power, for exponents beyond int64 range.
    elem_t upow(elem_t a, std::uint64_t e) const {
        elem_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Degree j of F_q over F_p when q = p^j with j | m; throws otherwise.
    unsigned subfield_degree(std::uint64_t q) const {
        unsigned j = 0;
        std::uint64_t t = 1;
        while (t < q && j <= d_->m) {
            t *= d_->p;
            ++j;
        }
        if (t != q || j == 0 || d_->m % j != 0)
            throw precondition_error("F_" + std::to_string(q) + " is not a subfield of F_" + std::to_string(d_->order));
        return j;
    }

    /// x -> x^q for a subfield order q; an automorphism fixing F_q.
    elem_t frobenius(elem_t x, std::uint64_t q) const {
        subfield_degree(q);
        return upow(x, q);
    }

    /// Tr_{F_{p^m}/F_q}(x), returned as an element of this field lying in F_q.
    elem_t trace(elem_t x, std::uint64_t q) const {
        const unsigned k = d_->m / subfield_degree(q);
        elem_t s = 0, y = x;
        for (unsigned i = 0; i < k; ++i) {
            s = add(s, y);
            y = upow(y, q);
        }
        return s;
    }

    bool in_subfield(elem_t x, std::uint64_t q) const { return frobenius(x, q) == x; }

    std::uint64_t multiplicative_order(elem_t x) const {
        if (x == 0) throw std::domain_error("zero has no multiplicative order");
        std::uint64_t n = d_->order - 1;
        for (auto [r, e] : nt::factorize(d_->order - 1)) {
            (void)e;
            while (n % r == 0 && upow(x, n / r) == 1) n /= r;
        }
        return n;
    }

    /// Element whose coordinate tuple has lexicographic rank r (c_0 most significant).
    elem_t lex_element(std::uint64_t r) const {
        std::vector<unsigned> c(d_->m);
        for (unsigned i = 0; i < d_->m; ++i) {
            c[d_->m - 1 - i] = static_cast<unsigned>(r % d_->p);
            r /= d_->p;
        }
        return from_coords(c);
    }

    /// First element in lexicographic scan order of order p^m - 1.
    elem_t primitive_element() const {
        if (d_->order < 3) throw precondition_error("F_2 has trivial multiplicative group: no generator needed");
        return d_->primitive;
    }

    /// Decimal for prime fields, "(c0,c1,...)" otherwise.
    std::string format(elem_t x) const {
        if (d_->m == 1) return std::to_string(x);
        std::string s = "(";
        auto c = coords(x);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }

    /// "a^k" relative to primitive_element(), or "0".
    std::string format_symbolic(elem_t x) const {
        if (x == 0) return "0";
        if (d_->order < 3) return "1";
        const elem_t g = primitive_element();
        elem_t y = 1;
        for (std::uint64_t k = 0; k + 1 < d_->order; ++k) {
            if (y == x) return k == 0 ? "1" : "a^" + std::to_string(k);
            y = mul(y, g);
        }
        throw std::logic_error("element not reached by primitive element");
    }

    /// Accepts decimal (prime subfield), "(c0,...,c_{m-1})", "a^k", "a".
    elem_t parse(const std::string& text) const {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::invalid_argument("empty field element");
        if (s.front() == '(') {
            if (s.back() != ')') throw std::invalid_argument("unterminated coordinate tuple: " + text);
            std::vector<unsigned> c;
            std::stringstream ss(s.substr(1, s.size() - 2));
            std::string tok;
            while (std::getline(ss, tok, ',')) c.push_back(static_cast<unsigned>(std::stoul(tok)));
            return from_coords(c);
        }
        if (s.front() == 'a') {
            std::int64_t k = 1;
            if (s.size() > 1) {
                if (s.size() < 3 || s[1] != '^') throw std::invalid_argument("bad symbolic element: " + text);
                k = std::stoll(s.substr(2));
            }
            return pow(d_->order < 3 ? 1 : primitive_element(), k);
        }
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad field element: " + text);
        if (d_->m == 1 && (v < 0 || static_cast<std::uint64_t>(v) >= d_->p))
            throw std::invalid_argument("element " + text + " out of range for F_" + std::to_string(d_->p));
        return from_int(v);
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->m == b.d_->m && a.d_->modulus == b.d_->modulus);
    }

    std::string describe() const {
        std::string s = "F_" + std::to_string(d_->order);
        if (d_->m > 1) s += " = F_" + std::to_string(d_->p) + "[x]/(" + poly::to_string(d_->modulus) + ")";
        return s;
    }

private:
    explicit Field(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    elem_t mul_slow(elem_t a, elem_t b) const {
        const unsigned p = d_->p, m = d_->m;
        auto ca = coords(a), cb = coords(b);
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            if (!ca[i]) continue;
            for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
        }
        for (unsigned deg = 2 * m - 2; deg >= m; --deg) {
            const std::uint64_t c = prod[deg];
            if (c) {
                for (unsigned t = 0; t < m; ++t) prod[deg - m + t] = (prod[deg - m + t] + (p - c) * d_->modulus[t]) % p;
                prod[deg] = 0;
            }
        }
        elem_t r = 0;
        for (unsigned i = m; i-- > 0;) r = r * p + prod[i];
        return r;
    }

    elem_t pow_slow(elem_t a, std::uint64_t e) const {
        elem_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        Data& d = *std::const_pointer_cast<Data>(d_);
        const std::uint64_t q = d.order;
        auto slow_mul = [&](elem_t a, elem_t b) -> elem_t {
            if (a == 0 || b == 0) return 0;
            return d.m == 1 ? nt::mulmod(a, b, d.p) : mul_slow(a, b);
        };
        if (q >= 3) {
            const auto factors = nt::factorize(q - 1);
            for (std::uint64_t r = 1; r < q; ++r) {
                const elem_t x = lex_element(r);
                if (x == 0) continue;
                bool ok = true;
                for (auto [f, e] : factors) {
                    (void)e;
                    elem_t y = 1, b = x;
                    for (std::uint64_t ex = (q - 1) / f; ex; ex >>= 1) {
                        if (ex & 1) y = slow_mul(y, b);
                        b = slow_mul(b, b);
                    }
                    if (y == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    d.primitive = x;
                    break;
                }
            }
        }
        if (q <= kLogTableLimit && q >= 3) {
            d.exp_table.assign(q - 1, 0);
            d.log_table.assign(q, 0);
            elem_t y = 1;
            for (std::uint64_t i = 0; i + 1 < q; ++i) {
                d.exp_table[i] = static_cast<std::uint32_t>(y);
                d.log_table[y] = static_cast<std::uint32_t>(i);
                y = slow_mul(y, d.primitive);
            }
        }
        if (q <= kSmallTableLimit) {
            std::vector<std::uint8_t> add(q * q), mul(q * q), neg(q), inv(q, 0);
            for (elem_t a = 0; a < q; ++a) {
                for (elem_t b = 0; b < q; ++b) {
                    elem_t s = 0;
                    elem_t ta = a, tb = b;
                    for (unsigned i = 0; i < d.m; ++i) {
                        s += ((ta % d.p + tb % d.p) % d.p) * d.place[i];
                        ta /= d.p;
                        tb /= d.p;
                    }
                    add[a * q + b] = static_cast<std::uint8_t>(s);
                    mul[a * q + b] = static_cast<std::uint8_t>(slow_mul(a, b));
                }
            }
            for (elem_t a = 0; a < q; ++a)
                for (elem_t b = 0; b < q; ++b) {
                    if (add[a * q + b] == 0) neg[a] = static_cast<std::uint8_t>(b);
                    if (mul[a * q + b] == 1) inv[a] = static_cast<std::uint8_t>(b);
                }
            d.add8 = std::move(add);
            d.mul8 = std::move(mul);
            d.neg8 = std::move(neg);
            d.inv8 = std::move(inv);
        }
    }

    std::shared_ptr<const Data> d_;
};

/// Element bound to its field; arithmetic rejects operands from different fields.
class FieldElement {
public:
    FieldElement(Field f, elem_t v) : f_(std::move(f)), v_(v) {
        if (!f_.contains(v_)) throw std::invalid_argument("value outside field");
    }

    const Field& field() const { return f_; }
    elem_t value() const { return v_; }
    std::vector<unsigned> coords() const { return f_.coords(v_); }

    FieldElement operator+(const FieldElement& o) const { return {same(o), f_.add(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { return {same(o), f_.sub(v_, o.v_)}; }
    FieldElement operator*(const FieldElement& o) const { return {same(o), f_.mul(v_, o.v_)}; }
    FieldElement operator/(const FieldElement& o) const { return {same(o), f_.div(v_, o.v_)}; }
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }
    FieldElement inv() const { return {f_, f_.inv(v_)}; }
    FieldElement pow(std::int64_t e) const { return {f_, f_.pow(v_, e)}; }
    FieldElement frobenius(std::uint64_t q) const { return {f_, f_.frobenius(v_, q)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.v_ == b.v_; }

    std::string to_string() const { return f_.format(v_); }

private:
    const Field& same(const FieldElement& o) const {
        if (!(f_ == o.f_)) throw std::invalid_argument("mixed-field operands: " + f_.describe() + " vs " + o.f_.describe());
        return f_;
    }

    Field f_;
    elem_t v_;
};

/// Ring embedding F_{p^a} -> F_{p^b} (a | b): sends the class of x to the first
/// root of the source modulus among h^{c s}, s = 0, 1, ..., where h is the
/// primitive element of the target and c = (|dst| - 1) / (|src| - 1).
class Embedding {
public:
    Embedding() = default;

    Embedding(Field src, Field dst) : src_(std::move(src)), dst_(std::move(dst)) {
        if (src_.characteristic() != dst_.characteristic() || dst_.degree() % src_.degree() != 0)
            throw precondition_error(src_.describe() + " does not embed into " + dst_.describe());
        const unsigned a = src_.degree();
        if (a == 1) {
            root_ = dst_.one();  // unused
        } else if (src_ == dst_) {
            root_ = dst_.generator_x();
        } else {
            const std::uint64_t c = (dst_.order() - 1) / (src_.order() - 1);
            const elem_t step = dst_.upow(dst_.primitive_element(), c);
            elem_t cand = dst_.one();
            bool found = false;
            for (std::uint64_t s = 0; s + 1 < src_.order(); ++s) {
                if (is_root(cand)) {
                    root_ = cand;
                    found = true;
                    break;
                }
                cand = dst_.mul(cand, step);
            }
            if (!found) throw std::logic_error("no root of the source modulus in the target field");
        }
        // F_p-basis images 1, r, r^2, ...
        elem_t y = dst_.one();
        std::vector<std::vector<unsigned>> cols;
        for (unsigned t = 0; t < a; ++t) {
            images_.push_back(y);
            cols.push_back(dst_.coords(y));
            y = dst_.mul(y, root_);
        }
        solver_ = detail::ModpSolver(dst_.characteristic(), dst_.degree(), cols);
    }

    const Field& src() const { return src_; }
    const Field& dst() const { return dst_; }

    elem_t operator()(elem_t x) const {
        elem_t r = 0;
        auto c = src_.coords(x);
        for (std::size_t t = 0; t < c.size(); ++t)
            if (c[t]) r = dst_.add(r, dst_.scale(c[t], images_[t]));
        return r;
    }

    std::optional<elem_t> try_pull(elem_t y) const {
        auto x = solver_.solve(dst_.coords(y));
        if (!x) return std::nullopt;
        return src_.from_coords(*x);
    }

    elem_t pull(elem_t y) const {
        auto x = try_pull(y);
        if (!x) throw std::domain_error("element " + dst_.format(y) + " is not in the image of " + src_.describe());
        return *x;
    }

private:
    bool is_root(elem_t r) const {
        elem_t s = 0, pw = dst_.one();
        for (auto c : src_.modulus()) {
            if (c) s = dst_.add(s, dst_.scale(c, pw));
            pw = dst_.mul(pw, r);
        }
        return s == 0;
    }

    Field src_, dst_;
    elem_t root_ = 0;
    std::vector<elem_t> images_;
    detail::ModpSolver solver_;
};

/// Tr_{F_{q^k}/F_q}(x) pulled back into the base field of the embedding.
inline elem_t trace_to_base(const Embedding& base_into_ext, elem_t x) {
    const Field& ext = base_into_ext.dst();
    return base_into_ext.pull(ext.trace(x, base_into_ext.src().order()));
}

enum class BasisKind { polynomial, normal };

/// Basis of F_{q^l} over F_q, elements stored in the extension field.
struct ExtensionBasis {
    BasisKind kind = BasisKind::polynomial;
    std::vector<elem_t> elements;
};

/// Coordinates of F_{q^l} over F_q with respect to a fixed basis.
class SubfieldCoordinates {
public:
    SubfieldCoordinates() = default;

    SubfieldCoordinates(Embedding base_into_ext, ExtensionBasis basis)
        : emb_(std::move(base_into_ext)), basis_(std::move(basis)) {
        const Field& base = emb_.src();
        const Field& ext = emb_.dst();
        const unsigned l = ext.degree() / base.degree();
        if (basis_.elements.size() != l)
            throw std::invalid_argument("basis has " + std::to_string(basis_.elements.size()) + " elements, expected " +
                                        std::to_string(l));
        std::vector<std::vector<unsigned>> cols;
        for (elem_t b : basis_.elements)
            for (unsigned t = 0; t < base.degree(); ++t) {
                elem_t bt = emb_(base.from_coords(unit(base.degree(), t)));
                cols.push_back(ext.coords(ext.mul(bt, b)));
            }
        solver_ = detail::ModpSolver(ext.characteristic(), ext.degree(), cols);
    }

    const Embedding& embedding() const { return emb_; }
    const ExtensionBasis& basis() const { return basis_; }
    std::size_t size() const { return basis_.elements.size(); }

    /// (c_1, ..., c_l) over F_q with x = sum c_i basis[i].
    std::vector<elem_t> decompose(elem_t x) const {
        auto sol = solver_.solve(emb_.dst().coords(x));
        if (!sol) throw std::logic_error("basis does not span the extension");
        const unsigned a = emb_.src().degree();
        std::vector<elem_t> out;
        for (std::size_t i = 0; i < basis_.elements.size(); ++i)
            out.push_back(emb_.src().from_coords(std::span<const unsigned>(sol->data() + i * a, a)));
        return out;
    }

    elem_t recompose(std::span<const elem_t> c) const {
        if (c.size() != basis_.elements.size()) throw std::invalid_argument("coordinate count mismatch");
        const Field& ext = emb_.dst();
        elem_t x = 0;
        for (std::size_t i = 0; i < c.size(); ++i) x = ext.add(x, ext.mul(emb_(c[i]), basis_.elements[i]));
        return x;
    }

private:
    static std::vector<unsigned> unit(unsigned m, unsigned t) {
        std::vector<unsigned> v(m, 0);
        v[t] = 1;
        return v;
    }

    Embedding emb_;
    ExtensionBasis basis_;
    detail::ModpSolver solver_;
};

/// {1, x, ..., x^{l-1}} with x the polynomial generator of the extension.
inline ExtensionBasis polynomial_basis(const Embedding& base_into_ext) {
    const Field& ext = base_into_ext.dst();
    const unsigned l = ext.degree() / base_into_ext.src().degree();
    ExtensionBasis b{BasisKind::polynomial, {}};
    elem_t y = ext.one();
    for (unsigned i = 0; i < l; ++i) {
        b.elements.push_back(y);
        y = ext.mul(y, ext.generator_x());
    }
    SubfieldCoordinates check(base_into_ext, b);  // throws when singular
    return b;
}

/// {theta, theta^q, ..., theta^{q^{l-1}}} for the first theta in scan order
/// whose conjugates are independent over F_q.
inline ExtensionBasis normal_basis(const Embedding& base_into_ext) {
    const Field& ext = base_into_ext.dst();
    const std::uint64_t q = base_into_ext.src().order();
    const unsigned l = ext.degree() / base_into_ext.src().degree();
    for (std::uint64_t r = 1; r < ext.order(); ++r) {
        const elem_t theta = ext.lex_element(r);
        ExtensionBasis b{BasisKind::normal, {}};
        elem_t y = theta;
        for (unsigned i = 0; i < l; ++i) {
            b.elements.push_back(y);
            y = ext.upow(y, q);
        }
        try {
            SubfieldCoordinates check(base_into_ext, b);
            return b;
        } catch (const precondition_error&) {
        }
    }
    throw std::logic_error("no normal basis found");
}

inline bool is_normal_basis(const ExtensionBasis& b, const Field& ext, std::uint64_t q) {
    if (b.kind != BasisKind::normal || b.elements.empty()) return false;
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        if (ext.upow(b.elements[i], q) != b.elements[(i + 1) % b.elements.size()]) return false;
    return true;
}

}  // namespace qac

#endif  // QAC_FIELD_HPP
