#ifndef QAC_NUMTHEORY_HPP
#define QAC_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qac {

/// Raised when a mathematical precondition of the construction fails
/// (non-semisimple group ring, reducible modulus, non-normal basis, ...).
/// The CLI maps it to exit code 2.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace nt {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Trial-division factorization; fine for the orders met here (< 2^40).
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// b^e, throwing std::overflow_error instead of wrapping.
inline std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) throw std::overflow_error("integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("integer product overflows 64 bits");
    return a * b;
}

/// Multiplicative order of q modulo n (gcd(q, n) = 1 required; n = 1 gives 1).
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(q % n, n) != 1) throw precondition_error("multiplicative order undefined: gcd(q, n) != 1");
    std::uint64_t x = q % n, k = 1;
    while (x != 1) {
        x = mulmod(x, q, n);
        ++k;
    }
    return k;
}

/// Decomposes q = p^m; throws if q is not a prime power.
inline std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2, got " + std::to_string(q));
    auto f = factorize(q);
    if (f.size() != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    return {static_cast<unsigned>(f[0].first), f[0].second};
}

}  // namespace nt
}  // namespace qac

#endif  // QAC_NUMTHEORY_HPP
