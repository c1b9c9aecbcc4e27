#ifndef QAC_KNOWN_CODES_HPP
#define QAC_KNOWN_CODES_HPP

// Reference codes over F_5 with H = Z3 x Z6: generator pairs (a, b) for
// C_(a,b) and the published systematic generator matrices [I_k | P].
// Coefficient u_{j*3 + i} belongs to Y^(i,j).

#include <string>
#include <vector>

#include "lincode.hpp"

namespace qac::known {

struct ReferenceCode {
    const char* name;
    std::vector<elem_t> a, b;
    std::size_t n, k, d;
    std::vector<std::string> parity;  // rows of P, digits separated by spaces
};

inline const ReferenceCode& c1() {
    static const ReferenceCode c{
        "C1",
        {3, 3, 3, 0, 0, 1, 4, 3, 4, 0, 4, 4, 4, 4, 3, 0, 1, 0},
        {2, 4, 1, 1, 3, 3, 0, 0, 4, 4, 1, 0, 0, 1, 4, 2, 2, 4},
        36, 14, 15,
        {
        "1 3 0 3 4 1 3 2 0 4 1 2 1 4 0 4 1 0 4 3 0 4",
        "1 3 4 4 3 1 4 0 2 4 1 3 0 2 2 4 3 1 1 3 4 0",
        "1 4 4 3 4 0 4 0 0 1 0 3 1 2 0 1 0 3 2 4 4 4",
        "4 4 3 3 4 2 3 3 1 3 4 0 3 3 2 1 1 1 1 0 3 0",
        "4 3 3 4 3 2 4 2 3 2 3 2 2 3 0 3 2 1 0 1 4 3",
        "4 4 2 4 4 1 4 1 2 4 2 1 4 0 0 1 1 2 0 4 0 4",
        "0 2 1 1 3 1 4 1 1 2 1 0 1 1 4 2 0 0 1 3 2 3",
        "0 1 2 1 4 3 1 2 1 1 1 1 0 2 1 4 1 0 0 3 3 2",
        "0 1 1 2 1 4 3 1 2 1 0 1 1 4 2 1 0 1 0 2 3 3",
        "1 2 2 2 3 4 4 4 4 1 3 1 4 4 3 3 1 0 1 2 2 4",
        "1 2 3 1 4 0 2 2 4 3 4 0 4 1 2 2 0 1 1 3 3 2",
        "1 1 3 2 2 1 3 4 2 3 4 1 3 0 4 1 0 0 2 1 4 3",
        "4 0 4 1 0 3 2 4 0 1 0 3 2 2 2 1 1 0 4 1 4 0",
        "4 1 4 0 2 3 0 0 4 1 2 3 0 3 4 3 0 1 4 1 0 4"
        }};
    return c;
}

inline const ReferenceCode& c2() {
    static const ReferenceCode c{
        "C2",
        {2, 4, 4, 3, 4, 4, 3, 2, 4, 3, 4, 4, 3, 4, 2, 3, 4, 4},
        {3, 0, 0, 0, 3, 3, 3, 0, 3, 0, 3, 0, 1, 1, 1, 1, 1, 1},
        36, 11, 18,
        {
        "0 1 0 4 4 0 0 1 4 4 0 4 1 3 2 3 3 1 1 3 3 2 0 1 4",
        "4 4 1 1 2 1 2 4 1 4 3 2 1 4 4 3 2 4 2 0 1 1 0 1 2",
        "1 0 4 0 0 0 4 4 4 1 4 1 0 2 3 3 1 1 3 3 2 3 1 4 0",
        "0 1 0 0 4 0 4 1 0 3 1 3 0 3 1 4 1 3 4 1 4 3 3 4 1",
        "4 4 0 0 0 0 1 1 4 3 3 4 1 4 3 1 4 1 3 0 3 1 3 0 1",
        "1 0 0 0 0 4 4 0 3 1 3 0 1 1 4 3 3 4 1 4 3 1 4 1 3",
        "1 1 4 0 4 0 4 3 2 1 0 0 4 1 3 1 2 3 3 2 3 4 2 4 2",
        "4 0 0 4 0 0 1 4 1 0 2 3 3 1 1 3 3 2 3 1 4 0 4 4 1",
        "0 4 1 1 2 1 1 2 1 3 2 1 2 4 2 2 4 4 3 1 2 0 0 3 3",
        "1 1 0 0 4 4 4 2 2 2 2 2 2 0 0 0 0 0 0 3 3 3 3 3 3",
        "0 0 1 1 1 1 1 2 2 2 4 4 4 1 1 1 1 1 1 1 1 1 4 4 4"
        }};
    return c;
}

/// [I_k | P] as printed.
inline linalg::Matrix printed_matrix(const ReferenceCode& c) {
    linalg::Matrix m;
    for (std::size_t i = 0; i < c.parity.size(); ++i) {
        linalg::Row r(c.parity.size(), 0);
        r[i] = 1;
        for (char ch : c.parity[i])
            if (ch >= '0' && ch <= '9') r.push_back(static_cast<elem_t>(ch - '0'));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace qac::known

#endif  // QAC_KNOWN_CODES_HPP
