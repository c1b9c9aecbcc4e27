#ifndef QAC_LINALG_HPP
#define QAC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "field.hpp"

namespace qac::linalg {

using Row = std::vector<elem_t>;
using Matrix = std::vector<Row>;

struct Echelon {
    Matrix rows;                      // reduced, pivot entries 1
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form; zero rows dropped.
inline Echelon rref(const Field& F, Matrix a) {
    Echelon out;
    if (a.empty()) return out;
    const std::size_t n = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const elem_t inv = F.inv(a[r][c]);
        for (auto& v : a[r]) v = F.mul(v, inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const elem_t f = F.neg(a[i][c]);
            for (std::size_t j = c; j < n; ++j)
                if (a[r][j]) a[i][j] = F.add(a[i][j], F.mul(f, a[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

inline std::size_t rank(const Field& F, Matrix a) { return rref(F, std::move(a)).rank(); }

/// True when v lies in the row space of an echelon form.
inline bool in_span(const Field& F, const Echelon& e, Row v) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const elem_t c = v[e.pivots[i]];
        if (!c) continue;
        const elem_t f = F.neg(c);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (e.rows[i][j]) v[j] = F.add(v[j], F.mul(f, e.rows[i][j]));
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace qac::linalg

#endif  // QAC_LINALG_HPP
