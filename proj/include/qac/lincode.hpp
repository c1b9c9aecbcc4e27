#ifndef QAC_LINCODE_HPP
#define QAC_LINCODE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"

namespace qac {

using CodeRow = std::vector<std::uint8_t>;

/// Linear [n, k] code over F_q (q <= 256), held as its rref generator matrix.
/// Entries are packed field elements.
class LinearCode {
public:
    LinearCode() = default;

    static LinearCode from_rows(const Field& F, std::size_t n, const linalg::Matrix& rows) {
        if (F.order() > 256) throw std::invalid_argument("codes are supported for q <= 256");
        for (const auto& r : rows)
            if (r.size() != n) throw std::invalid_argument("row length differs from code length");
        auto e = linalg::rref(F, rows);
        LinearCode c;
        c.F_ = F;
        c.n_ = n;
        c.pivots_ = e.pivots;
        for (const auto& r : e.rows) c.rows_.emplace_back(r.begin(), r.end());
        return c;
    }

    static LinearCode from_rows(const Field& F, std::size_t n, const std::vector<CodeRow>& rows) {
        linalg::Matrix m;
        for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
        return from_rows(F, n, m);
    }

    const Field& field() const { return F_; }
    std::uint64_t q() const { return F_.order(); }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<CodeRow>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    linalg::Matrix matrix() const {
        linalg::Matrix m;
        for (const auto& r : rows_) m.emplace_back(r.begin(), r.end());
        return m;
    }

    /// m G for a message of length k.
    CodeRow encode(const std::vector<elem_t>& message) const {
        if (message.size() != rows_.size()) throw std::invalid_argument("message length differs from k");
        CodeRow c(n_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!message[i]) continue;
            for (std::size_t j = 0; j < n_; ++j)
                c[j] = static_cast<std::uint8_t>(F_.add(c[j], F_.mul(message[i], rows_[i][j])));
        }
        return c;
    }

    bool contains(const CodeRow& v) const {
        linalg::Echelon e{matrix(), pivots_};
        return linalg::in_span(F_, e, linalg::Row(v.begin(), v.end()));
    }

    std::string parameters() const {
        return "[" + std::to_string(n_) + "," + std::to_string(dimension()) + "]_" + std::to_string(q());
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.F_ == b.F_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    Field F_;
    std::size_t n_ = 0;
    std::vector<CodeRow> rows_;
    std::vector<std::size_t> pivots_;
};

inline bool row_space_equal(const Field& F, std::size_t n, const linalg::Matrix& A, const linalg::Matrix& B) {
    return LinearCode::from_rows(F, n, A) == LinearCode::from_rows(F, n, B);
}

inline LinearCode puncture(const LinearCode& C, std::size_t coord) {
    if (coord >= C.length()) throw std::out_of_range("coordinate out of range");
    linalg::Matrix m = C.matrix();
    for (auto& r : m) r.erase(r.begin() + static_cast<std::ptrdiff_t>(coord));
    return LinearCode::from_rows(C.field(), C.length() - 1, m);
}

inline LinearCode shorten(const LinearCode& C, std::size_t coord) {
    if (coord >= C.length()) throw std::out_of_range("coordinate out of range");
    const Field& F = C.field();
    linalg::Matrix m = C.matrix();
    auto it = std::find_if(m.begin(), m.end(), [&](const linalg::Row& r) { return r[coord] != 0; });
    if (it != m.end()) {
        const linalg::Row piv = *it;
        m.erase(it);
        const elem_t inv = F.inv(piv[coord]);
        for (auto& r : m) {
            if (!r[coord]) continue;
            const elem_t f = F.neg(F.mul(r[coord], inv));
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = F.add(r[j], F.mul(f, piv[j]));
        }
    }
    for (auto& r : m) r.erase(r.begin() + static_cast<std::ptrdiff_t>(coord));
    return LinearCode::from_rows(F, C.length() - 1, m);
}

// ---------------------------------------------------------------------------
// Text format: "q n k" then k rows of n space-separated digits.

inline void write_code(std::ostream& os, const LinearCode& C) {
    os << C.q() << ' ' << C.length() << ' ' << C.dimension() << '\n';
    for (const auto& r : C.rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << static_cast<unsigned>(r[j]);
        os << '\n';
    }
}

inline LinearCode read_code(std::istream& is) {
    std::uint64_t q = 0;
    std::size_t n = 0, k = 0;
    if (!(is >> q >> n >> k)) throw std::invalid_argument("code file: expected header \"q n k\"");
    const Field F = Field::of_order(q);
    linalg::Matrix m(k, linalg::Row(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long v = -1;
            if (!(is >> v)) throw std::invalid_argument("code file: row " + std::to_string(i + 1) + " is short");
            if (v < 0 || static_cast<std::uint64_t>(v) >= q)
                throw std::invalid_argument("code file: entry " + std::to_string(v) + " out of range");
            m[i][j] = static_cast<elem_t>(v);
        }
    std::string extra;
    if (is >> extra) throw std::invalid_argument("code file: trailing data after " + std::to_string(k) + " rows");
    return LinearCode::from_rows(F, n, m);
}

/// Rows of digits separated by whitespace; a lightweight form for printed matrices.
inline linalg::Matrix parse_matrix(const std::string& text) {
    linalg::Matrix m;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        linalg::Row r;
        for (char ch : line)
            if (ch >= '0' && ch <= '9') r.push_back(static_cast<elem_t>(ch - '0'));
        if (!r.empty()) m.push_back(std::move(r));
    }
    return m;
}

namespace detail {

/// Byte tables for the scan kernels.
struct Kernel {
    unsigned q = 2;
    std::size_t n = 0;
    std::vector<std::uint8_t> add;              // q x q
    std::vector<std::vector<CodeRow>> multiples;  // [row][c] = c * row

    Kernel(const Field& F, const std::vector<CodeRow>& rows, std::size_t length)
        : q(static_cast<unsigned>(F.order())), n(length) {
        add.resize(q * q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) add[a * q + b] = static_cast<std::uint8_t>(F.add(a, b));
        for (const auto& r : rows) {
            std::vector<CodeRow> m(q, CodeRow(n));
            for (unsigned c = 0; c < q; ++c)
                for (std::size_t j = 0; j < n; ++j) m[c][j] = static_cast<std::uint8_t>(F.mul(c, r[j]));
            multiples.push_back(std::move(m));
        }
    }

    /// v += c * row; returns the new weight given the old one.
    std::size_t axpy(CodeRow& v, std::size_t row, unsigned c, std::size_t weight) const {
        const std::uint8_t* r = multiples[row][c].data();
        const std::uint8_t* t = add.data();
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint8_t old = v[j];
            const std::uint8_t nw = t[old * q + r[j]];
            v[j] = nw;
            weight += (nw != 0) - (old != 0);
        }
        return weight;
    }
};

inline unsigned resolve_threads(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

/// Runs task(i) for i < count on a pool of workers.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) task(i);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

/// Visits every codeword whose message has first nonzero entry 1 (one per
/// projective point), calling visit(weight). Messages are split into chunks by
/// the leading row and a prefix of the next free digits; inside a chunk the
/// free digits run through a modular q-ary Gray code, so each step is a single
/// scaled-row addition.
template <class Visit>
void projective_scan(const LinearCode& C, unsigned threads, Visit&& make_visitor) {
    const std::size_t k = C.dimension();
    if (k == 0) return;
    const Kernel K(C.field(), C.rows(), C.length());
    const unsigned q = K.q;
    const Field& F = C.field();
    // delta[v] = element(v + 1 mod q) - element(v), digit values are packed elements.
    std::vector<unsigned> delta(q);
    for (unsigned v = 0; v < q; ++v) delta[v] = static_cast<unsigned>(F.sub((v + 1) % q, v));

    struct Chunk {
        std::size_t lead;
        std::vector<unsigned> prefix;  // digits for rows lead+1 .. lead+prefix.size()
    };
    std::vector<Chunk> chunks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t free = k - 1 - lead;
        std::size_t fixed = 0;
        std::uint64_t pieces = 1;
        while (fixed < free && free - fixed > 6 && pieces < 4096) {
            ++fixed;
            pieces *= q;
        }
        std::vector<unsigned> digits(fixed, 0);
        for (std::uint64_t c = 0; c < pieces; ++c) {
            chunks.push_back({lead, digits});
            for (std::size_t i = 0; i < fixed; ++i) {
                if (++digits[i] < q) break;
                digits[i] = 0;
            }
        }
    }
    parallel_for(chunks.size(), threads, [&](std::size_t ci) {
        auto visit = make_visitor();
        const Chunk& ch = chunks[ci];
        CodeRow v(K.n, 0);
        std::size_t w = K.axpy(v, ch.lead, 1, 0);
        for (std::size_t i = 0; i < ch.prefix.size(); ++i)
            if (ch.prefix[i]) w = K.axpy(v, ch.lead + 1 + i, ch.prefix[i], w);
        const std::size_t first = ch.lead + 1 + ch.prefix.size();
        const std::size_t free = k - first;
        std::vector<unsigned> gray(free, 0);
        visit(w, v);
        for (std::uint64_t step = 1;; ++step) {
            std::uint64_t s = step;
            std::size_t pos = 0;
            while (pos < free && s % q == 0) {
                s /= q;
                ++pos;
            }
            if (pos >= free) break;
            w = K.axpy(v, first + pos, delta[gray[pos]], w);
            gray[pos] = (gray[pos] + 1) % q;
            visit(w, v);
        }
    });
}

}  // namespace detail

inline std::uint64_t message_count(const LinearCode& C) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < C.dimension(); ++i) {
        if (total > UINT64_MAX / C.q()) return UINT64_MAX;
        total *= C.q();
    }
    return total;
}

/// Exact minimum distance by scanning all codewords. Zero code gives 0.
inline std::size_t min_distance_exhaustive(const LinearCode& C, std::uint64_t budget = UINT64_MAX, unsigned threads = 0) {
    if (message_count(C) > budget)
        throw std::length_error("exhaustive scan of " + C.parameters() + " exceeds the message budget; use the bz method");
    if (C.dimension() == 0) return 0;
    std::atomic<std::size_t> best{C.length()};
    detail::projective_scan(C, threads, [&] {
        return [&, local = C.length()](std::size_t w, const CodeRow&) mutable {
            if (w < local) {
                local = w;
                std::size_t cur = best.load();
                while (w < cur && !best.compare_exchange_weak(cur, w)) {
                }
            }
        };
    });
    return best.load();
}

/// weight -> number of codewords (including the zero word).
inline std::map<std::size_t, std::uint64_t> weight_enumerator(const LinearCode& C, std::uint64_t budget = UINT64_MAX,
                                                              unsigned threads = 0) {
    if (message_count(C) > budget)
        throw std::length_error("weight enumerator of " + C.parameters() + " exceeds the message budget");
    std::vector<std::uint64_t> total(C.length() + 1, 0);
    std::mutex mu;
    struct Local {
        std::vector<std::uint64_t>* total;
        std::mutex* mu;
        std::vector<std::uint64_t> counts;
        Local(std::vector<std::uint64_t>* t, std::mutex* m, std::size_t n) : total(t), mu(m), counts(n + 1, 0) {}
        Local(Local&& o) noexcept : total(o.total), mu(o.mu), counts(std::move(o.counts)) {}
        Local(const Local&) = delete;
        ~Local() {
            if (counts.empty()) return;
            std::lock_guard<std::mutex> lock(*mu);
            for (std::size_t i = 0; i < counts.size(); ++i) (*total)[i] += counts[i];
        }
        void operator()(std::size_t w, const CodeRow&) { ++counts[w]; }
    };
    detail::projective_scan(C, threads, [&] { return Local(&total, &mu, C.length()); });
    std::map<std::size_t, std::uint64_t> out{{0, 1}};
    for (std::size_t w = 1; w < total.size(); ++w)
        if (total[w]) out[w] = total[w] * (C.q() - 1);
    return out;
}

struct BoundStep {
    std::size_t weight;  // message weight just completed
    std::size_t matrix;  // information-set matrix index
    std::size_t lower, upper;
};

struct BzResult {
    std::size_t distance = 0;
    std::vector<std::size_t> ranks;  // rank of each information set on its own columns
    std::vector<BoundStep> trace;
};

namespace detail {

struct InfoSetMatrix {
    std::vector<CodeRow> rows;  // systematic on the k pivots
    std::size_t rank = 0;       // pivots among this set's own columns
};

inline std::vector<InfoSetMatrix> information_sets(const LinearCode& C) {
    const Field& F = C.field();
    const std::size_t n = C.length(), k = C.dimension();
    std::vector<char> used(n, 0);
    std::vector<InfoSetMatrix> out;
    for (;;) {
        linalg::Matrix a = C.matrix();
        std::vector<char> has_pivot(k, 0);
        std::vector<std::size_t> claimed;
        std::size_t placed = 0;
        // Pivots on columns with used[c] == want, lowest index first.
        auto eliminate = [&](char want) {
            for (std::size_t c = 0; c < n && placed < k; ++c) {
                if (used[c] != want) continue;
                std::size_t piv = k;
                for (std::size_t i = 0; i < k; ++i)
                    if (!has_pivot[i] && a[i][c]) {
                        piv = i;
                        break;
                    }
                if (piv == k) continue;
                has_pivot[piv] = 1;
                const elem_t inv = F.inv(a[piv][c]);
                for (auto& x : a[piv]) x = F.mul(x, inv);
                for (std::size_t i = 0; i < k; ++i) {
                    if (i == piv || !a[i][c]) continue;
                    const elem_t f = F.neg(a[i][c]);
                    for (std::size_t j = 0; j < n; ++j)
                        if (a[piv][j]) a[i][j] = F.add(a[i][j], F.mul(f, a[piv][j]));
                }
                if (!want) claimed.push_back(c);
                ++placed;
            }
        };
        eliminate(0);
        if (claimed.empty()) break;
        eliminate(1);  // complete on columns of earlier sets
        if (placed != k) throw std::logic_error("information set completion failed");
        for (auto c : claimed) used[c] = 1;
        InfoSetMatrix m;
        m.rank = claimed.size();
        for (const auto& r : a) m.rows.emplace_back(r.begin(), r.end());
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace detail

/// Brouwer-Zimmermann: ascending message weight over several information
/// sets, stopping once the certified lower bound meets the best weight seen.
inline BzResult min_distance_bz(const LinearCode& C, unsigned threads = 0) {
    BzResult res;
    const std::size_t k = C.dimension(), n = C.length();
    if (k == 0) return res;
    const Field& F = C.field();
    const auto sets = detail::information_sets(C);
    for (const auto& s : sets) res.ranks.push_back(s.rank);
    std::vector<detail::Kernel> kernels;
    for (const auto& s : sets) kernels.emplace_back(F, s.rows, n);
    const unsigned q = static_cast<unsigned>(F.order());
    // Nonzero values are packed elements 1..q-1; Gray digits index them.
    std::vector<unsigned> delta(q - 1);
    for (unsigned v = 0; v + 1 < q; ++v) delta[v] = static_cast<unsigned>(F.sub((v + 1) % (q - 1) + 1, v + 1));

    std::atomic<std::size_t> upper{n};
    auto lower_bound = [&](std::size_t w, std::size_t done) {
        // Sets 0..done have all messages of weight <= w seen, later ones <= w - 1.
        std::size_t lb = 0;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            const std::size_t ww = j <= done ? w + 1 : w;
            const std::size_t missing = k - sets[j].rank;
            if (ww > missing) lb += ww - missing;
        }
        return lb;
    };

    for (std::size_t w = 1; w <= k; ++w) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            std::vector<std::vector<std::size_t>> combos;
            std::vector<std::size_t> c(w);
            for (std::size_t i = 0; i < w; ++i) c[i] = i;
            for (;;) {
                combos.push_back(c);
                std::size_t i = w;
                while (i > 0 && c[i - 1] == k - w + i - 1) --i;
                if (i == 0) break;
                ++c[i - 1];
                for (std::size_t t = i; t < w; ++t) c[t] = c[t - 1] + 1;
            }
            const auto& K = kernels[j];
            detail::parallel_for(combos.size(), threads, [&](std::size_t ci) {
                const auto& sup = combos[ci];
                CodeRow v(n, 0);
                std::size_t wt = 0;
                for (auto r : sup) wt = K.axpy(v, r, 1, wt);
                std::size_t local = wt;
                const std::size_t free = w - 1;
                std::vector<unsigned> gray(free, 0);
                for (std::uint64_t step = 1;; ++step) {
                    std::uint64_t s = step;
                    std::size_t pos = 0;
                    while (pos < free && s % (q - 1) == 0) {
                        s /= q - 1;
                        ++pos;
                    }
                    if (pos >= free) break;
                    // the first support entry stays 1
                    wt = K.axpy(v, sup[pos + 1], delta[gray[pos]], wt);
                    gray[pos] = (gray[pos] + 1) % (q - 1);
                    local = std::min(local, wt);
                }
                std::size_t cur = upper.load();
                while (local < cur && !upper.compare_exchange_weak(cur, local)) {
                }
            });
            const std::size_t lb = lower_bound(w, j);
            res.trace.push_back({w, j, lb, upper.load()});
            if (lb >= upper.load()) {
                res.distance = upper.load();
                return res;
            }
        }
    }
    res.distance = upper.load();
    return res;
}

}  // namespace qac

#endif  // QAC_LINCODE_HPP
