#ifndef QAC_CHECKS_BATTERY_HPP
#define QAC_CHECKS_BATTERY_HPP

// Fixed battery of end-to-end checks shared by the acceptance binary and
// `qacodes verify-paper`. Each check returns pass/fail plus a one-line detail.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qac/known_codes.hpp"
#include "qac/qac.hpp"
#include "support.hpp"

namespace qac::checks {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Check {
    int id;
    std::string name;
    bool long_running;
    std::function<Outcome()> run;
};

struct Options {
    bool include_long = true;
    std::optional<std::size_t> tamper;  // bump coefficient a[i] of both reference codes
    unsigned threads = 0;
};

namespace detail {

/// Collects sub-results; the first failure wins the detail line.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && pass_) {
            pass_ = false;
            fail_ = what;
        }
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    Outcome done() const { return {pass_, pass_ ? notes_ : "failed: " + fail_ + (notes_.empty() ? "" : " (" + notes_ + ")")}; }

private:
    bool pass_ = true;
    std::string fail_, notes_;
};

template <class T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string enumerator_text(const std::map<std::size_t, std::uint64_t>& we) {
    std::string s;
    for (const auto& [w, c] : we) s += (s.empty() ? "" : " ") + str(w) + ":" + str(c);
    return s;
}

inline std::size_t min_nonzero_weight(const std::map<std::size_t, std::uint64_t>& we) {
    for (const auto& [w, c] : we)
        if (w > 0) return w;
    return 0;
}

inline QacContext worked_context() {
    const AbelianGroup G({3, 6});
    return QacContext::make(G, parse_generators(G, "(1,0);(0,2)"), 2);
}

inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

// Worked example over a_0..a_8 = (0,0),(1,0),(2,0),(0,2),(1,2),(2,2),(0,4),(1,4),(2,4).
inline const std::vector<std::vector<std::size_t>> kClasses{{0}, {1, 2}, {3, 6}, {4, 8}, {5, 7}};
inline const std::vector<std::vector<elem_t>> kIdempotents{{1, 1, 1, 1, 1, 1, 1, 1, 1},
                                                           {0, 1, 1, 0, 1, 1, 0, 1, 1},
                                                           {0, 0, 0, 1, 1, 1, 1, 1, 1},
                                                           {0, 1, 1, 1, 1, 0, 1, 0, 1},
                                                           {0, 1, 1, 1, 0, 1, 1, 1, 0}};
// F_4 packed: alpha = 2, alpha^2 = 3.
inline const std::vector<std::vector<elem_t>> kChildren{{1, 3, 2, 1, 3, 2, 1, 3, 2},
                                                        {1, 2, 3, 1, 2, 3, 1, 2, 3},
                                                        {1, 1, 1, 3, 3, 3, 2, 2, 2},
                                                        {1, 1, 1, 2, 2, 2, 3, 3, 3}};

inline Outcome worked_example() {
    Tally t;
    const auto ctx = worked_context();
    const auto& T = ctx.r_transform();

    std::set<std::vector<std::size_t>> got, want(kClasses.begin(), kClasses.end());
    for (const auto& c : T.classes()) got.insert(c.members);
    t.expect(got == want, "cyclotomic partition");

    const auto prim = primitive_idempotents(T);
    std::set<std::vector<elem_t>> ids;
    for (const auto& e : prim) ids.insert(e.element.coeffs);
    t.expect(ids == std::set<std::vector<elem_t>>(kIdempotents.begin(), kIdempotents.end()), "primitive idempotents");

    t.expect(ctx.extension_field().modulus() == poly::Poly{1, 1, 1}, "F_4 modulus");
    auto class_of = [&](const std::vector<elem_t>& coeffs) {
        for (const auto& e : prim)
            if (e.element.coeffs == coeffs) return e.class_index;
        throw std::logic_error("printed idempotent missing");
    };
    const std::vector<std::size_t> chosen{class_of(kIdempotents[0]), class_of(kIdempotents[1]), class_of(kIdempotents[2])};
    std::set<std::vector<elem_t>> children;
    std::vector<std::string> params;
    for (auto c : chosen) {
        const auto dec = refine_over_extension(prim[c], ctx);
        for (const auto& ch : dec.children)
            if (dec.s > 1) children.insert(ch.element.coeffs);
        params.push_back("k=" + str(dec.k) + " d=" + str(dec.d) + " s=" + str(dec.s) + " L=" + str(dec.L) +
                         " |T|=" + str(dec.exponent_set_size()));
    }
    t.expect(children == std::set<std::vector<elem_t>>(kChildren.begin(), kChildren.end()), "refined idempotents");
    t.expect(params == std::vector<std::string>{"k=1 d=1 s=1 L=3 |T|=4", "k=2 d=1 s=2 L=1 |T|=4", "k=2 d=1 s=2 L=1 |T|=4"},
             "refinement parameters");

    const auto count = count_one_generator(ctx, chosen);
    t.expect(count == 75, "count " + str(count) + " != 75");

    // Printed representative sets, each element canonicalized in its component.
    const GeneratorEnumerator en(ctx, chosen);
    auto S = [&](const std::vector<elem_t>& c) { return GroupRingElement::from_coeffs(ctx.S(), c); };
    const auto e1 = embed(GroupRingElement::from_coeffs(ctx.R(), kIdempotents[0]), ctx.base_into_ext(), ctx.S());
    auto pairs = [&](const GroupRingElement& x, const GroupRingElement& y) {
        return std::vector<GroupRingElement>{x, add(x, y), add(x, scale(2, y)), add(x, scale(3, y)), y};
    };
    const std::vector<std::vector<GroupRingElement>> printed{
        {e1, scale(2, e1), scale(3, e1)}, pairs(S(kChildren[0]), S(kChildren[1])), pairs(S(kChildren[2]), S(kChildren[3]))};
    std::string sizes;
    for (std::size_t j = 0; j < 3; ++j) {
        const GeneratorEnumerator single(ctx, {en.classes()[j]});
        std::set<std::uint64_t> idx;
        for (const auto& A : printed[j]) idx.insert(single.canonical_index(A));
        t.expect(idx.size() == printed[j].size() && idx.size() == single.count(), "representative set " + str(j + 1));
        sizes += (j ? "/" : "") + str(idx.size());
    }
    t.note("count=" + str(count) + " classes " + sizes);
    return t.done();
}

inline Outcome oracle_equivalence() {
    Tally t;
    const AbelianGroup z6({6}), z2z4({2, 4});
    const std::vector<QacContext> cases{QacContext::make(z6, parse_generators(z6, "(2)"), 2),
                                        QacContext::make(z2z4, parse_generators(z2z4, "(1,0);(0,2)"), 3)};
    for (const auto& ctx : cases) {
        const std::string tag = ctx.R().describe();
        const auto census = testing::brute_census(ctx.R(), ctx.index());
        const auto& T = ctx.r_transform();
        std::size_t codes = 0;
        for (const auto& s : nonempty_subsets(T.classes().size())) {
            const GeneratorEnumerator en(ctx, s);
            const auto it = census.codes.find(en.idempotent().coeffs);
            if (it == census.codes.end()) {
                t.expect(false, tag + ": idempotent without codes");
                continue;
            }
            t.expect(it->second.size() == count_one_generator(ctx, s), tag + ": count formula");
            std::set<testing::Subspace> listed;
            for (std::uint64_t i = 0; i < en.count(); ++i) listed.insert(testing::span_of_tuple(en.generator(i)));
            t.expect(listed.size() == en.count(), tag + ": duplicate codes");
            t.expect(listed == it->second, tag + ": enumerated codes differ from brute force");
            codes += listed.size();
        }
        // Unit orbits.
        std::map<std::vector<elem_t>, std::vector<GroupRingElement>> units;
        const std::uint64_t card = testing::ring_cardinality(ctx.R());
        bool orbits_ok = true;
        for (std::uint64_t x = 0; x < card; ++x)
            for (std::uint64_t y = 0; y < card; ++y) {
                const Tuple a{testing::element_at(ctx.R(), x), testing::element_at(ctx.R(), y)};
                const auto support = spectral_support(a, T);
                const auto e = idempotent_of_classes(T, support);
                auto u = units.find(e.coeffs);
                if (u == units.end()) u = units.emplace(e.coeffs, testing::brute_units(e)).first;
                std::set<std::vector<elem_t>> orbit;
                for (const auto& v : u->second) {
                    std::vector<elem_t> va;
                    for (const auto& c : a) {
                        const auto p = convolve(v, c);
                        va.insert(va.end(), p.coeffs.begin(), p.coeffs.end());
                    }
                    orbit.insert(va);
                }
                std::uint64_t expect = 1;
                for (auto c : support) expect *= nt::checked_pow(ctx.q(), T.classes()[c].size()) - 1;
                orbits_ok &= orbit.size() == expect;
            }
        t.expect(orbits_ok, tag + ": unit orbit size");
        t.note(tag + " l=" + str(ctx.index()) + ": " + str(census.tuples) + " tuples, " + str(codes) + " nonzero codes");
    }
    return t.done();
}

inline known::ReferenceCode tampered(known::ReferenceCode c, const Options& opt) {
    if (opt.tamper) {
        auto& x = c.a.at(*opt.tamper % c.a.size());
        x = (x + 1) % 5;
    }
    return c;
}

inline LinearCode constructed(const known::ReferenceCode& c) {
    const GroupRing R(Field::of_order(5), SubgroupContext::whole(AbelianGroup({3, 6})));
    return c_ab_code(GroupRingElement::from_coeffs(R, c.a), GroupRingElement::from_coeffs(R, c.b));
}

inline LinearCode printed_code(const known::ReferenceCode& c) {
    return LinearCode::from_rows(Field::of_order(5), c.n, known::printed_matrix(c));
}

inline Outcome short_code(const Options& opt) {
    Tally t;
    const auto ref = tampered(known::c2(), opt);
    const auto C = constructed(ref);
    t.expect(C.length() == 36 && C.dimension() == 11, "constructed parameters " + C.parameters());
    if (C.dimension() != 11) return t.done();
    const auto we = weight_enumerator(C, UINT64_MAX, opt.threads);
    const auto d = min_nonzero_weight(we);
    t.expect(d == 18, "constructed d = " + str(d));
    const auto P = printed_code(ref);
    t.expect(P.dimension() == 11, "printed k = " + str(P.dimension()));
    const auto wp = weight_enumerator(P, UINT64_MAX, opt.threads);
    t.expect(min_nonzero_weight(wp) == 18, "printed d = " + str(min_nonzero_weight(wp)));
    t.expect(we == wp, "weight enumerators differ");
    const auto punct = puncture(C, 0);
    const auto dp = min_distance_exhaustive(punct, UINT64_MAX, opt.threads);
    t.expect(punct.length() == 35 && punct.dimension() == 11 && dp == 17,
             "punctured " + punct.parameters() + " d=" + str(dp));
    t.note("[36,11," + str(d) + "]_5, A = {" + enumerator_text(we) + "}");
    t.note("punctured [35," + str(punct.dimension()) + "," + str(dp) + "]_5");
    t.note(std::string("printed rows ") + (C == P ? "span the same space" : "span a different space with the same weight enumerator"));
    return t.done();
}

inline Outcome long_code(const Options& opt) {
    Tally t;
    const auto ref = tampered(known::c1(), opt);
    const auto C = constructed(ref);
    t.expect(C.length() == 36 && C.dimension() == 14, "constructed parameters " + C.parameters());
    if (C.dimension() != 14) return t.done();
    auto audit = [&](const BzResult& r, const std::string& who) {
        std::size_t lower = 0, upper = SIZE_MAX;
        bool ok = !r.trace.empty();
        for (const auto& s : r.trace) {
            ok &= s.lower >= lower && s.upper <= upper;
            lower = s.lower;
            upper = s.upper;
        }
        ok &= !r.trace.empty() && lower >= upper && upper == r.distance;
        t.expect(ok, who + " bound trace not monotone or not closed");
        std::string ranks;
        for (auto k : r.ranks) ranks += (ranks.empty() ? "" : ",") + str(k);
        t.note(who + " d=" + str(r.distance) + " ranks " + ranks + ", " + str(r.trace.size()) + " steps");
    };
    const auto bz = min_distance_bz(C, opt.threads);
    t.expect(bz.distance == 15, "constructed d = " + str(bz.distance));
    audit(bz, "constructed");
    const auto P = printed_code(ref);
    t.expect(P.dimension() == 14, "printed k = " + str(P.dimension()));
    const auto bp = min_distance_bz(P, opt.threads);
    t.expect(bp.distance == 15, "printed d = " + str(bp.distance));
    audit(bp, "printed");
    return t.done();
}

struct RingCase {
    std::uint64_t q;
    const char* group;
    const char* gens;
};

inline Outcome properties() {
    using namespace testing;
    Tally t;
    const std::vector<RingCase> rings{{2, "Z3", "(1)"},      {2, "Z15", "(1)"},    {3, "Z8", "(1)"},      {3, "Z2xZ4", "(1,0);(0,1)"},
                                      {4, "Z5", "(1)"},      {5, "Z6", "(1)"},     {5, "Z4xZ4", "(1,0);(0,1)"}, {7, "Z9", "(1)"},
                                      {8, "Z7", "(1)"},      {9, "Z16", "(1)"}};
    std::size_t pairs = 0;
    for (const auto& c : rings) {
        const GroupRing R(Field::of_order(c.q), subgroup(c.group, c.gens));
        const auto prim = primitive_idempotents(R);
        auto total = GroupRingElement::zero(R);
        for (std::size_t i = 0; i < prim.size(); ++i) {
            t.expect(convolve(prim[i].element, prim[i].element) == prim[i].element, R.describe() + " idempotency");
            for (std::size_t j = i + 1; j < prim.size(); ++j)
                t.expect(convolve(prim[i].element, prim[j].element).is_zero(), R.describe() + " orthogonality");
            total = add(total, prim[i].element);
        }
        t.expect(total == GroupRingElement::one(R), R.describe() + " sum to one");
        const SpectralTransform T(R);
        for (int k = 0; k < 100; ++k, ++pairs) {
            const auto u = random_element(R), v = random_element(R);
            t.expect(T.forward(convolve(u, v)) == multiply(T.forward(u), T.forward(v)), R.describe() + " convolution theorem");
        }
    }
    t.note("10 rings, " + str(pairs) + " convolution pairs");

    const std::vector<RingCase> quasi{{2, "Z3xZ6", "(1,0);(0,2)"}, {3, "Z4xZ2", "(1,0)"}, {2, "Z21", "(3)"}, {5, "Z12", "(4)"}};
    for (const auto& c : quasi) {
        const auto H = subgroup(c.group, c.gens);
        const auto ctx = QacContext::make(H, c.q);
        const std::string tag = ctx.describe();
        for (int k = 0; k < 50; ++k) {
            std::vector<elem_t> u(H.group_order());
            for (auto& x : u) x = random_scalar(ctx.base_field());
            const auto a = phi_split(u, ctx);
            t.expect(phi_merge(a, ctx) == u, tag + " Phi round trip");
            const auto r = random_element(ctx.R());
            const auto ra = phi_split(act_on_ambient(r, u), ctx);
            Tuple expect;
            for (const auto& x : a) expect.push_back(convolve(r, x));
            t.expect(ra == expect, tag + " Phi module linearity");
            t.expect(varphi_inverse(varphi(a, ctx), ctx) == a, tag + " varphi round trip");
            t.expect(varphi(expect, ctx) == convolve(embed(r, ctx.base_into_ext(), ctx.S()), varphi(a, ctx)),
                     tag + " varphi module linearity");
            const auto e = idempotent_generator_of(a, ctx.r_transform());
            const auto f = idempotent_check_of(a, ctx.r_transform());
            t.expect(add(e, f) == GroupRingElement::one(ctx.R()), tag + " e + f = 1");
            t.expect(module_dimension(a) == module_dimension(e), tag + " dim Ra = dim Re");
        }
    }

    // Frobenius orbits over the full small enumeration.
    const AbelianGroup z6({6});
    const auto ctx = QacContext::make(z6, parse_generators(z6, "(2)"), 2, BasisKind::normal);
    std::size_t orbits = 0, codes = 0;
    for (const auto& s : nonempty_subsets(ctx.r_transform().classes().size())) {
        const GeneratorEnumerator en(ctx, s);
        for (auto r : frobenius_dedup(en, 0, en.count())) {
            ++orbits;
            const auto we = weight_enumerator(code_from_generator(en.generator(r), ctx, CodeView::group));
            for (auto x : en.frobenius_orbit(r)) {
                ++codes;
                t.expect(weight_enumerator(code_from_generator(en.generator(x), ctx, CodeView::group)) == we,
                         "Frobenius orbit weight enumerators");
            }
        }
    }
    t.note(str(codes) + " codes in " + str(orbits) + " Frobenius orbits");
    return t.done();
}

inline Outcome bz_agreement(const Options& opt) {
    using namespace testing;
    Tally t;
    std::size_t done = 0;
    std::map<std::uint64_t, std::size_t> per_q;
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t q = i % 2 ? 5 : 2;
        const Field F = Field::of_order(q);
        const std::size_t n = 4 + rng()() % 21;  // 4..24
        const std::size_t kmax = q == 2 ? 19 : 8;  // q^k <= 10^6
        const std::size_t k = 1 + rng()() % std::min(n, kmax);
        linalg::Matrix m(k, linalg::Row(n));
        for (auto& r : m)
            for (auto& x : r) x = random_scalar(F);
        const auto C = LinearCode::from_rows(F, n, m);
        const auto ex = min_distance_exhaustive(C, UINT64_MAX, opt.threads);
        const auto bz = min_distance_bz(C, opt.threads).distance;
        t.expect(ex == bz, C.parameters() + ": exhaustive " + str(ex) + " vs bz " + str(bz));
        ++done;
        ++per_q[q];
    }
    t.note(str(done) + " random codes (" + str(per_q[2]) + " binary, " + str(per_q[5]) + " quinary)");
    return t.done();
}

}  // namespace detail

inline std::vector<Check> battery(const Options& opt) {
    std::vector<Check> out{
        {1, "worked example: classes, idempotents, refinement, 75 codes, representatives", false, detail::worked_example},
        {2, "brute-force oracle equivalence", false, detail::oracle_equivalence},
        {3, "C2: [36,11,18]_5, printed matrix, weight enumerator, punctured [35,11,17]_5", false,
         [opt] { return detail::short_code(opt); }},
        {4, "C1: [36,14,15]_5 by Brouwer-Zimmermann, printed matrix", true, [opt] { return detail::long_code(opt); }},
        {5, "property suites", false, detail::properties},
        {6, "Brouwer-Zimmermann agrees with exhaustive scan", false, [opt] { return detail::bz_agreement(opt); }},
    };
    if (!opt.include_long) std::erase_if(out, [](const Check& c) { return c.long_running; });
    return out;
}

/// Runs every check, printing "PASS|FAIL <id> <name>" lines. Returns the number of failures.
inline int run_battery(const std::vector<Check>& checks, std::ostream& os, bool timings = true) {
    int failed = 0;
    for (const auto& c : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !r.pass;
        os << (r.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.name;
        if (timings) os << " [" << detail::str(static_cast<int>(secs * 1000)) << " ms]";
        os << '\n';
        if (!r.detail.empty()) os << "     " << r.detail << '\n';
        os.flush();
    }
    return failed;
}

}  // namespace qac::checks

#endif  // QAC_CHECKS_BATTERY_HPP
