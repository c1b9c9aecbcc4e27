// qacodes: construct, count and enumerate 1-generator quasi-abelian codes.
// Exit status: 0 ok, 1 usage, 2 mathematical precondition violated.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "battery.hpp"
#include "jobspec.hpp"
#include "qac/qac.hpp"

namespace {

using namespace qac;
using qacodes::JobSpec;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

QacContext make_context(const JobSpec& s) {
    const auto G = AbelianGroup::parse(s.group);
    const auto H = s.subgroup.empty() ? SubgroupContext::whole(G) : SubgroupContext::make(G, parse_generators(G, s.subgroup));
    BasisKind basis = s.dedup_frobenius ? BasisKind::normal : BasisKind::polynomial;
    if (s.basis == "normal") basis = BasisKind::normal;
    if (s.basis == "polynomial") basis = BasisKind::polynomial;
    return QacContext::make(H, s.q, basis);
}

std::string subset_label(const std::vector<std::size_t>& classes) {
    std::string s = "{";
    for (std::size_t i = 0; i < classes.size(); ++i) s += (i ? "," : "") + std::to_string(classes[i] + 1);
    return s + "}";
}

/// Selected class subsets: the one from --idempotents, or every nonempty subset.
std::vector<std::vector<std::size_t>> selected_subsets(const JobSpec& s, const QacContext& ctx) {
    const std::size_t r = ctx.r_transform().classes().size();
    if (!s.idempotents.empty()) {
        std::vector<std::size_t> out;
        std::stringstream ss(s.idempotents);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 1 || v > r)
                throw UsageError("--idempotents: '" + tok + "' is not a class number in 1.." + std::to_string(r));
            out.push_back(v - 1);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        if (out.empty()) throw UsageError("--idempotents: empty list");
        return {out};
    }
    if (r > 20) throw UsageError(std::to_string(r) + " classes: pass --idempotents to pick a subset");
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) sub.push_back(i);
        out.push_back(sub);
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, std::uint64_t count) {
    if (text.empty()) return {0, count};
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--range expects lo:hi");
    std::uint64_t lo = 0, hi = count;
    try {
        if (colon > 0) lo = std::stoull(text.substr(0, colon));
        if (colon + 1 < text.size()) hi = std::stoull(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--range expects lo:hi");
    }
    hi = std::min(hi, count);
    if (lo > hi) throw UsageError("--range: lo exceeds hi");
    return {lo, hi};
}

int cmd_idempotents(const JobSpec& s, std::ostream& out) {
    const auto ctx = make_context(s);
    const auto& H = ctx.H();
    out << "# " << ctx.describe() << '\n';
    const auto prim = primitive_idempotents(ctx.r_transform());
    for (const auto& e : prim) {
        out << 'e' << e.class_index + 1 << "\trep=" << H.element(e.inducing_class.representative).to_string()
            << "\tk=" << e.dimension << '\t' << e.element.to_string() << '\n';
        if (!s.refine) continue;
        const auto dec = refine_over_extension(e, ctx);
        out << "  d=" << dec.d << " s=" << dec.s << " L=" << dec.L << " |T|=" << dec.exponent_set_size() << '\n';
        for (std::size_t i = 0; i < dec.children.size(); ++i)
            out << "  e" << e.class_index + 1 << '.' << i + 1
                << "\trep=" << H.element(dec.children[i].inducing_class.representative).to_string() << '\t'
                << dec.children[i].element.to_string() << '\n';
    }
    return 0;
}

int cmd_count(const JobSpec& s, std::ostream& out) {
    const auto ctx = make_context(s);
    const bool tsv = s.format == "tsv";
    out << (tsv ? "idempotents\tdimension\tcount\n" : "# " + ctx.describe() + "\n");
    std::uint64_t total = 0;
    for (const auto& sub : selected_subsets(s, ctx)) {
        const auto n = count_one_generator(ctx, sub);
        std::size_t dim = 0;
        for (auto c : sub) dim += ctx.r_transform().classes()[c].size();
        if (n > UINT64_MAX - total) throw std::overflow_error("total count exceeds 64 bits");
        total += n;
        if (tsv)
            out << subset_label(sub) << '\t' << dim << '\t' << n << '\n';
        else
            out << subset_label(sub) << "\tdim " << dim << "\tcount " << n << '\n';
    }
    if (!tsv) out << "# total " << total << '\n';
    return 0;
}

int cmd_enumerate(const JobSpec& s, std::ostream& out) {
    const auto ctx = make_context(s);
    const auto subsets = selected_subsets(s, ctx);
    if (!s.range.empty() && subsets.size() != 1) throw UsageError("--range needs a single --idempotents selection");
    const bool tsv = s.format == "tsv";
    if (tsv) out << "idempotents\tindex\tgenerator\tdimension" << (s.distance ? "\tdistance" : "") << '\n';
    else out << "# " << ctx.describe() << '\n';
    std::uint64_t total = 0;
    for (const auto& sub : subsets) {
        const GeneratorEnumerator en(ctx, sub);
        const auto [lo, hi] = parse_range(s.range, en.count());
        std::vector<std::uint64_t> indices;
        if (s.dedup_frobenius) {
            indices = frobenius_dedup(en, lo, hi);
        } else {
            for (std::uint64_t i = lo; i < hi; ++i) indices.push_back(i);
        }
        if (!tsv)
            out << "# idempotent " << subset_label(sub) << " count " << en.count() << " emitted " << indices.size() << '\n';
        // Records are built in parallel and printed in index order.
        std::vector<std::string> lines(indices.size());
        const unsigned workers = s.distance ? qac::detail::resolve_threads(s.threads) : 1;
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next++) < indices.size();) {
                const auto a = en.generator(indices[i]);
                std::string line = (tsv ? subset_label(sub) + "\t" : "") + std::to_string(indices[i]) + '\t' +
                                   format_tuple(a) + '\t' + std::to_string(en.dimension());
                if (s.distance) {
                    const auto C = code_from_generator(a, ctx);
                    line += '\t' + std::to_string(min_distance_bz(C, 1).distance);
                }
                lines[i] = std::move(line);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (const auto& l : lines) out << l << '\n';
        total += indices.size();
    }
    if (!tsv) out << "# total " << total << '\n';
    return 0;
}

int cmd_mindist(const JobSpec& s, std::ostream& out) {
    std::ifstream in(s.input);
    if (!in) throw UsageError("cannot open " + s.input);
    const auto C = read_code(in);
    std::string method = s.method;
    if (method == "auto") method = message_count(C) <= 2'000'000'000ULL ? "exhaustive" : "bz";
    out << C.parameters() << '\n';
    if (method == "exhaustive") {
        out << "d " << min_distance_exhaustive(C, UINT64_MAX, s.threads) << " (exhaustive)\n";
        return 0;
    }
    const auto r = min_distance_bz(C, s.threads);
    out << "information-set ranks";
    for (auto k : r.ranks) out << ' ' << k;
    out << '\n';
    for (const auto& st : r.trace)
        out << "w=" << st.weight << " matrix=" << st.matrix + 1 << " lower=" << st.lower << " upper=" << st.upper << '\n';
    out << "d " << r.distance << " (bz)\n";
    return 0;
}

int cmd_code(const JobSpec& s, std::ostream& out) {
    const auto ctx = make_context(s);
    const auto a = parse_tuple(ctx.R(), s.generator);
    if (a.size() != ctx.index())
        throw UsageError("--generator: expected " + std::to_string(ctx.index()) + " blocks separated by '|'");
    const auto C = code_from_generator(a, ctx, s.view == "group" ? CodeView::group : CodeView::concatenated);
    if (s.output.empty()) {
        write_code(out, C);
    } else {
        std::ofstream f(s.output);
        if (!f) throw UsageError("cannot write " + s.output);
        write_code(f, C);
        out << C.parameters() << " written to " << s.output << '\n';
    }
    return 0;
}

int cmd_verify(const JobSpec& s, std::ostream& out) {
    checks::Options opt;
    opt.include_long = s.long_run;
    opt.tamper = s.tamper;
    opt.threads = s.threads;
    const int failed = checks::run_battery(checks::battery(opt), out);
    out << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << '\n';
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-generator quasi-abelian codes"};
    JobSpec job;
    qacodes::build_app(app, job);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        if (job.command == "idempotents") return cmd_idempotents(job, std::cout);
        if (job.command == "count") return cmd_count(job, std::cout);
        if (job.command == "enumerate") return cmd_enumerate(job, std::cout);
        if (job.command == "mindist") return cmd_mindist(job, std::cout);
        if (job.command == "code") return cmd_code(job, std::cout);
        if (job.command == "verify-paper") return cmd_verify(job, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
