#ifndef QACODES_JOBSPEC_HPP
#define QACODES_JOBSPEC_HPP

// Parsed command line for qacodes. build_app wires every flag into a JobSpec;
// to_args renders the canonical flag list, which parses back to an equal JobSpec.

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qacodes {

struct JobSpec {
    std::string command;  // idempotents, count, enumerate, mindist, code, verify-paper
    std::string group, subgroup;
    std::uint64_t q = 0;
    std::string idempotents;  // 1-based class numbers, "1,2,3"; empty = every nonzero subset
    std::string basis = "auto";
    std::string range;  // "lo:hi"
    std::string format = "text";
    std::string method = "auto";
    std::string input, output, generator;
    std::string view = "concatenated";
    std::optional<std::size_t> tamper;
    unsigned threads = 0;
    bool refine = false, dedup_frobenius = false, distance = false, long_run = false;

    friend bool operator==(const JobSpec&, const JobSpec&) = default;

    std::vector<std::string> to_args() const {
        std::vector<std::string> a{command};
        auto opt = [&](const char* flag, const std::string& v) {
            if (!v.empty()) {
                a.push_back(flag);
                a.push_back(v);
            }
        };
        auto flag = [&](const char* f, bool on) {
            if (on) a.push_back(f);
        };
        opt("--group", group);
        opt("--subgroup", subgroup);
        if (q) opt("--q", std::to_string(q));
        opt("--idempotents", idempotents);
        if (basis != "auto") opt("--basis", basis);
        opt("--range", range);
        if (format != "text") opt("--format", format);
        if (method != "auto") opt("--method", method);
        opt("--in", input);
        opt("--out", output);
        opt("--generator", generator);
        if (view != "concatenated") opt("--view", view);
        if (tamper) opt("--tamper", std::to_string(*tamper));
        if (threads) opt("--threads", std::to_string(threads));
        flag("--refine", refine);
        flag("--dedup-frobenius", dedup_frobenius);
        flag("--distance", distance);
        flag("--long", long_run);
        return a;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& x : to_args()) s += (s.empty() ? "" : " ") + x;
        return s;
    }
};

namespace detail {
inline void ring_flags(CLI::App* sub, JobSpec& s) {
    sub->add_option("--group", s.group, "ambient group, e.g. Z3xZ6")->required();
    sub->add_option("--subgroup", s.subgroup, "generators of H, e.g. \"(1,0);(0,2)\"; default: the whole group");
    sub->add_option("--q", s.q, "field order")->required()->check(CLI::PositiveNumber);
    sub->add_option("--basis", s.basis, "basis of F_{q^l} over F_q")->check(CLI::IsMember({"auto", "polynomial", "normal"}));
}
inline void thread_flag(CLI::App* sub, JobSpec& s) {
    sub->add_option("--threads", s.threads, "worker threads (0 = hardware)");
}
}  // namespace detail

inline void build_app(CLI::App& app, JobSpec& s) {
    app.require_subcommand(1);
    auto* idem = app.add_subcommand("idempotents", "primitive idempotents of F_q[H]");
    detail::ring_flags(idem, s);
    idem->add_flag("--refine", s.refine, "also split each idempotent over F_{q^l}");

    auto* count = app.add_subcommand("count", "number of 1-generator codes per idempotent");
    detail::ring_flags(count, s);
    count->add_option("--idempotents", s.idempotents, "class numbers to sum, e.g. 1,2,3");
    count->add_option("--format", s.format)->check(CLI::IsMember({"text", "tsv"}));

    auto* en = app.add_subcommand("enumerate", "one record per 1-generator code");
    detail::ring_flags(en, s);
    detail::thread_flag(en, s);
    en->add_option("--idempotents", s.idempotents, "class numbers to sum, e.g. 1,2,3");
    en->add_flag("--dedup-frobenius", s.dedup_frobenius, "emit one code per Frobenius orbit");
    en->add_option("--range", s.range, "index range lo:hi within the selected idempotent");
    en->add_flag("--distance", s.distance, "append the minimum distance of each code");
    en->add_option("--format", s.format)->check(CLI::IsMember({"text", "tsv"}));

    auto* md = app.add_subcommand("mindist", "minimum distance of a code file");
    md->add_option("--in", s.input, "code file: \"q n k\" then k rows")->required()->check(CLI::ExistingFile);
    md->add_option("--method", s.method)->check(CLI::IsMember({"auto", "exhaustive", "bz"}));
    detail::thread_flag(md, s);

    auto* code = app.add_subcommand("code", "generator matrix of the code generated by a tuple");
    detail::ring_flags(code, s);
    code->add_option("--generator", s.generator, "coefficient blocks joined by '|'")->required();
    code->add_option("--view", s.view, "coordinate order")->check(CLI::IsMember({"concatenated", "group"}));
    code->add_option("--out", s.output, "write here instead of stdout");

    auto* vp = app.add_subcommand("verify-paper", "run the fixed verification battery");
    vp->add_flag("--long", s.long_run, "include the [36,14,15] distance certification");
    vp->add_option("--tamper", s.tamper, "negative control: alter one generator coefficient");
    detail::thread_flag(vp, s);

    app.final_callback([&app, &s] {
        for (auto* sub : app.get_subcommands()) s.command = sub->get_name();
    });
}

/// Parses args (without the program name) into a JobSpec; throws CLI::ParseError.
inline JobSpec parse_args(std::vector<std::string> args) {
    CLI::App app;
    JobSpec s;
    build_app(app, s);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    return s;
}

}  // namespace qacodes

#endif  // QACODES_JOBSPEC_HPP
