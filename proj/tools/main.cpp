#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgs/generators.hpp"
#include "mgs/io.hpp"
#include "mgs/search.hpp"
#include "mgs/sequences.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mgs::DocumentError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mgs::DocumentError("cannot write file '" + path + "'");
    out << content;
}

/// Quiver source shared by the subcommands: either an explicit document or
/// one of the generated families.
struct QuiverSource {
    std::string quiver_path;
    std::string family;
    int m = 0;
    int k = -1;
    int n = 0;
    int p = 0;

    CLI::Option* opt_quiver = nullptr;
    CLI::Option* opt_family = nullptr;
    CLI::Option* opt_m = nullptr;
    CLI::Option* opt_k = nullptr;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_p = nullptr;

    void add_family_flags(CLI::App& cmd) {
        opt_family = cmd.add_option("--family", family, "Generated family: cycle, ladder or torus")
                         ->check(CLI::IsMember({"cycle", "ladder", "torus"}));
        opt_m = cmd.add_option("--m", m, "Cycle length (family cycle, >= 3)");
        opt_k = cmd.add_option("--k", k, "Ladder row count (family ladder, >= 0)");
        opt_n = cmd.add_option("--n", n, "Genus (family torus, >= 2)");
        opt_p = cmd.add_option("--p", p, "Puncture count (family torus, >= 4)");
    }

    void add_file_flag(CLI::App& cmd) {
        opt_quiver = cmd.add_option("--quiver", quiver_path, "Quiver document (JSON)");
    }

    bool from_file() const { return opt_quiver && opt_quiver->count() > 0; }

    mgs::FamilySpec spec() const {
        if (!opt_family || opt_family->count() == 0) {
            throw mgs::BadParameterError("a family spec requires --family");
        }
        mgs::FamilySpec out;
        if (family == "cycle") {
            if (opt_m->count() == 0) throw mgs::BadParameterError("family cycle requires --m");
            out.family = mgs::FamilySpec::Family::Cycle;
            out.m = m;
        } else if (family == "ladder") {
            if (opt_k->count() == 0) throw mgs::BadParameterError("family ladder requires --k");
            out.family = mgs::FamilySpec::Family::Ladder;
            out.k = k;
        } else {
            if (opt_n->count() == 0 || opt_p->count() == 0) {
                throw mgs::BadParameterError("family torus requires --n and --p");
            }
            out.family = mgs::FamilySpec::Family::Torus;
            out.n = n;
            out.p = p;
        }
        return out;
    }

    mgs::IceQuiver load() const {
        if (from_file()) {
            if (opt_family && opt_family->count() > 0) {
                throw mgs::BadParameterError("--quiver and --family are mutually exclusive");
            }
            return mgs::quiver_from_json(slurp(quiver_path));
        }
        return spec().build();
    }
};

int run_generate(const QuiverSource& source, bool framed, const std::string& format) {
    mgs::IceQuiver q = source.spec().build();
    if (framed) q = q.framed();
    if (format == "json") {
        std::cout << mgs::quiver_to_json(q);
    } else {
        std::cout << mgs::quiver_to_dot(q);
    }
    return kExitAccepted;
}

int run_verify(const QuiverSource& source, bool use_reference, const std::string& sequence_path,
               const std::string& trace_path, bool framed_flag) {
    mgs::IceQuiver q = source.load();
    if (framed_flag || !q.has_frozen()) {
        q = q.framed(); // throws AlreadyIced when --framed hits an ice quiver
    }

    mgs::MutationSequence seq;
    if (use_reference) {
        if (source.from_file()) {
            throw mgs::BadParameterError("--paper-sequence requires a family spec");
        }
        seq = mgs::reference_sequence(source.spec());
    } else {
        seq = mgs::sequence_from_text(slurp(sequence_path));
    }

    mgs::Trace trace;
    const mgs::VerificationReport report = mgs::verify_with_trace(q, seq, trace);
    if (!trace_path.empty()) write_file(trace_path, mgs::trace_to_json(trace));
    std::cout << mgs::report_to_json(report);
    return report.accepted ? kExitAccepted : kExitRejected;
}

int run_search(const QuiverSource& source, const mgs::SearchConfig& cfg) {
    mgs::IceQuiver q = source.load();
    const mgs::SearchResult result = mgs::enumerate_mgs(q, cfg);

    std::cout << "found " << result.found.size() << "\n";
    for (const mgs::MutationSequence& seq : result.found) {
        for (std::size_t i = 0; i < seq.steps.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << seq.steps[i];
        }
        std::cout << "\n";
    }
    std::cout << "exhausted " << (result.exhausted ? "true" : "false") << "\n";
    std::cout << "resource_limited " << (result.resource_limited ? "true" : "false") << "\n";
    std::cout << "states_visited " << result.states_visited << "\n";
    std::cout << "wall_time_ms "
              << std::chrono::duration<double, std::milli>(result.wall_time).count() << "\n";

    if (result.resource_limited || result.found.empty()) return kExitRejected;
    return kExitAccepted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ice-quiver mutation engine: generate quiver families, verify green "
                 "sequences for maximality, and search for maximal green sequences."};
    app.require_subcommand(1);

    // generate
    CLI::App* generate = app.add_subcommand("generate", "Emit a family quiver as JSON or DOT");
    QuiverSource gen_source;
    gen_source.add_family_flags(*generate);
    bool gen_framed = false;
    std::string gen_format = "json";
    generate->add_flag("--framed", gen_framed, "Frame the quiver before emitting");
    generate->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->required();

    // verify
    CLI::App* verify = app.add_subcommand(
        "verify", "Check a mutation sequence for greenness and maximality");
    QuiverSource ver_source;
    ver_source.add_file_flag(*verify);
    ver_source.add_family_flags(*verify);
    std::string ver_sequence;
    std::string ver_trace;
    bool ver_reference = false;
    bool ver_framed = false;
    CLI::Option* opt_seq = verify->add_option("--sequence", ver_sequence,
                                              "Sequence document (labels, '#' comments)");
    CLI::Option* opt_ref = verify->add_flag(
        "--paper-sequence", ver_reference,
        "Use the family's built-in sequence (gamma, alpha chain, or the full torus sequence)");
    opt_seq->excludes(opt_ref);
    verify->add_option("--trace", ver_trace, "Write the full application trace (JSON) here");
    verify->add_flag("--framed", ver_framed,
                     "Frame the input (plain quivers are framed automatically)");

    // search
    CLI::App* search = app.add_subcommand(
        "search", "Enumerate maximal green sequences up to a depth bound");
    QuiverSource sea_source;
    sea_source.add_file_flag(*search);
    sea_source.add_family_flags(*search);
    std::size_t sea_max_len = 0;
    unsigned sea_workers = 1;
    std::size_t sea_max_states = mgs::SearchConfig{}.max_states;
    bool sea_all = false;
    bool sea_first = false;
    search->add_option("--max-len", sea_max_len, "Depth bound (>= 1)")->required();
    CLI::Option* opt_all = search->add_flag("--all", sea_all, "Enumerate every sequence (default)");
    CLI::Option* opt_first = search->add_flag("--first", sea_first, "Stop at the shortest sequence");
    opt_all->excludes(opt_first);
    search->add_option("--workers", sea_workers, "Worker threads for the frontier expansion");
    search->add_option("--max-states", sea_max_states, "State ceiling before giving up");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            return run_generate(gen_source, gen_framed, gen_format);
        }
        if (verify->parsed()) {
            if (!ver_reference && opt_seq->count() == 0) {
                throw mgs::BadParameterError("verify needs --sequence or --paper-sequence");
            }
            return run_verify(ver_source, ver_reference, ver_sequence, ver_trace, ver_framed);
        }
        if (search->parsed()) {
            mgs::SearchConfig cfg;
            cfg.max_len = sea_max_len;
            cfg.mode = sea_first ? mgs::SearchMode::First : mgs::SearchMode::All;
            cfg.worker_count = sea_workers;
            cfg.max_states = sea_max_states;
            return run_search(sea_source, cfg);
        }
    } catch (const mgs::QuiverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
