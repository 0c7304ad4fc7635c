#pragma once

/**
 * @file cli.hpp
 * @brief The ribbon-schur command line: argument parsing, the subcommands,
 * the verification worker pool and counterexample minimization.
 *
 * Kept in a header so the test suite can drive `run` in process.
 */

#include "grothendieck.hpp"
#include "hamel_goulden.hpp"
#include "lgv_oracle.hpp"
#include "tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace ribbon_schur::cli {

enum Exit { OK = 0, FAIL = 1, USAGE = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string shape;
    std::string inner;
    std::optional<int> root_content;
    std::string flags;
    std::string kind = "column";
    std::string pipe;
    int pipes = 20;
    std::optional<int> m;
    bool alpha0 = false;
    bool beta1 = false;
    bool super = false;
    std::uint64_t seed = 1;
    std::string format = "text";
};

/// Worker count: hardware concurrency, capped by RIBBON_SCHUR_THREADS when set.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("RIBBON_SCHUR_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) n = std::min(n, cap);
        } catch (const std::exception&) {
        }
    }
    return n;
}

/// Runs job(0..count-1) on up to `workers` threads. Results are stored by index by the caller.
inline void parallel_for(int count, int workers, const std::function<void(int)>& job) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(error_lock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Per-case generator, independent of scheduling order.
inline std::mt19937_64 case_rng(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

inline FlagKind parse_kind(const std::string& k) {
    if (k == "column") return FlagKind::COLUMN;
    if (k == "row") return FlagKind::ROW;
    if (k == "strict") return FlagKind::STRICT;
    throw UsageError("unknown flag kind '" + k + "'");
}

inline RShape read_shape(const Options& o) {
    if (o.shape.empty()) throw UsageError("--shape is required");
    std::string text = o.shape;
    if (!o.inner.empty()) {
        if (text.find('/') != std::string::npos) throw UsageError("inner shape given twice");
        auto at = text.find('@');
        text.insert(at == std::string::npos ? text.size() : at, "/" + o.inner);
    }
    if (o.root_content) {
        if (text.find('@') != std::string::npos) throw UsageError("root content given twice");
        text += "@r=" + std::to_string(*o.root_content);
    }
    try {
        return parse_shape(text);
    } catch (const std::exception& e) {
        throw UsageError("malformed shape '" + text + "': " + e.what());
    }
}

/**
 * Valid flags drawn from rng: weakly moving lower flags with windows at
 * most one wider than the column (or one more than the row start).
 */
inline FlagPair sample_flags(const RShape& s, FlagKind kind, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> start(-1, 1), slack(0, 1), step(0, 1);
    if (kind == FlagKind::ROW) {
        FlagPair f{kind, {}, {}};
        int a = start(rng), b = a;
        for (int i = 1; i <= s.rows(); ++i) {
            if (i > 1) a += step(rng);
            b = std::max(b, a + slack(rng));
            f.lower.push_back(a);
            f.upper.push_back(b);
        }
        return f;
    }
    for (;;) {
        FlagPair f{kind, {}, {}};
        int a = start(rng);
        for (int j = 1; j <= s.cols(); ++j) {
            if (j > 1) a -= step(rng);
            const int h = std::max(s.lambda_conj(j) - s.mu_conj(j), 1);
            f.lower.push_back(a);
            f.upper.push_back(a + h - 1 + slack(rng));
        }
        if (validate(s, f)) return f;
    }
}

inline FlagPair read_flags(const Options& o, const RShape& s, std::optional<std::uint64_t> sample_seed = {}) {
    const FlagKind kind = parse_kind(o.kind);
    FlagPair f;
    if (o.flags.empty()) {
        if (!sample_seed) throw UsageError("--flags is required");
        std::mt19937_64 rng(*sample_seed);
        return sample_flags(s, kind, rng);
    }
    try {
        f = parse_flags(o.flags, kind);
        if (!validate(s, f)) throw UsageError("flags " + o.flags + " violate the " + o.kind + " flag conditions");
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("malformed flags '" + o.flags + "': " + e.what());
    }
    return f;
}

inline PipeVector read_pipe(const std::string& text) {
    try {
        return parse_pipe(text);
    } catch (const std::exception& e) {
        throw UsageError("malformed pipe '" + text + "': " + e.what());
    }
}

/// Shapes with one cell fewer: an outer corner removed or an inner corner added.
inline std::vector<RShape> one_cell_smaller(const RShape& s) {
    std::vector<RShape> out;
    const std::vector<int> lam = s.outer().parts(), mu = s.inner().parts();
    auto mu_at = [&](std::size_t i) { return i < mu.size() ? mu[i] : 0; };
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const bool corner = i + 1 == lam.size() || lam[i + 1] < lam[i];
        if (corner && lam[i] > mu_at(i)) {
            std::vector<int> l = lam;
            --l[i];
            out.emplace_back(Partition(l), s.inner(), s.root_content());
        }
    }
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const bool addable = i == 0 || mu_at(i - 1) > mu_at(i);
        if (addable && mu_at(i) < lam[i]) {
            std::vector<int> m(std::max(mu.size(), i + 1), 0);
            std::copy(mu.begin(), mu.end(), m.begin());
            ++m[i];
            out.emplace_back(s.outer(), Partition(m), s.root_content());
        }
    }
    return out;
}

struct Case {
    RShape shape;
    FlagPair flags;
};

/**
 * Shrinks a failing case: first remove cells while it still fails, then
 * narrow flag windows one step at a time, until neither helps.
 */
inline Case minimize(Case c, const std::function<bool(const Case&)>& fails) {
    auto still_fails = [&](const Case& t) {
        try {
            return validate(t.shape, t.flags) && fails(t);
        } catch (const std::exception&) {
            return false;
        }
    };
    for (bool progress = true; progress;) {
        progress = false;
        for (const RShape& t : one_cell_smaller(c.shape)) {
            Case smaller{t, c.flags};
            const int n = t.empty() ? 0 : (c.flags.kind == FlagKind::ROW ? t.rows() : t.cols());
            smaller.flags.lower.resize(n);
            smaller.flags.upper.resize(n);
            if (still_fails(smaller)) {
                c = smaller;
                progress = true;
                break;
            }
        }
        if (progress) continue;
        for (std::size_t i = 0; i < c.flags.lower.size() && !progress; ++i) {
            for (int side = 0; side < 2 && !progress; ++side) {
                if (c.flags.lower[i] >= c.flags.upper[i]) continue;
                Case narrower = c;
                (side ? narrower.flags.upper[i] : narrower.flags.lower[i]) += side ? -1 : 1;
                if (still_fails(narrower)) {
                    c = narrower;
                    progress = true;
                }
            }
        }
    }
    return c;
}

inline Polynomial tableau_oracle(const Case& c) {
    return super_weight_sum(c.shape, c.flags, c.flags.kind == FlagKind::ROW ? Orientation::ROW : Orientation::COLUMN);
}

using Json = nlohmann::ordered_json;

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int compute_schur(const Options& o) {
        RShape s = read_shape(o);
        FlagPair f = read_flags(o, s);
        return emit_polynomial(o, "compute schur", s, &f, flagged_schur(s, f));
    }

    int compute_g(const Options& o) {
        RShape s = read_shape(o);
        if (!o.m) throw UsageError("--m is required");
        if (*o.m < 0) throw UsageError("--m must be nonnegative");
        if (!s.is_usual()) throw UsageError("g is defined for usual skew shapes only");
        Polynomial g = g_direct(s, *o.m);
        g = substitute(g, [&](Variable v) -> Polynomial {
            if (o.alpha0 && v.alphabet == Alphabet::ALPHA) return 0;
            if (o.beta1 && v.alphabet == Alphabet::BETA) return 1;
            return Polynomial(v);
        });
        return emit_polynomial(o, "compute g", s, nullptr, g);
    }

    int verify_hg(const Options& o) {
        RShape s = read_shape(o);
        FlagPair f = read_flags(o, s, o.seed);
        if (o.pipes < 1) throw UsageError("--pipes must be positive");
        if (!o.pipe.empty() && block_decomposition(s).size() != 1)
            throw UsageError("--pipe needs a connected, normalized shape");
        const PipeVector fixed = o.pipe.empty() ? PipeVector{} : read_pipe(o.pipe);
        const int count = o.pipe.empty() ? o.pipes : 1;

        auto run_case = [&](const Case& c, int index, std::string* pipes_used) {
            std::mt19937_64 rng = case_rng(o.seed, index);
            std::string used;
            auto pick = [&](const RShape& b) {
                PipeVector pi = fixed.empty() ? random_pipe(b, rng) : fixed;
                used += (used.empty() ? "" : " | ") + format_pipe(pi);
                return pi;
            };
            EntryCache cache;
            Polynomial lhs = hg_determinant(c.shape, c.flags, pick, &cache);
            if (pipes_used) *pipes_used = used;
            return lhs == tableau_oracle(c);
        };

        const Case whole{s, f};
        std::vector<std::string> pipes(count);
        std::vector<char> pass(count);
        parallel_for(count, worker_count(), [&](int i) { pass[i] = run_case(whole, i, &pipes[i]); });

        std::vector<CaseResult> results;
        for (int i = 0; i < count; ++i) results.push_back({pipes[i], pass[i] != 0});
        return emit_verification(o, "verify hg", whole, results, [&](const Case& c) {
            for (int i = 0; i < count; ++i)
                if (!run_case(c, i, nullptr)) return true;
            return false;
        });
    }

    int verify_jt(const Options& o) {
        RShape s = read_shape(o);
        FlagPair f = read_flags(o, s, o.seed);
        if (f.kind == FlagKind::STRICT) throw UsageError("jacobi-trudi takes column or row flags");
        auto fails = [](const Case& c) {
            Polynomial det = c.flags.kind == FlagKind::ROW ? dual_jacobi_trudi(c.shape, c.flags)
                                                           : jacobi_trudi(c.shape, c.flags);
            return det != tableau_oracle(c);
        };
        const Case whole{s, f};
        return emit_verification(o, "verify jt", whole, {{"", !fails(whole)}}, fails);
    }

    int verify_giambelli(const Options& o) {
        RShape s = read_shape(o);
        FlagPair f = read_flags(o, s, o.seed);
        if (f.kind != FlagKind::COLUMN) throw UsageError("giambelli takes column flags");
        if (std::string why = giambelli_obstruction(s); !why.empty()) throw UsageError(why);
        auto fails = [](const Case& c) {
            if (!giambelli_obstruction(c.shape).empty()) return false;
            return giambelli(c.shape, c.flags) != tableau_oracle(c);
        };
        const Case whole{s, f};
        return emit_verification(o, "verify giambelli", whole, {{"", !fails(whole)}}, fails);
    }

    int enumerate_tableaux(const Options& o) {
        RShape s = read_shape(o);
        FlagPair f = read_flags(o, s);
        std::vector<ZSSYT> all = enumerate_zssyt(s, f);
        if (o.format == "json") {
            Json j;
            j["command"] = "enumerate tableaux";
            j["shape"] = s.to_string();
            j["flags"] = format_flags(f);
            j["count"] = all.size();
            j["tableaux"] = Json::array();
            for (const ZSSYT& t : all) j["tableaux"].push_back(t.rows);
            out_ << j.dump() << "\n";
        } else {
            for (const ZSSYT& t : all) out_ << t.to_string() << "\n";
        }
        return OK;
    }

    int decompose(const Options& o) {
        RShape s = read_shape(o);
        if (s.empty()) throw UsageError("cannot decompose the empty shape");
        const std::vector<Block> blocks = block_decomposition(s);
        if (!o.pipe.empty() && blocks.size() != 1) throw UsageError("--pipe needs a connected, normalized shape");
        std::mt19937_64 rng(o.seed);
        Json j;
        j["command"] = "decompose";
        j["shape"] = s.to_string();
        if (o.pipe.empty()) j["seed"] = o.seed;
        j["blocks"] = Json::array();
        for (const Block& b : blocks) {
            PipeVector pi = o.pipe.empty() ? random_pipe(b.shape, rng) : read_pipe(o.pipe);
            OuterDecomposition d = [&] {
                try {
                    return pipe_to_decomposition(b.shape, pi);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            Json jb;
            jb["shape"] = b.shape.to_string();
            jb["offset"] = {b.row_offset, b.col_offset};
            jb["pipe"] = format_pipe(pi);
            jb["ribbons"] = Json::array();
            for (const Ribbon& r : d.ribbons()) jb["ribbons"].push_back(format_ribbon(r));
            j["blocks"].push_back(jb);
        }
        if (o.format == "json") {
            out_ << j.dump() << "\n";
            return OK;
        }
        out_ << "shape " << s.to_string() << "\n";
        if (j.contains("seed")) out_ << "seed " << o.seed << "\n";
        for (const auto& jb : j["blocks"]) {
            if (blocks.size() > 1)
                out_ << "block " << jb["shape"].get<std::string>() << " offset " << jb["offset"][0] << ","
                     << jb["offset"][1] << "\n";
            out_ << "pipe " << jb["pipe"].get<std::string>() << "\n";
            for (const auto& r : jb["ribbons"]) out_ << r.get<std::string>() << "\n";
        }
        return OK;
    }

    int lattice(const Options& o) {
        RShape s = read_shape(o);
        if (!s.empty() && (!s.is_connected() || !s.is_normalized()))
            throw UsageError("lattice needs a connected, normalized shape");
        if (o.pipe.empty() && !s.empty()) throw UsageError("--pipe is required");
        if (parse_kind(o.kind) == FlagKind::ROW) throw UsageError("lattice takes column flags");
        FlagPair f = read_flags(o, s);
        Lattice l = [&] {
            try {
                return build_lattice(s, s.empty() ? PipeVector{} : read_pipe(o.pipe), f, o.super);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        if (o.format == "json") {
            Json j;
            j["command"] = "lattice";
            j["shape"] = s.to_string();
            j["dump"] = format_lattice(l);
            out_ << j.dump() << "\n";
        } else {
            out_ << format_lattice(l);
        }
        return OK;
    }

private:
    struct CaseResult {
        std::string pipe;
        bool pass = false;
    };

    std::ostream& out_;
    std::ostream& err_;

    int emit_polynomial(const Options& o, const char* command, const RShape& s, const FlagPair* f,
                        const Polynomial& p) {
        if (o.format == "json") {
            Json j;
            j["command"] = command;
            j["shape"] = s.to_string();
            if (f) j["flags"] = format_flags(*f);
            if (o.m) j["m"] = *o.m;
            j["result"] = format_canonical(p);
            out_ << j.dump() << "\n";
        } else {
            out_ << format_canonical(p) << "\n";
        }
        return OK;
    }

    int emit_verification(const Options& o, const char* command, const Case& whole,
                          const std::vector<CaseResult>& results, const std::function<bool(const Case&)>& fails) {
        bool all = true;
        for (const auto& r : results) all = all && r.pass;
        const int passed = static_cast<int>(std::count_if(results.begin(), results.end(), [](auto& r) { return r.pass; }));
        if (o.format == "json") {
            Json j;
            j["command"] = command;
            j["seed"] = o.seed;
            j["shape"] = whole.shape.to_string();
            j["flags"] = format_flags(whole.flags);
            j["kind"] = o.kind;
            j["cases"] = Json::array();
            for (std::size_t i = 0; i < results.size(); ++i) {
                Json c;
                c["index"] = i + 1;
                if (!results[i].pipe.empty()) c["pipe"] = results[i].pipe;
                c["result"] = results[i].pass ? "PASS" : "FAIL";
                j["cases"].push_back(c);
            }
            j["result"] = all ? "PASS" : "FAIL";
            out_ << j.dump() << "\n";
        } else {
            out_ << command << " " << whole.shape.to_string() << " " << o.kind << " " << format_flags(whole.flags)
                 << "\nseed " << o.seed << "\n";
            for (std::size_t i = 0; i < results.size(); ++i) {
                out_ << "case " << i + 1;
                if (!results[i].pipe.empty()) out_ << " pipe " << results[i].pipe;
                out_ << " " << (results[i].pass ? "PASS" : "FAIL") << "\n";
            }
            out_ << (all ? "PASS" : "FAIL") << " " << passed << "/" << results.size() << "\n";
        }
        if (all) return OK;
        Case small = minimize(whole, fails);
        err_ << "counterexample: shape " << small.shape.to_string() << " flags " << format_flags(small.flags) << "\n";
        return FAIL;
    }
};

/// Full command line, argv[0] included. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flagged supersymmetric Schur functions, ribbon determinants and lattice oracles", "ribbon-schur"};
    app.require_subcommand(1);
    Options o;

    auto add_options = [&](CLI::App* c) {
        c->add_option("--shape", o.shape, "r-shape, e.g. \"4,4,4,2/2,1@r=-3\"");
        c->add_option("--inner", o.inner, "inner partition, e.g. \"2,1\"");
        c->add_option("--root-content", o.root_content, "content of the bottom-left corner cell");
        c->add_option("--flags", o.flags, "flags, e.g. \"a=1,0,-1,-2;b=6,6,5,5\"");
        c->add_option("--kind", o.kind, "flag kind")->check(CLI::IsMember({"column", "row", "strict"}));
        c->add_option("--pipe", o.pipe, "pipe vector, e.g. \"(0,0),(0,1),(1,1)\"");
        c->add_option("--pipes", o.pipes, "number of random pipe vectors");
        c->add_option("--m", o.m, "number of x variables");
        c->add_flag("--alpha0", o.alpha0, "set alpha = 0");
        c->add_flag("--beta1", o.beta1, "set beta = 1");
        c->add_flag("--super", o.super, "weighted super lattice");
        c->add_option("--seed", o.seed, "seed for sampled pipes and flags");
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    struct Leaf {
        CLI::App* app;
        int (Runner::*method)(const Options&);
    };
    std::vector<Leaf> leaves;
    auto add_leaf = [&](CLI::App* parent, const std::string& name, const std::string& about,
                        int (Runner::*method)(const Options&)) {
        CLI::App* c = parent->add_subcommand(name, about);
        add_options(c);
        leaves.push_back({c, method});
    };
    CLI::App* compute = app.add_subcommand("compute", "compute a polynomial");
    compute->require_subcommand(1);
    add_leaf(compute, "schur", "flagged supersymmetric Schur function", &Runner::compute_schur);
    add_leaf(compute, "g", "dual refined canonical stable Grothendieck polynomial", &Runner::compute_g);
    CLI::App* verify = app.add_subcommand("verify", "check a determinantal formula against tableaux");
    verify->require_subcommand(1);
    add_leaf(verify, "hg", "ribbon decomposition determinants", &Runner::verify_hg);
    add_leaf(verify, "jt", "Jacobi-Trudi (column flags) or dual Jacobi-Trudi (row flags)", &Runner::verify_jt);
    add_leaf(verify, "giambelli", "Giambelli determinant", &Runner::verify_giambelli);
    CLI::App* enumerate = app.add_subcommand("enumerate", "list combinatorial objects");
    enumerate->require_subcommand(1);
    add_leaf(enumerate, "tableaux", "flagged tableaux, one per line", &Runner::enumerate_tableaux);
    add_leaf(&app, "decompose", "outer ribbon decomposition of a pipe vector", &Runner::decompose);
    add_leaf(&app, "lattice", "flagged lattice dump", &Runner::lattice);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return OK;
        }
        err << "error: " << e.what() << "\n";
        return USAGE;
    }

    Runner runner(out, err);
    try {
        for (const Leaf& l : leaves)
            if (l.app->parsed()) return (runner.*l.method)(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const FlagWidthError& e) {
        err << "error: " << e.what() << "\n";
        return USAGE;
    }
    err << "error: no command\n";
    return USAGE;
}

}  // namespace ribbon_schur::cli
