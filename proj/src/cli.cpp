#include "lq/cli.hpp"

#include "lq/abstract.hpp"
#include "lq/concrete.hpp"
#include "lq/io.hpp"
#include "lq/proof.hpp"
#include "lq/syntax.hpp"
#include "lq/typecheck.hpp"

#include "CLI11.hpp"

#include <bit>
#include <optional>

namespace lq {

namespace {

struct RunConfig {
    double purity_tol = 1e-9;
    double eps_norm = 1e-9;
    double eps_prob = 1e-12;
    std::optional<std::uint64_t> seed;
    std::size_t max_steps = 10000;
    int qubits = 0;

    std::string input;
    std::string second;
    bool exhaustive = false;
    bool no_merge = false;
    bool assertion_file = false;
    bool soundness = false;
    std::string state_file;
    std::string aqs_file;

    Tolerances tol() const { return {eps_norm, eps_prob, purity_tol}; }
};

constexpr int kFalse = 1;
constexpr int kUsage = 2;

Program load_program(const RunConfig &c) {
    auto p = parse_program(read_file(c.input));
    if (c.qubits && c.qubits != p.qubits)
        throw Error("--qubits " + std::to_string(c.qubits) + " does not match the header 'qubits " +
                    std::to_string(p.qubits) + ";'");
    return p;
}

QuantumState load_state(const std::string &path, int want, const Tolerances &tol) {
    auto amps = parse_amplitudes(read_file(path));
    if (amps.empty() || !std::has_single_bit(amps.size()))
        throw Error("amplitude count " + std::to_string(amps.size()) + " is not a power of two");
    int n = std::countr_zero(amps.size());
    if (want && n != want)
        throw Error("amplitude file has " + std::to_string(n) + " qubits, expected " +
                    std::to_string(want));
    return QuantumState::from_amplitudes(std::move(amps), tol);
}

int cmd_typecheck(const RunConfig &c, std::ostream &out, std::ostream &err) {
    auto p = load_program(c);
    try {
        out << to_string(typecheck({}, p.term, p.qubits)) << "\n";
    } catch (const TypeError &e) {
        err << "type error: " << e.what() << "\n";
        return kFalse;
    }
    return 0;
}

int cmd_run(const RunConfig &c, std::ostream &out) {
    auto p = load_program(c);
    typecheck({}, p.term, p.qubits);
    QuantumState s = c.state_file.empty() ? QuantumState::init(p.qubits)
                                          : load_state(c.state_file, p.qubits, c.tol());
    RunOptions opts;
    opts.max_steps = c.max_steps;
    opts.merge_leaves = !c.no_merge;
    opts.tol = c.tol();
    if (c.seed && !c.exhaustive) {
        auto t = run_sampled({s, p.term}, *c.seed, opts);
        out << "seed=" << *c.seed << " term=" << to_string(t.term) << " state=" << format_state(t.state)
            << "\n";
        return 0;
    }
    for (const auto &leaf : run_exhaustive({s, p.term}, opts)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", leaf.probability);
        out << "p=" << buf << " term=" << to_string(leaf.terminal.term)
            << " state=" << format_state(leaf.terminal.state) << "\n";
    }
    return 0;
}

int cmd_abstract(const RunConfig &c, std::ostream &out) {
    auto p = load_program(c);
    typecheck({}, p.term, p.qubits);
    AQS a = c.aqs_file.empty() ? AQS::all_pure(p.qubits) : parse_aqs(read_file(c.aqs_file));
    for (const auto &b : a.blocks)
        for (int q : b)
            if (q > p.qubits)
                throw Error("initial AQS mentions q" + std::to_string(q) + " outside the register");
    for (int q : a.pure)
        if (q > p.qubits)
            throw Error("initial AQS mentions q" + std::to_string(q) + " outside the register");
    AbstractOptions opts;
    opts.max_steps = c.max_steps;
    auto results = abstract_semantics(a, p.term, opts);
    for (size_t k = 0; k < results.size(); ++k)
        out << "# result " << k << ": value=" << to_string(results[k].value) << "\n"
            << to_text(results[k].aqs);
    return 0;
}

int cmd_sat(const RunConfig &c, std::ostream &out) {
    auto m = parse_model(read_file(c.input));
    if (c.qubits)
        m.qubits = c.qubits;
    auto text = c.assertion_file ? read_file(c.second) : c.second;
    auto a = parse_assertion(text);
    typecheck_assertion(m.types, a);
    bool v = satisfies(m, a);
    out << (v ? "true" : "false") << "\n";
    return v ? 0 : kFalse;
}

int cmd_prove(const RunConfig &c, std::ostream &out) {
    auto roots = parse_proofs(read_file(c.input));
    auto v = check_proofs(roots);
    if (!v.accepted) {
        out << "rejected at " << v.path << ": " << v.reason << "\n";
        return kFalse;
    }
    if (c.soundness) {
        for (size_t k = 0; k < roots.size(); ++k) {
            auto r = check_soundness(roots[k]);
            if (!r.sound) {
                out << "unsound conclusion [" << k << "]: " << r.failure << "\n";
                return kFalse;
            }
        }
    }
    out << "accepted (" << roots.size() << (roots.size() == 1 ? " derivation)" : " derivations)") << "\n";
    return 0;
}

int cmd_oracle(const RunConfig &c, std::ostream &out) {
    auto s = load_state(c.input, c.qubits, c.tol());
    out << format_oracle(oracle_report(s, c.purity_tol));
    return 0;
}

} // namespace

int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig c;
    CLI::App app{"qsep: separability analysis for a linear quantum lambda-calculus", "qsep"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", c.purity_tol, "purity / base-state tolerance")->check(CLI::PositiveNumber);
    app.add_option("--eps-norm", c.eps_norm, "allowed squared-norm drift")->check(CLI::PositiveNumber);
    app.add_option("--eps-prob", c.eps_prob, "branches below this probability are dropped")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", c.seed, "seed for a single sampled trajectory");
    app.add_option("--max-steps", c.max_steps, "reduction step budget")->check(CLI::PositiveNumber);
    app.add_option("--qubits", c.qubits, "register size (overrides or checks file headers)")
        ->check(CLI::Range(1, kMaxSimQubits));

    auto *tc = app.add_subcommand("typecheck", "print the type of a program");
    tc->add_option("program", c.input)->required();

    auto *run = app.add_subcommand("run", "run a program on |0...0> or a given state");
    run->add_option("program", c.input)->required();
    run->add_flag("--exhaustive", c.exhaustive, "print every leaf of the probability tree");
    run->add_flag("--no-merge", c.no_merge, "keep equal leaves apart");
    run->add_option("--state", c.state_file, "initial amplitude file");

    auto *abs = app.add_subcommand("abstract", "abstract semantics from an initial AQS");
    abs->add_option("program", c.input)->required();
    abs->add_option("--aqs", c.aqs_file, "initial AQS file (default: every qubit pure)");

    auto *sat = app.add_subcommand("sat", "decide a model satisfies an assertion");
    sat->add_option("model", c.input)->required();
    sat->add_option("assertion", c.second, "assertion text")->required();
    sat->add_flag("-f,--file", c.assertion_file, "read the assertion from a file");

    auto *prove = app.add_subcommand("prove", "check a proof script");
    prove->add_option("script", c.input)->required();
    prove->add_flag("--soundness", c.soundness, "also check each conclusion semantically");

    auto *oracle = app.add_subcommand("oracle", "entanglement partition of an amplitude file");
    oracle->add_option("amplitudes", c.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n" << "run 'qsep --help' for usage\n";
        return kUsage;
    }

    try {
        if (tc->parsed())
            return cmd_typecheck(c, out, err);
        if (run->parsed())
            return cmd_run(c, out);
        if (abs->parsed())
            return cmd_abstract(c, out);
        if (sat->parsed())
            return cmd_sat(c, out);
        if (prove->parsed())
            return cmd_prove(c, out);
        return cmd_oracle(c, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace lq
