#include "bandgrowth/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "bandgrowth/config.hpp"
#include "bandgrowth/lemma.hpp"

namespace bandgrowth {

namespace {

namespace fs = std::filesystem;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    int n_max_override = 0;
    std::uint64_t seed_override = 0;
    bool seed_overridden = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_out = true) {
    cmd->add_option("--config", opts.config_path, "scenario config file")->required();
    if (with_out) cmd->add_option("--out", opts.out_dir, "output directory (default: .)");
    cmd->add_option("--nmax", opts.n_max_override, "override [run] n_max")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--seed", opts.seed_override, "override [run] seed")
        ->each([&opts](const std::string&) { opts.seed_overridden = true; });
    cmd->add_option("--threads", opts.threads, "worker threads for independent checks")
        ->default_val(1)
        ->check(CLI::Range(1, 256));
}

ScenarioConfig load(const CommonOpts& opts) {
    ScenarioConfig cfg = load_config(opts.config_path);
    if (opts.n_max_override > 0) cfg.n_max = opts.n_max_override;
    if (opts.seed_overridden) {
        cfg.seed = opts.seed_override;
        cfg.oracle.seed = opts.seed_override;
    }
    return cfg;
}

void header(std::ostream& out, const std::string& command, const CommonOpts& opts,
            const ScenarioConfig& cfg) {
    out << "bandgrowth " << command << "\n";
    out << "config: " << opts.config_path << "\n";
    out << "field: " << cfg.field.describe() << "\n";
    out << "algebra: " << cfg.algebra->describe() << "\n";
}

fs::path out_file(const CommonOpts& opts, const std::string& name, std::ostream& out) {
    const fs::path dir = opts.out_dir.empty() ? fs::path(".") : fs::path(opts.out_dir);
    fs::create_directories(dir);
    const fs::path p = dir / name;
    out << "wrote " << (opts.out_dir.empty() ? name : opts.out_dir + "/" + name) << "\n";
    return p;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
}

std::string csv_string(const GrowthTable& t) {
    std::ostringstream os;
    write_growth_csv(os, t);
    return os.str();
}

int require_n_max(const ScenarioConfig& cfg) {
    if (!cfg.has_n_max()) throw ConfigError(0, "n_max is required (set [run] n_max or pass --nmax)");
    return cfg.n_max;
}

// ---------------------------------------------------------------------------

int cmd_growth(const CommonOpts& opts, const std::string& kind, std::ostream& out) {
    const ScenarioConfig cfg = load(opts);
    const int n_max = require_n_max(cfg);
    if (cfg.elements.empty())
        throw ConfigError(0, "[elements] must list at least one generator a1");
    const BaseAlgebra& alg = *cfg.algebra;

    header(out, "growth", opts, cfg);
    out << "kind: " << kind << "\n";
    out << "n_max: " << n_max << "\n";

    std::vector<WeightedGen<AlgebraElement>> gens;
    for (const auto& e : cfg.elements) gens.push_back({e, 1});

    GrowthTable table;
    if (kind == "assoc") {
        table = compute_growth<AlgebraElement>(
                    GrowthTable::Kind::Assoc, gens,
                    [&alg](const AlgebraElement& x, const AlgebraElement& y) { return alg.mul(x, y); },
                    n_max)
                    .table;
    } else {
        // bracket ambient: the structure-constant table itself, or the
        // commutator of an associative ambient
        if (alg.kind() == BaseAlgebra::Kind::StructureConstants) {
            validate_lie_structure(alg);
            table = compute_growth<AlgebraElement>(
                        GrowthTable::Kind::Lie, gens,
                        [&alg](const AlgebraElement& x, const AlgebraElement& y) {
                            return alg.mul(x, y);
                        },
                        n_max)
                        .table;
        } else {
            table = compute_growth<AlgebraElement>(
                        GrowthTable::Kind::Lie, gens,
                        [&alg](const AlgebraElement& x, const AlgebraElement& y) {
                            return alg.commutator(x, y);
                        },
                        n_max)
                        .table;
        }
    }

    const std::string csv = csv_string(table);
    out << csv;
    write_file(out_file(opts, "growth.csv", out), csv);
    return 0;
}

int cmd_verify_lemma(const CommonOpts& opts, bool corrupt_mul, std::ostream& out) {
    ScenarioConfig cfg = load(opts);
    if (cfg.elements.empty())
        throw ConfigError(0, "[elements] must list at least one element a1");
    if (!cfg.has_n_max()) cfg.n_max = cfg.field.is_rational() ? 6 : 8;

    const EmbeddingScenario scenario(cfg.algebra, cfg.elements, cfg.n_max);
    const BandedMul mul = corrupt_mul ? defective_banded_mul() : standard_banded_mul();
    const int trials = cfg.oracle.trials;

    header(out, "verify-lemma", opts, cfg);
    out << "n_max: " << cfg.n_max << "\n";
    out << "seed: " << cfg.seed << "\n";
    out << "note: V includes 1 (added automatically)\n";
    if (corrupt_mul) out << "note: multiplication corrupted by --corrupt-mul\n";

    VerificationReport report;
    GrowthBoundResult bound;
    if (opts.threads > 1) {
        auto f_phi = std::async(std::launch::async,
                                [&] { return verify_phi(scenario, trials, cfg.seed, mul); });
        auto f_comm =
            std::async(std::launch::async, [&] { return verify_commutator_image(scenario, mul); });
        auto f_incl =
            std::async(std::launch::async, [&] { return verify_inclusion(scenario, mul); });
        auto f_bound =
            std::async(std::launch::async, [&] { return verify_growth_bound(scenario, mul); });
        report.merge(f_phi.get());
        report.merge(f_comm.get());
        report.merge(f_incl.get());
        bound = f_bound.get();
    } else {
        report.merge(verify_phi(scenario, trials, cfg.seed, mul));
        report.merge(verify_commutator_image(scenario, mul));
        report.merge(verify_inclusion(scenario, mul));
        bound = verify_growth_bound(scenario, mul);
    }
    report.merge(bound.report);

    std::ostringstream report_text;
    report.write(report_text);
    out << report_text.str();

    write_file(out_file(opts, "report.txt", out), report_text.str());
    write_file(out_file(opts, "gA.csv", out), csv_string(bound.base_table));
    write_file(out_file(opts, "gBprime.csv", out), csv_string(bound.banded_table));

    out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_oracle(const CommonOpts& opts, std::ostream& out) {
    const ScenarioConfig cfg = load(opts);
    header(out, "oracle", opts, cfg);
    out << "window: " << cfg.oracle.window << "\n";
    out << "truncation: " << cfg.oracle.truncation << "\n";
    out << "trials: " << cfg.oracle.trials << "\n";
    out << "max_offset: " << cfg.oracle.banded.max_offset << "\n";
    out << "max_degree: " << cfg.oracle.max_degree << "\n";
    out << "seed: " << cfg.oracle.seed << "\n";

    const OracleOutcome outcome = run_truncation_oracle(*cfg.algebra, cfg.oracle, opts.threads);
    std::ostringstream body;
    if (outcome.ok) {
        body << "oracle PASS trials=" << cfg.oracle.trials << "\n";
    } else {
        body << "oracle FAIL trial=" << outcome.failed_trial << "\n" << outcome.detail;
    }
    out << body.str();
    if (!opts.out_dir.empty()) write_file(out_file(opts, "oracle.txt", out), body.str());
    out << "result: " << (outcome.ok ? "PASS" : "FAIL") << "\n";
    return outcome.ok ? 0 : 1;
}

int cmd_pipeline(const CommonOpts& opts, std::ostream& out) {
    ScenarioConfig cfg = load(opts);
    if (cfg.algebra->kind() != BaseAlgebra::Kind::Enveloping)
        throw ConfigError(0, "pipeline requires [algebra] kind = enveloping");
    if (!cfg.has_n_max()) cfg.n_max = 4; // PBW growth is expensive

    header(out, "pipeline", opts, cfg);
    out << "n_max: " << cfg.n_max << "\n";
    out << "note: [C,C] stage generated by all pairwise commutators of the lifted generators\n";
    if (cfg.field.is_char2())
        out << "warning: field has characteristic 2; the embedding theory assumes char != 2\n";

    const PipelineResult result = pipeline_growth(cfg.algebra, cfg.n_max);

    std::ostringstream report_text;
    result.report.write(report_text);
    out << report_text.str();

    write_file(out_file(opts, "report.txt", out), report_text.str());
    write_file(out_file(opts, "u_growth.csv", out), csv_string(result.u_table));
    write_file(out_file(opts, "lemma_gA.csv", out), csv_string(result.lemma_base));
    write_file(out_file(opts, "lemma_gBprime.csv", out), csv_string(result.lemma_banded));
    {
        std::ostringstream cc;
        cc << "n,lie_dim,assoc_dim\n";
        for (int n = 1; n <= cfg.n_max; ++n)
            cc << n << ',' << result.cc_lie.at(n) << ',' << result.cc_assoc.at(n) << '\n';
        write_file(out_file(opts, "cc_compare.csv", out), cc.str());
    }

    out << "result: " << (result.report.all_pass() ? "PASS" : "FAIL") << "\n";
    return result.report.all_pass() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact growth functions of finitely generated algebras and the banded-matrix embedding calculus"};
    app.require_subcommand(1);

    CommonOpts growth_opts, verify_opts, oracle_opts, pipeline_opts;
    std::string growth_kind = "assoc";
    bool corrupt_mul = false;

    CLI::App* growth = app.add_subcommand("growth", "growth table of the configured generators");
    add_common(growth, growth_opts);
    growth->add_option("--kind", growth_kind, "assoc | lie")
        ->check(CLI::IsMember({"assoc", "lie"}))
        ->default_val("assoc");

    CLI::App* verify = app.add_subcommand("verify-lemma", "embedding, inclusion and bound checks");
    add_common(verify, verify_opts);
    verify->add_flag("--corrupt-mul", corrupt_mul,
                     "test hook: drop the band correction terms to exercise the failure path");

    CLI::App* oracle = app.add_subcommand("oracle", "randomized truncation comparison of products");
    add_common(oracle, oracle_opts);

    CLI::App* pipeline = app.add_subcommand("pipeline", "U(L), its banded scenario, and the M2 comparison");
    add_common(pipeline, pipeline_opts);

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end()); // CLI11 parses reversed
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (growth->parsed()) return cmd_growth(growth_opts, growth_kind, out);
        if (verify->parsed()) return cmd_verify_lemma(verify_opts, corrupt_mul, out);
        if (oracle->parsed()) return cmd_oracle(oracle_opts, out);
        return cmd_pipeline(pipeline_opts, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const IndexError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const FieldMismatchError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace bandgrowth
