// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance --cli <bandgrowth binary> --scenarios <dir> --tmp <dir>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bandgrowth/lemma.hpp"
#include "bandgrowth/oracle.hpp"

using namespace bandgrowth;
namespace fs = std::filesystem;

namespace {

struct Args {
    std::string cli;
    std::string scenarios;
    std::string tmp;
};

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::ostringstream line;
    line << "[" << criterion << "] " << name << " ";
    while (line.str().size() < 58) line << '.';
    line << ' ' << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) line << " (" << detail << ")";
    std::cout << line.str() << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

const FieldSpec kQ = FieldSpec::rationals();

AlgebraElement el(const BaseAlgebra& alg, const std::string& name) {
    return AlgebraElement::term(alg.parse_index(name), Scalar::one(alg.field()));
}

AlgebraPtr field_algebra() {
    return StructureConstantsBuilder(kQ, 1)
        .set_product(0, 0, {{0, Scalar::one(kQ)}})
        .set_unit({{0, Scalar::one(kQ)}})
        .set_names({"e"})
        .build();
}

struct LieTable {
    std::uint32_t dim;
    std::vector<std::tuple<std::uint32_t, std::uint32_t,
                           std::vector<std::pair<std::uint32_t, std::int64_t>>>>
        brackets;
};

AlgebraPtr lie_as_enveloping(const LieTable& t, std::vector<std::string> names = {}) {
    EnvelopingBuilder b(kQ, t.dim);
    if (!names.empty()) b.set_names(std::move(names));
    for (const auto& [i, j, terms] : t.brackets) {
        std::vector<std::pair<std::uint32_t, Scalar>> s;
        for (auto [k, c] : terms) s.emplace_back(k, Scalar::rational(c));
        b.set_bracket(i, j, s);
    }
    return b.build();
}

AlgebraPtr lie_as_structure(const LieTable& t, std::vector<std::string> names = {}) {
    StructureConstantsBuilder b(kQ, t.dim);
    if (!names.empty()) b.set_names(std::move(names));
    for (const auto& [i, j, terms] : t.brackets) {
        std::vector<std::pair<std::uint32_t, Scalar>> pos, neg;
        for (auto [k, c] : terms) {
            pos.emplace_back(k, Scalar::rational(c));
            neg.emplace_back(k, Scalar::rational(-c));
        }
        b.set_product(i, j, pos);
        b.set_product(j, i, neg);
    }
    return b.build();
}

LieTable sl2_table() {
    return {3, {{0, 2, {{1, 1}}}, {1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}}};
}

LieTable random_lie3(Rng& rng) {
    for (;;) {
        LieTable t{3, {}};
        bool nontrivial = false;
        for (std::uint32_t i = 0; i < 3; ++i) {
            for (std::uint32_t j = i + 1; j < 3; ++j) {
                std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
                for (std::uint32_t k = 0; k < 3; ++k) {
                    if (rng.uniform(0, 2) != 0) continue;
                    const std::int64_t c = rng.uniform(-2, 2);
                    if (c == 0) continue;
                    terms.emplace_back(k, c);
                    nontrivial = true;
                }
                if (!terms.empty()) t.brackets.push_back({i, j, terms});
            }
        }
        if (!nontrivial) continue;
        try {
            lie_as_enveloping(t);
            return t;
        } catch (const ValidationError&) {
        }
    }
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<WeightedGen<AlgebraElement>> weigh(const std::vector<AlgebraElement>& gens) {
    std::vector<WeightedGen<AlgebraElement>> out;
    for (const auto& g : gens) out.push_back({g, 1});
    return out;
}

// -- criteria ---------------------------------------------------------------

void criterion_1_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto alg = make_polynomial(kQ, 1);
    OracleParams params; // window 8, truncation 16, 500 trials, seed 42, offsets <= 3
    const OracleOutcome outcome = run_truncation_oracle(*alg, params);
    const double elapsed = seconds_since(t0);
    report(1, "multiplication-rule oracle", outcome.ok && elapsed < 10.0,
           std::to_string(params.trials) + " trials, " + fmt_seconds(elapsed) +
               (outcome.ok ? "" : ", first failure at trial " + std::to_string(outcome.failed_trial)));
}

void criterion_2_displayed_identity() {
    const auto alg = make_polynomial(kQ, 2);
    const EmbeddingScenario scenario(alg, {el(*alg, "x"), el(*alg, "y")}, 6);
    // spanning elements of V^6 = polynomials of degree <= 6: C(8,2) of them
    const auto base = compute_growth<AlgebraElement>(
        GrowthTable::Kind::Assoc, weigh(scenario.base_generators()),
        [&](const AlgebraElement& x, const AlgebraElement& y) { return alg->mul(x, y); }, 6);
    const bool count_ok = base.table.at(6) == binom(8, 2);
    const VerificationReport rep = verify_commutator_image(scenario);
    report(2, "displayed identity [E1(a),E-1(1)] = e11(a)", rep.all_pass() && count_ok,
           std::to_string(base.table.at(6)) + " basis elements of V^6" +
               (rep.all_pass() ? "" : "; " + rep.checks[0].witness));
}

void criterion_3_inclusion() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto alg = make_polynomial(kQ, 2);
    const EmbeddingScenario scenario(alg, {el(*alg, "x"), el(*alg, "y")}, 6);
    const VerificationReport rep = verify_inclusion(scenario);
    const double elapsed = seconds_since(t0);
    report(3, "inclusion of W^n in cells + bands over V^n", rep.all_pass() && elapsed < 60.0,
           "n <= 6, " + fmt_seconds(elapsed) +
               (rep.all_pass() ? "" : "; " + rep.checks[0].witness));
}

void criterion_4_growth_bound() {
    bool ok = true;
    std::string detail;
    const auto run = [&](const AlgebraPtr& alg, std::vector<AlgebraElement> elems, int n_max,
                         const std::string& label) {
        const EmbeddingScenario scenario(alg, std::move(elems), n_max);
        const GrowthBoundResult r = verify_growth_bound(scenario);
        if (!r.report.all_pass()) {
            ok = false;
            detail += label + ": " + r.report.checks[0].witness + "; ";
        }
    };
    const auto p1 = make_polynomial(kQ, 1);
    run(p1, {el(*p1, "x")}, 6, "poly1");
    const auto p2 = make_polynomial(kQ, 2);
    run(p2, {el(*p2, "x"), el(*p2, "y")}, 6, "poly2");
    const auto f = field_algebra();
    run(f, {f->one()}, 8, "field");
    report(4, "growth bound (n^2+2n+1) * g_A", ok,
           ok ? "poly1 n<=6, poly2 n<=6, field n<=8" : detail);
}

void criterion_5_left_normed() {
    bool ok = true;
    std::string detail;
    const auto check = [&](const std::string& label, const AlgebraPtr& alg,
                           const std::vector<AlgebraElement>& gens, bool commutator) {
        auto mul = [&](const AlgebraElement& x, const AlgebraElement& y) {
            return commutator ? alg->commutator(x, y) : alg->mul(x, y);
        };
        const auto grown =
            compute_growth<AlgebraElement>(GrowthTable::Kind::Lie, weigh(gens), mul, 5);
        for (int n = 1; n <= 5; ++n) {
            const std::uint64_t brute = brute_force_span<AlgebraElement>(gens, mul, n);
            if (grown.table.at(n) != brute) {
                ok = false;
                detail += label + " n=" + std::to_string(n) + ": " +
                          std::to_string(grown.table.at(n)) + " vs " + std::to_string(brute) + "; ";
            }
        }
    };
    const auto sl2 = lie_as_structure(sl2_table(), {"e", "h", "f"});
    validate_lie_structure(*sl2);
    check("sl2", sl2, {el(*sl2, "e"), el(*sl2, "f")}, false);

    Rng rng(2024);
    const auto rnd = lie_as_structure(random_lie3(rng));
    validate_lie_structure(*rnd);
    check("random-lie3", rnd, {el(*rnd, "e1"), el(*rnd, "e2"), el(*rnd, "e3")}, false);

    const auto m2 = matrix_extend(field_algebra());
    check("M2(Q)", m2, {el(*m2, "m12(e)"), el(*m2, "m21(e)")}, true);

    report(5, "left-normed spans match all bracketings (n <= 5)", ok,
           ok ? "sl2, random 3-dim Lie, M2(Q)" : detail);
}

void criterion_6_pbw() {
    bool ok = true;
    std::string detail;

    // growth of U(L) for V = {1, generators} against exponent-vector counts
    const auto check_u = [&](const AlgebraPtr& u, std::uint32_t d, const std::string& label) {
        std::vector<AlgebraElement> gens{u->one()};
        for (std::uint32_t i = 0; i < d; ++i) {
            std::vector<std::uint32_t> e(d, 0);
            e[i] = 1;
            gens.push_back(AlgebraElement::term(BasisIndex::pbw(std::move(e)), Scalar::one(kQ)));
        }
        const auto grown = compute_growth<AlgebraElement>(
            GrowthTable::Kind::Assoc, weigh(gens),
            [&](const AlgebraElement& x, const AlgebraElement& y) { return u->mul(x, y); }, 6);
        for (int n = 1; n <= 6; ++n) {
            // oracle: enumerate exponent vectors with sum <= n
            std::uint64_t count = 0;
            std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t var,
                                                                        std::uint32_t left) {
                if (var == d) {
                    ++count;
                    return;
                }
                for (std::uint32_t e = 0; e <= left; ++e) rec(var + 1, left - e);
            };
            rec(0, static_cast<std::uint32_t>(n));
            if (grown.table.at(n) != count) {
                ok = false;
                detail += label + " n=" + std::to_string(n) + "; ";
            }
        }
    };
    check_u(lie_as_enveloping({2, {}}), 2, "U(abelian2)");
    check_u(lie_as_enveloping(sl2_table(), {"e", "h", "f"}), 3, "U(sl2)");

    // confluence fuzz: leftmost rewriting against random-order rewriting
    Rng lie_rng(2024);
    const std::vector<AlgebraPtr> algs = {lie_as_enveloping(sl2_table(), {"e", "h", "f"}),
                                          lie_as_enveloping(random_lie3(lie_rng))};
    Rng rng(5);
    for (const auto& a : algs) {
        const auto& env = static_cast<const EnvelopingAlgebra&>(*a);
        for (int i = 0; i < 200; ++i) {
            const int len = static_cast<int>(rng.uniform(0, 6));
            std::vector<std::uint32_t> word;
            for (int j = 0; j < len; ++j)
                word.push_back(static_cast<std::uint32_t>(rng.uniform(0, env.generators() - 1)));

            AlgebraElement random_order;
            std::vector<std::pair<std::vector<std::uint32_t>, Scalar>> work;
            work.emplace_back(word, Scalar::one(kQ));
            while (!work.empty()) {
                auto [w, coeff] = std::move(work.back());
                work.pop_back();
                std::vector<std::size_t> inv;
                for (std::size_t t = 0; t + 1 < w.size(); ++t)
                    if (w[t] > w[t + 1]) inv.push_back(t);
                if (inv.empty()) {
                    std::vector<std::uint32_t> exps(env.generators(), 0);
                    for (auto g : w) ++exps[g];
                    random_order.add_term(BasisIndex::pbw(std::move(exps)), coeff);
                    continue;
                }
                const std::size_t t = inv[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<std::int64_t>(inv.size()) - 1))];
                auto swapped = w;
                std::swap(swapped[t], swapped[t + 1]);
                for (const auto& [k, c] : env.bracket_gen(w[t], w[t + 1])) {
                    std::vector<std::uint32_t> contracted(w.begin(), w.begin() + t);
                    contracted.push_back(k);
                    contracted.insert(contracted.end(), w.begin() + t + 2, w.end());
                    work.emplace_back(std::move(contracted), coeff * c);
                }
                work.emplace_back(std::move(swapped), std::move(coeff));
            }
            if (env.straighten_word(word) != random_order) {
                ok = false;
                detail += "confluence word #" + std::to_string(i) + "; ";
                break;
            }
        }
    }
    report(6, "PBW growth counts and straightening confluence", ok,
           ok ? "U(abelian2) = C(n+2,2), U(sl2) = C(n+3,3), 2x200 words" : detail);
}

void criterion_7_pipeline_inequality() {
    bool ok = true;
    std::string detail;
    const auto check = [&](const AlgebraPtr& base, const std::vector<AlgebraElement>& gens,
                           const std::string& label) {
        const auto r = matrix_commutator_comparison(base, gens, 6);
        if (!r.report.all_pass()) {
            ok = false;
            detail += label + ": " + r.report.checks[0].witness + "; ";
        }
    };
    const auto f = field_algebra();
    check(f, {f->one()}, "M2(F)");
    const auto p1 = make_polynomial(kQ, 1);
    check(p1, {p1->one(), el(*p1, "x")}, "M2(F[x])");
    report(7, "Lie growth of [C,C] generators <= growth of C", ok,
           ok ? "base F and F[x], n <= 6" : detail);
}

struct RunOutput {
    int exit_code = -1;
    std::string out;
};

RunOutput run_cli(const Args& args, const std::string& cmdline, const std::string& tag) {
    const fs::path outfile = fs::path(args.tmp) / (tag + ".stdout");
    const std::string full = args.cli + " " + cmdline + " > " + outfile.string() + " 2>&1";
    RunOutput r;
    r.exit_code = std::system(full.c_str());
    std::ifstream f(outfile);
    std::ostringstream os;
    os << f.rdbuf();
    r.out = os.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void criterion_8_determinism(const Args& args) {
    fs::create_directories(args.tmp);
    bool ok = true;
    std::string detail;

    // identical command lines into one output directory: stdout and every
    // artifact must agree byte for byte across reruns and thread counts
    const std::string poly2 = (fs::path(args.scenarios) / "poly2.cfg").string();
    const fs::path vout = fs::path(args.tmp) / "vout";
    const std::string base_cmd = "verify-lemma --config " + poly2 + " --nmax 4 --out " + vout.string();
    const auto snapshot = [&] {
        std::vector<std::string> files;
        for (const char* name : {"report.txt", "gA.csv", "gBprime.csv"})
            files.push_back(slurp(vout / name));
        return files;
    };
    const auto r1 = run_cli(args, base_cmd, "v1");
    const auto f1 = snapshot();
    const auto r2 = run_cli(args, base_cmd, "v2");
    const auto f2 = snapshot();
    const auto r3 = run_cli(args, base_cmd + " --threads 4", "v3");
    const auto f3 = snapshot();
    if (r1.exit_code != 0) {
        ok = false;
        detail += "verify-lemma failed; ";
    }
    if (f1.empty() || f1[0].empty() || f1 != f2 || f1 != f3) {
        ok = false;
        detail += "verify-lemma artifacts differ; ";
    }
    if (r1.out != r2.out || r1.out != r3.out) {
        ok = false;
        detail += "verify-lemma stdout differs; ";
    }

    const std::string ocfg = (fs::path(args.scenarios) / "oracle_poly1.cfg").string();
    const auto o1 = run_cli(args, "oracle --config " + ocfg, "o1");
    const auto o2 = run_cli(args, "oracle --config " + ocfg, "o2");
    const auto o3 = run_cli(args, "oracle --config " + ocfg + " --threads 4", "o3");
    if (o1.exit_code != 0 || o1.out != o2.out || o1.out != o3.out) {
        ok = false;
        detail += "oracle transcript differs or failed; ";
    }
    report(8, "byte-identical reruns, 1 vs 4 threads, fixed seed", ok,
           ok ? "verify-lemma + oracle" : detail);
}

} // namespace

int main(int argc, char** argv) {
    Args args;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string key = argv[i];
        if (key == "--cli")
            args.cli = argv[i + 1];
        else if (key == "--scenarios")
            args.scenarios = argv[i + 1];
        else if (key == "--tmp")
            args.tmp = argv[i + 1];
    }
    if (args.cli.empty() || args.scenarios.empty() || args.tmp.empty()) {
        std::cerr << "usage: acceptance --cli <binary> --scenarios <dir> --tmp <dir>\n";
        return 2;
    }

    criterion_1_oracle();
    criterion_2_displayed_identity();
    criterion_3_inclusion();
    criterion_4_growth_bound();
    criterion_5_left_normed();
    criterion_6_pbw();
    criterion_7_pipeline_inequality();
    criterion_8_determinism(args);

    std::cout << "result: " << (8 - failures) << "/8 PASS\n";
    return failures == 0 ? 0 : 1;
}
