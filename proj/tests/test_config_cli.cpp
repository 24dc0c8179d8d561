#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bandgrowth/cli.hpp"
#include "bandgrowth/config.hpp"

using namespace bandgrowth;

namespace {

namespace fs = std::filesystem;

ScenarioConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

int config_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.line;
    }
    return -1;
}

/// Scratch directory per test, removed on destruction.
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("bandgrowth_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream f(p);
        f << content;
        return p.string();
    }
    std::string read(const std::string& name) const {
        std::ifstream f(path / name);
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    }
};

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kPoly1Growth = R"(
[field]
kind = rational

[algebra]
kind = polynomial
vars = 1

[elements]
a1 = (1, 1, 1)
a2 = (x, 1, 1)

[run]
n_max = 10
seed = 42
)";

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("a full scenario") {
        const ScenarioConfig cfg = parse(R"(
# comment
[field]
kind = prime
p = 1009

[algebra]
kind = polynomial
vars = 2

[elements]
a1 = (x, 1, 1) (y, -2, 3)

[run]
n_max = 5
seed = 7
)");
        CHECK(cfg.field.modulus() == 1009);
        CHECK(cfg.algebra->describe() == "polynomial vars=2");
        REQUIRE(cfg.elements.size() == 1);
        CHECK(cfg.elements[0].support_size() == 2);
        CHECK(cfg.n_max == 5);
        CHECK(cfg.seed == 7);
    }
    SUBCASE("structure constants with products and unit") {
        const ScenarioConfig cfg = parse(R"(
[algebra]
kind = structure_constants
dim = 2
names = one, t
one*one = (one, 1, 1)
one*t = (t, 1, 1)
t*one = (t, 1, 1)
unit = (one, 1, 1)
)");
        CHECK(cfg.algebra->is_unital());
        CHECK(cfg.algebra->mul(cfg.algebra->one(), cfg.algebra->one()) == cfg.algebra->one());
    }
    SUBCASE("enveloping with brackets and order") {
        const ScenarioConfig cfg = parse(R"(
[algebra]
kind = enveloping
dim = 3
names = e, h, f
[e,f] = (h, 1, 1)
[h,e] = (e, 2, 1)
[h,f] = (f, -2, 1)
order = e, h, f
)");
        CHECK(cfg.algebra->kind() == BaseAlgebra::Kind::Enveloping);
    }
}

TEST_CASE("config rejection names the line") {
    CHECK(config_error_line("[nope]\n") == 1);
    CHECK(config_error_line("[run]\nbogus = 3\n") == 2);
    CHECK(config_error_line("[run]\nn_max = 3\nn_max = 4\n") == 3);
    CHECK(config_error_line("key = 1\n") == 1); // key outside a section
    CHECK(config_error_line("[algebra]\nkind = polynomial\nvars = x\n") == 3);
    CHECK(config_error_line("[algebra]\nkind = quaternions\n") == 2);
    CHECK(config_error_line("[field]\nkind = prime\np = 6\n") == 3); // not prime
    CHECK(config_error_line("[field]\np = 7\n") == 2);               // p without prime kind
    // element triples
    const std::string head = "[algebra]\nkind = polynomial\nvars = 1\n[elements]\n";
    CHECK(config_error_line(head + "a1 = (x, 1)\n") == 5);
    CHECK(config_error_line(head + "a1 = x\n") == 5);
    CHECK(config_error_line(head + "a1 = (q, 1, 1)\n") == 5);
    CHECK(config_error_line(head + "a1 = (x, 1, 0)\n") == 5);
    CHECK(config_error_line(head + "a2 = (x, 1, 1)\n") == 5); // gap: a1 missing
    CHECK(config_error_line(head + "a01 = (x, 1, 1)\n") == 5); // zero-padded alias
    CHECK(config_error_line(head + "a1 = (x, 1, 1)\na01 = (x, 1, 1)\n") == 6); // index collision
    CHECK(config_error_line("[algebra]\nkind = polynomial\n") == 0); // vars missing
}

TEST_CASE("cli growth") {
    TempDir tmp;
    const std::string cfg = tmp.file("g.cfg", kPoly1Growth);
    SUBCASE("polynomial table rows") {
        const auto r = cli({"growth", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        std::string expect = "n,dim\n";
        for (int n = 1; n <= 10; ++n)
            expect += std::to_string(n) + "," + std::to_string(n + 1) + "\n";
        CHECK(tmp.read("growth.csv") == expect);
        CHECK(r.out.find(expect) != std::string::npos);
    }
    SUBCASE("missing n_max is a config error naming the field") {
        const std::string bare = tmp.file("bare.cfg", R"(
[algebra]
kind = polynomial
vars = 1
[elements]
a1 = (x, 1, 1)
)");
        const auto r = cli({"growth", "--config", bare, "--out", tmp.path.string()});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("n_max") != std::string::npos);
    }
    SUBCASE("abelian lie growth is constant") {
        const std::string lie = tmp.file("lie.cfg", R"(
[algebra]
kind = structure_constants
dim = 3
[elements]
a1 = (e1, 1, 1)
a2 = (e2, 1, 1)
a3 = (e3, 1, 1)
[run]
n_max = 6
)");
        const auto r = cli({"growth", "--config", lie, "--kind", "lie", "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        CHECK(tmp.read("growth.csv") == "n,dim\n1,3\n2,3\n3,3\n4,3\n5,3\n6,3\n");
    }
    SUBCASE("lie growth rejects a non-Lie table") {
        const std::string bad = tmp.file("bad.cfg", R"(
[algebra]
kind = structure_constants
dim = 1
e1*e1 = (e1, 1, 1)
[elements]
a1 = (e1, 1, 1)
[run]
n_max = 3
)");
        const auto r = cli({"growth", "--config", bad, "--kind", "lie", "--out", tmp.path.string()});
        CHECK(r.exit_code == 4);
    }
}

TEST_CASE("cli verify-lemma") {
    TempDir tmp;
    const std::string cfg = tmp.file("p2.cfg", R"(
[algebra]
kind = polynomial
vars = 2
[elements]
a1 = (x, 1, 1)
a2 = (y, 1, 1)
[run]
n_max = 3
seed = 42
)");
    SUBCASE("all checks pass") {
        const auto r = cli({"verify-lemma", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("phi-embedding PASS\n") != std::string::npos);
        CHECK(r.out.find("commutator-image PASS\n") != std::string::npos);
        CHECK(r.out.find("inclusion-bounds PASS\n") != std::string::npos);
        CHECK(r.out.find("growth-bound PASS\n") != std::string::npos);
        CHECK(r.out.find("result: PASS\n") != std::string::npos);
        CHECK(r.out.find("note: V includes 1") != std::string::npos);
        CHECK(tmp.read("report.txt").find("growth-bound PASS") != std::string::npos);
        CHECK(tmp.read("gA.csv").substr(0, 6) == "n,dim\n");
        CHECK(tmp.read("gBprime.csv").substr(0, 12) == "n,dim,bound\n");
    }
    SUBCASE("corrupted multiplication fails with a counterexample") {
        const auto r = cli({"verify-lemma", "--config", cfg, "--out", tmp.path.string(),
                            "--corrupt-mul"});
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("commutator-image FAIL") != std::string::npos);
        CHECK(r.out.find("result: FAIL\n") != std::string::npos);
    }
    SUBCASE("non-unital base exits 3") {
        const std::string nil = tmp.file("nil.cfg", R"(
[algebra]
kind = structure_constants
dim = 1
[elements]
a1 = (e1, 1, 1)
[run]
n_max = 3
)");
        const auto r = cli({"verify-lemma", "--config", nil, "--out", tmp.path.string()});
        CHECK(r.exit_code == 3);
    }
    SUBCASE("base = F: the bound column is n^2+2n+1") {
        const std::string fcfg = tmp.file("f.cfg", R"(
[algebra]
kind = structure_constants
dim = 1
names = e
e*e = (e, 1, 1)
unit = (e, 1, 1)
[elements]
a1 = (e, 1, 1)
[run]
n_max = 8
)");
        const auto r = cli({"verify-lemma", "--config", fcfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        std::string expect = "n,dim,bound\n";
        std::istringstream rows(tmp.read("gBprime.csv"));
        std::string line;
        std::getline(rows, line);
        CHECK(line == "n,dim,bound");
        for (int n = 1; n <= 8; ++n) {
            REQUIRE(std::getline(rows, line));
            const auto last = line.rfind(',');
            CHECK(line.substr(last + 1) == std::to_string(n * n + 2 * n + 1));
        }
    }
    SUBCASE("prime field defaults to n_max 8 and matches the rational table") {
        const std::string pcfg = tmp.file("prime.cfg", R"(
[field]
kind = prime
p = 1009
[algebra]
kind = polynomial
vars = 1
[elements]
a1 = (x, 1, 1)
)");
        const auto r = cli({"verify-lemma", "--config", pcfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("n_max: 8\n") != std::string::npos); // prime-field default
        CHECK(r.out.find("field: prime p=1009\n") != std::string::npos);
        const std::string prime_gA = tmp.read("gA.csv");
        const auto q = cli({"verify-lemma", "--config",
                            tmp.file("rat.cfg", R"(
[algebra]
kind = polynomial
vars = 1
[elements]
a1 = (x, 1, 1)
[run]
n_max = 8
)"),
                            "--out", tmp.path.string()});
        CHECK(q.exit_code == 0);
        CHECK(tmp.read("gA.csv") == prime_gA); // same dimensions over Q and F_1009
    }
    SUBCASE("byte-identical across repeats and thread counts") {
        const auto a = cli({"verify-lemma", "--config", cfg, "--out", tmp.path.string()});
        const std::string report_a = tmp.read("report.txt");
        const auto b = cli({"verify-lemma", "--config", cfg, "--out", tmp.path.string()});
        const auto c = cli({"verify-lemma", "--config", cfg, "--out", tmp.path.string(),
                            "--threads", "4"});
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
        CHECK(report_a == tmp.read("report.txt"));
    }
}

TEST_CASE("cli oracle") {
    TempDir tmp;
    const std::string cfg = tmp.file("o.cfg", R"(
[algebra]
kind = polynomial
vars = 1
[run]
seed = 42
window = 6
truncation = 14
trials = 40
max_offset = 3
max_degree = 2
)");
    const auto a = cli({"oracle", "--config", cfg});
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("oracle PASS trials=40\n") != std::string::npos);
    CHECK(a.out.find("seed: 42\n") != std::string::npos);
    const auto b = cli({"oracle", "--config", cfg});
    const auto c = cli({"oracle", "--config", cfg, "--threads", "4"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    SUBCASE("seed override changes the header, not the verdict") {
        const auto d = cli({"oracle", "--config", cfg, "--seed", "7"});
        CHECK(d.exit_code == 0);
        CHECK(d.out.find("seed: 7\n") != std::string::npos);
    }
}

TEST_CASE("cli pipeline") {
    TempDir tmp;
    SUBCASE("sl2 growth table") {
        const std::string cfg = tmp.file("sl2.cfg", R"(
[algebra]
kind = enveloping
dim = 3
names = e, h, f
[e,f] = (h, 1, 1)
[h,e] = (e, 2, 1)
[h,f] = (f, -2, 1)
[run]
n_max = 3
)");
        const auto r = cli({"pipeline", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        CHECK(tmp.read("u_growth.csv") == "n,dim\n1,4\n2,10\n3,20\n");
        CHECK(tmp.read("cc_compare.csv").substr(0, 19) == "n,lie_dim,assoc_dim");
        CHECK(r.out.find("result: PASS\n") != std::string::npos);
    }
    SUBCASE("abelian dimension 2: binomial rows") {
        const std::string cfg = tmp.file("ab2.cfg", R"(
[algebra]
kind = enveloping
dim = 2
[run]
n_max = 4
)");
        const auto r = cli({"pipeline", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        CHECK(tmp.read("u_growth.csv") == "n,dim\n1,3\n2,6\n3,10\n4,15\n");
    }
    SUBCASE("Jacobi violation exits 4 naming the triple") {
        const std::string cfg = tmp.file("bad.cfg", R"(
[algebra]
kind = enveloping
dim = 3
[g1,g2] = (g1, 1, 1)
[g2,g3] = (g2, 1, 1)
[g3,g1] = (g3, 1, 1)
[run]
n_max = 3
)");
        const auto r = cli({"pipeline", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 4);
        CHECK(r.err.find("Jacobi identity fails at triple (1,2,3)") != std::string::npos);
    }
    SUBCASE("characteristic 2 warns") {
        const std::string cfg = tmp.file("p2.cfg", R"(
[field]
kind = prime
p = 2
[algebra]
kind = enveloping
dim = 2
[run]
n_max = 3
)");
        const auto r = cli({"pipeline", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("warning: field has characteristic 2") != std::string::npos);
    }
    SUBCASE("non-enveloping config is rejected") {
        const std::string cfg = tmp.file("p.cfg", R"(
[algebra]
kind = polynomial
vars = 1
[run]
n_max = 3
)");
        const auto r = cli({"pipeline", "--config", cfg, "--out", tmp.path.string()});
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("every shipped scenario runs clean under its command") {
    const std::string dir = BANDGROWTH_SCENARIOS_DIR;
    TempDir tmp;
    const auto run = [&](const std::string& cmd, const std::string& cfg,
                         std::vector<std::string> extra = {}) {
        std::vector<std::string> args{cmd, "--config", dir + "/" + cfg, "--out",
                                      tmp.path.string()};
        for (auto& e : extra) args.push_back(std::move(e));
        return cli(args);
    };
    CHECK(run("verify-lemma", "poly1.cfg").exit_code == 0);
    CHECK(run("verify-lemma", "poly2.cfg").exit_code == 0);
    CHECK(run("verify-lemma", "field.cfg").exit_code == 0);
    CHECK(run("growth", "growth_poly1.cfg").exit_code == 0);
    CHECK(run("growth", "lie3_abelian.cfg", {"--kind", "lie"}).exit_code == 0);
    CHECK(run("oracle", "oracle_poly1.cfg").exit_code == 0);
    CHECK(run("pipeline", "sl2.cfg").exit_code == 0);
    CHECK(run("pipeline", "abelian2.cfg").exit_code == 0);
    CHECK(run("pipeline", "bad_jacobi.cfg").exit_code == 4); // the shipped failure path
}

TEST_CASE("cli usage errors") {
    const auto r = cli({"growth"});
    CHECK(r.exit_code == 2); // --config required
    const auto h = cli({"--help"});
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("growth") != std::string::npos);
}
