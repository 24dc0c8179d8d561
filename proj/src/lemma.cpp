#include "bandgrowth/lemma.hpp"

#include <sstream>

#include "bandgrowth/oracle.hpp"

namespace bandgrowth {

namespace {

std::string gen_word_str(const std::vector<std::uint32_t>& word, std::size_t m) {
    std::string out;
    for (auto gi : word) {
        if (!out.empty()) out += "*";
        out += gi < m ? "E1(a" + std::to_string(gi + 1) + ")" : "E-1(1)";
    }
    return out;
}

AlgebraElement lift_to_cell(const AlgebraElement& v, int r, int s) {
    AlgebraElement out;
    for (const auto& [idx, c] : v.terms()) out.add_term(BasisIndex::matrix_cell(r, s, idx), c);
    return out;
}

} // namespace

EmbeddingScenario::EmbeddingScenario(AlgebraPtr base_, std::vector<AlgebraElement> elems_,
                                     int n_max_)
    : base(std::move(base_)), elems(std::move(elems_)), n_max(n_max_) {
    if (!base) throw PreconditionError("scenario needs a base algebra");
    if (!base->is_unital())
        throw PreconditionError("scenario base must be unital: E_-1(1) needs 1");
    if (elems.empty()) throw PreconditionError("scenario needs at least one element a_i");
    if (n_max < 1) throw PreconditionError("n_max must be >= 1");
    for (const auto& a : elems) base->check_element(a);
}

std::vector<AlgebraElement> EmbeddingScenario::base_generators() const {
    std::vector<AlgebraElement> gens = elems;
    gens.push_back(base->one());
    return gens;
}

BandedMul standard_banded_mul() {
    return [](const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y) {
        return mul_banded(alg, x, y);
    };
}

BandedMul defective_banded_mul() {
    return [](const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y) {
        return mul_banded_drop_corrections(alg, x, y);
    };
}

std::vector<BandedElement> build_generators(const EmbeddingScenario& scenario) {
    std::vector<BandedElement> gens;
    for (const auto& a : scenario.elems) gens.push_back(BandedElement::band(1, a));
    gens.push_back(BandedElement::band(-1, scenario.base->one()));
    return gens;
}

BandedElement phi(const AlgebraElement& a) { return BandedElement::cell(1, 1, a); }

namespace {

GrowthResult<AlgebraElement> base_growth(const EmbeddingScenario& scenario) {
    const auto gens = scenario.base_generators();
    std::vector<WeightedGen<AlgebraElement>> wgens;
    for (const auto& g : gens) wgens.push_back({g, 1});
    const BaseAlgebra& alg = *scenario.base;
    return compute_growth<AlgebraElement>(
        GrowthTable::Kind::Assoc, wgens,
        [&alg](const AlgebraElement& x, const AlgebraElement& y) { return alg.mul(x, y); },
        scenario.n_max);
}

GrowthResult<BandedElement> banded_growth(const EmbeddingScenario& scenario, const BandedMul& mul,
                                          const ProductVisitor<BandedElement>& visitor = {}) {
    std::vector<WeightedGen<BandedElement>> wgens;
    for (const auto& g : build_generators(scenario)) wgens.push_back({g, 1});
    const BaseAlgebra& alg = *scenario.base;
    return compute_growth<BandedElement>(
        GrowthTable::Kind::Assoc, wgens,
        [&alg, &mul](const BandedElement& x, const BandedElement& y) { return mul(alg, x, y); },
        scenario.n_max, visitor);
}

AlgebraElement random_combination(const std::vector<KeptElement<AlgebraElement>>& kept,
                                  const FieldSpec& field, Rng& rng) {
    AlgebraElement a;
    const int picks = static_cast<int>(rng.uniform(0, 3));
    for (int i = 0; i < picks; ++i) {
        const auto& k = kept[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(kept.size()) - 1))];
        a += k.elem.scaled(random_scalar(field, rng));
    }
    return a;
}

} // namespace

VerificationReport verify_phi(const EmbeddingScenario& scenario, int trials, std::uint64_t seed,
                              const BandedMul& mul) {
    const BaseAlgebra& alg = *scenario.base;
    const auto spanning = base_growth(scenario).kept;
    Rng rng(seed);
    CheckResult check{"phi-embedding", true, ""};
    for (int t = 0; t < trials && check.pass; ++t) {
        const AlgebraElement a = random_combination(spanning, alg.field(), rng);
        const AlgebraElement b = random_combination(spanning, alg.field(), rng);
        const Scalar alpha = random_scalar(alg.field(), rng);
        const Scalar beta = random_scalar(alg.field(), rng);
        if (phi(alg.mul(a, b)) != mul(alg, phi(a), phi(b))) {
            check.pass = false;
            check.witness = "phi(ab) != phi(a)phi(b) at a = " + alg.element_str(a) +
                            ", b = " + alg.element_str(b);
        } else if (phi(a.scaled(alpha) + b.scaled(beta)) !=
                   phi(a).scaled(alpha) + phi(b).scaled(beta)) {
            check.pass = false;
            check.witness = "phi not linear at a = " + alg.element_str(a) +
                            ", b = " + alg.element_str(b);
        } else if (a.is_zero() != phi(a).is_zero()) {
            check.pass = false;
            check.witness = "phi(a) = 0 but a != 0 at a = " + alg.element_str(a);
        }
    }
    VerificationReport report;
    report.add(std::move(check));
    return report;
}

VerificationReport verify_commutator_image(const EmbeddingScenario& scenario,
                                           const BandedMul& mul) {
    const BaseAlgebra& alg = *scenario.base;
    const AlgebraElement one = alg.one();
    const BandedElement lower = BandedElement::band(-1, one);
    CheckResult check{"commutator-image", true, ""};
    for (const auto& k : base_growth(scenario).kept) {
        const BandedElement upper = BandedElement::band(1, k.elem);
        const BandedElement got = mul(alg, upper, lower) - mul(alg, lower, upper);
        if (got != phi(k.elem)) {
            check.pass = false;
            check.witness = "[E1(a), E-1(1)] != e(1,1){a} at a = " + alg.element_str(k.elem) +
                            "; got " + banded_str(alg, got);
            break;
        }
    }
    VerificationReport report;
    report.add(std::move(check));
    return report;
}

VerificationReport verify_inclusion(const EmbeddingScenario& scenario, const BandedMul& mul) {
    const BaseAlgebra& alg = *scenario.base;
    const std::size_t m = scenario.elems.size();

    // V^n bases, extended level by level alongside the banded walk.
    const auto base_result = base_growth(scenario);
    SpanBasis v_basis;
    std::size_t next_kept = 0;
    int v_level = 0;
    auto ensure_level = [&](int level) {
        while (v_level < level) {
            ++v_level;
            while (next_kept < base_result.kept.size() &&
                   base_result.kept[next_kept].level <= v_level) {
                v_basis.insert(coordinates(base_result.kept[next_kept].elem));
                ++next_kept;
            }
        }
    };

    CheckResult check{"inclusion-bounds", true, ""};
    std::uint64_t products = 0;
    auto visitor = [&](const BandedElement& e, int level, const std::vector<std::uint32_t>& word) {
        ++products;
        if (!check.pass) return;
        ensure_level(level);
        auto fail = [&](const std::string& why) {
            check.pass = false;
            check.witness = why + " in " + gen_word_str(word, m) + " (n = " +
                            std::to_string(level) + "): " + banded_str(alg, e);
        };
        for (const auto& [key, value] : e.cells()) {
            if (key.row > level || key.col > level) {
                fail("cell (" + std::to_string(key.row) + "," + std::to_string(key.col) +
                     ") outside [1,n]^2");
                return;
            }
            if (!v_basis.contains(coordinates(value))) {
                fail("cell coefficient outside V^n");
                return;
            }
        }
        for (const auto& [k, value] : e.bands()) {
            if (k > level || k < -level) {
                fail("band offset " + std::to_string(k) + " outside [-n,n]");
                return;
            }
            if (!v_basis.contains(coordinates(value))) {
                fail("band coefficient outside V^n");
                return;
            }
        }
    };
    banded_growth(scenario, mul, visitor);

    if (check.pass)
        check.witness.clear();
    VerificationReport report;
    report.add(std::move(check));
    return report;
}

GrowthBoundResult verify_growth_bound(const EmbeddingScenario& scenario, const BandedMul& mul) {
    GrowthBoundResult out;
    out.base_table = base_growth(scenario).table;
    out.banded_table = banded_growth(scenario, mul).table;
    CheckResult check{"growth-bound", true, ""};
    for (int n = 1; n <= scenario.n_max; ++n) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n) * n + 2 * n + 1;
        const std::uint64_t bound = factor * out.base_table.at(n);
        out.banded_table.bounds.push_back(bound);
        if (check.pass && out.banded_table.at(n) > bound) {
            check.pass = false;
            check.witness = "g_B'(W," + std::to_string(n) + ") = " +
                            std::to_string(out.banded_table.at(n)) + " exceeds (n^2+2n+1)*g_A = " +
                            std::to_string(bound);
        }
    }
    out.report.add(std::move(check));
    return out;
}

MatrixComparisonResult matrix_commutator_comparison(const AlgebraPtr& base,
                                                    const std::vector<AlgebraElement>& base_gens,
                                                    int n_max) {
    if (base_gens.empty()) throw PreconditionError("matrix comparison needs base generators");
    const AlgebraPtr c_alg = matrix_extend(base);
    const BaseAlgebra& c = *c_alg;

    std::vector<WeightedGen<AlgebraElement>> assoc_gens;
    for (const auto& v : base_gens)
        for (int r = 1; r <= 2; ++r)
            for (int s = 1; s <= 2; ++s) assoc_gens.push_back({lift_to_cell(v, r, s), 1});

    auto assoc_mul = [&c](const AlgebraElement& x, const AlgebraElement& y) { return c.mul(x, y); };
    auto lie_mul = [&c](const AlgebraElement& x, const AlgebraElement& y) {
        return c.commutator(x, y);
    };

    MatrixComparisonResult out;
    out.assoc_table =
        compute_growth<AlgebraElement>(GrowthTable::Kind::Assoc, assoc_gens, assoc_mul, n_max).table;

    // Commutators of the associative generators; each spends two generator
    // degrees, so the Lie side is filtered by the same total degree as the
    // associative side and the row-by-row comparison is meaningful.
    std::vector<WeightedGen<AlgebraElement>> lie_gens;
    for (std::size_t i = 0; i < assoc_gens.size(); ++i)
        for (std::size_t j = i + 1; j < assoc_gens.size(); ++j)
            lie_gens.push_back({c.commutator(assoc_gens[i].elem, assoc_gens[j].elem), 2});
    out.lie_table =
        compute_growth<AlgebraElement>(GrowthTable::Kind::Lie, lie_gens, lie_mul, n_max).table;

    CheckResult check{"cc-growth-comparison", true, ""};
    for (int n = 1; n <= n_max; ++n) {
        if (out.lie_table.at(n) > out.assoc_table.at(n)) {
            check.pass = false;
            check.witness = "Lie dim " + std::to_string(out.lie_table.at(n)) +
                            " exceeds associative dim " + std::to_string(out.assoc_table.at(n)) +
                            " at n = " + std::to_string(n);
            break;
        }
    }
    out.report.add(std::move(check));
    return out;
}

PipelineResult pipeline_growth(const AlgebraPtr& enveloping, int n_max) {
    if (enveloping->kind() != BaseAlgebra::Kind::Enveloping)
        throw PreconditionError("pipeline needs an enveloping algebra");
    const auto& env = static_cast<const EnvelopingAlgebra&>(*enveloping);
    const std::uint32_t d = env.generators();

    std::vector<AlgebraElement> gens;
    for (std::uint32_t i = 0; i < d; ++i) {
        std::vector<std::uint32_t> exps(d, 0);
        exps[i] = 1;
        gens.push_back(AlgebraElement::term(BasisIndex::pbw(std::move(exps)),
                                            Scalar::one(env.field())));
    }

    PipelineResult out;

    std::vector<AlgebraElement> u_gens = gens;
    u_gens.insert(u_gens.begin(), env.one());
    std::vector<WeightedGen<AlgebraElement>> wgens;
    for (const auto& g : u_gens) wgens.push_back({g, 1});
    out.u_table = compute_growth<AlgebraElement>(
                      GrowthTable::Kind::Assoc, wgens,
                      [&env](const AlgebraElement& x, const AlgebraElement& y) { return env.mul(x, y); },
                      n_max)
                      .table;

    const EmbeddingScenario scenario(enveloping, gens, n_max);
    GrowthBoundResult bound = verify_growth_bound(scenario);
    out.lemma_base = std::move(bound.base_table);
    out.lemma_banded = std::move(bound.banded_table);
    out.report.merge(bound.report);

    MatrixComparisonResult mc = matrix_commutator_comparison(enveloping, u_gens, n_max);
    out.cc_assoc = std::move(mc.assoc_table);
    out.cc_lie = std::move(mc.lie_table);
    out.report.merge(mc.report);

    return out;
}

} // namespace bandgrowth
