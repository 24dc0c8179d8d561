#pragma once

#include "bandgrowth/banded.hpp"
#include "bandgrowth/growth.hpp"
#include "bandgrowth/report.hpp"

namespace bandgrowth {

/// The embedding setup: a unital base algebra A, chosen elements a_1..a_m,
/// the subspace V spanned by {a_1..a_m, 1}, and the banded generator set
/// W = {E_1(a_1), ..., E_1(a_m), E_-1(1)}.
struct EmbeddingScenario {
    AlgebraPtr base;
    std::vector<AlgebraElement> elems;
    int n_max = 6;

    EmbeddingScenario(AlgebraPtr base_, std::vector<AlgebraElement> elems_, int n_max_);

    /// {a_1..a_m, 1}: the generating set of V in A.
    std::vector<AlgebraElement> base_generators() const;
};

/// Injectable product, so the failure paths can be exercised with a broken
/// multiplication. Defaults to mul_banded everywhere.
using BandedMul =
    std::function<BandedElement(const BaseAlgebra&, const BandedElement&, const BandedElement&)>;

BandedMul standard_banded_mul();

/// Test hook: mul_banded without the lower-times-upper band corrections.
BandedMul defective_banded_mul();

/// W as banded elements, generator order a_1..a_m then E_-1(1).
std::vector<BandedElement> build_generators(const EmbeddingScenario& scenario);

/// a -> e_{1,1}(a).
BandedElement phi(const AlgebraElement& a);

/// Randomized check that phi is an injective algebra embedding on V^n_max:
/// multiplicative, linear, and vanishing only at zero.
VerificationReport verify_phi(const EmbeddingScenario& scenario, int trials, std::uint64_t seed,
                              const BandedMul& mul = standard_banded_mul());

/// [E_1(a), E_-1(1)] = e_{1,1}(a) for every spanning element a of V^n_max,
/// so every phi-image is a commutator.
VerificationReport verify_commutator_image(const EmbeddingScenario& scenario,
                                           const BandedMul& mul = standard_banded_mul());

/// Exhaustive frontier check: every product formed while spanning W^n has
/// its cells inside [1,n] x [1,n], its band offsets inside [-n, n], and all
/// of its coefficients inside V^n. Violators are reported with the
/// generator word that produced them.
VerificationReport verify_inclusion(const EmbeddingScenario& scenario,
                                        const BandedMul& mul = standard_banded_mul());

struct GrowthBoundResult {
    VerificationReport report;
    GrowthTable base_table;   // g_A(V, n)
    GrowthTable banded_table; // g_B'(W, n), bound column (n^2+2n+1) * g_A(V,n)
};

/// Computes both growth tables and checks the dimension-count bound
/// g_B'(W,n) <= (n^2 + 2n + 1) * g_A(V,n) row by row.
GrowthBoundResult verify_growth_bound(const EmbeddingScenario& scenario,
                                      const BandedMul& mul = standard_banded_mul());

struct MatrixComparisonResult {
    VerificationReport report;
    GrowthTable assoc_table; // growth of M_2(base) from all lifted generators
    GrowthTable lie_table;   // bracket-generated subalgebra, commutator ambient,
                             // filtered by total degree in the same generators
};

/// The 2x2 stage: lifts base_gens into all four matrix positions of
/// C = M_2(base), takes all pairwise commutators of those lifts as Lie
/// generators (weight 2 in the generator filtration), and checks that the
/// Lie growth never exceeds the associative growth at the same degree.
MatrixComparisonResult matrix_commutator_comparison(const AlgebraPtr& base,
                                                    const std::vector<AlgebraElement>& base_gens,
                                                    int n_max);

struct PipelineResult {
    VerificationReport report;
    GrowthTable u_table;      // g_{U(L)} for V = span{1, generators}
    GrowthTable lemma_base;   // g_A over U(L)
    GrowthTable lemma_banded; // g_B' over U(L), with bound column
    GrowthTable cc_assoc;     // M_2(U(L)) associative growth
    GrowthTable cc_lie;       // commutator-generated Lie growth in M_2(U(L))
};

/// The full chain at one n_max: U(L) growth, the banded scenario over U(L)
/// with the Lie generators as the a_i, and the M_2 commutator comparison.
PipelineResult pipeline_growth(const AlgebraPtr& enveloping, int n_max);

} // namespace bandgrowth
