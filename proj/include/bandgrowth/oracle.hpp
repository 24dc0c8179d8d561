#pragma once

#include "bandgrowth/banded.hpp"
#include "bandgrowth/rng.hpp"

namespace bandgrowth {

/// Random canonical element: up to max_terms draws from the candidate
/// indices with small random coefficients (collisions and zero draws shrink
/// the support).
Scalar random_scalar(const FieldSpec& field, Rng& rng);
AlgebraElement random_element(const FieldSpec& field, Rng& rng,
                              std::span<const BasisIndex> candidates, int max_terms);

struct RandomBandedParams {
    std::int64_t max_offset = 3; // band offsets drawn from [-max_offset, max_offset]
    std::int64_t max_cell = 4;   // cell positions drawn from [1, max_cell]^2
    int max_bands = 2;
    int max_cells = 2;
    int max_terms = 2; // support size of each coefficient
};

BandedElement random_banded(const FieldSpec& field, Rng& rng,
                            std::span<const BasisIndex> candidates,
                            const RandomBandedParams& params);

/// Plain dense product of two m x m windows over the base algebra.
std::vector<std::vector<AlgebraElement>> window_product(
    const BaseAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& a,
    const std::vector<std::vector<AlgebraElement>>& b, std::int64_t window);

/// Brute-force validation of one product: the window of truncate(xy) must
/// equal the windowed product of the input truncations. Truncating at
/// truncation >= window + max_abs_offset(x) + max_abs_offset(y) and
/// truncation >= max_cell_col(x), max_cell_row(y) suffices for agreement:
/// row i <= window of x reaches columns at most max(i + offsets, cell
/// columns), so no product term escapes the truncated sum. The precondition
/// is checked, not assumed.
bool truncation_check(const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y,
                      std::int64_t window, std::int64_t truncation, std::string* detail);

struct OracleParams {
    std::int64_t window = 8;
    std::int64_t truncation = 16;
    int trials = 500;
    std::uint64_t seed = 42;
    std::uint32_t max_degree = 2; // coefficient degree bound
    RandomBandedParams banded;
};

struct OracleOutcome {
    bool ok = true;
    int failed_trial = -1;
    std::string detail; // both matrices, when a trial disagrees
};

/// Runs seeded randomized truncation comparisons. Trial t draws from its own
/// generator seeded with seed + t, so the transcript does not depend on the
/// number of threads.
OracleOutcome run_truncation_oracle(const BaseAlgebra& alg, const OracleParams& params,
                                    int threads = 1);

std::string window_str(const BaseAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& m);

} // namespace bandgrowth
