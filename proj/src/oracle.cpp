#include "bandgrowth/oracle.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace bandgrowth {

Scalar random_scalar(const FieldSpec& field, Rng& rng) {
    if (field.is_rational())
        return Scalar::rational(rng.uniform(-4, 4), rng.uniform(1, 3));
    return Scalar::residue(rng.next_u64() % field.modulus(), field);
}

AlgebraElement random_element(const FieldSpec& field, Rng& rng,
                              std::span<const BasisIndex> candidates, int max_terms) {
    AlgebraElement e;
    if (candidates.empty()) return e;
    const int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        const auto& idx = candidates[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1))];
        e.add_term(idx, random_scalar(field, rng));
    }
    return e;
}

BandedElement random_banded(const FieldSpec& field, Rng& rng,
                            std::span<const BasisIndex> candidates,
                            const RandomBandedParams& params) {
    BandedElement out;
    const int bands = static_cast<int>(rng.uniform(0, params.max_bands));
    for (int i = 0; i < bands; ++i)
        out.add_band(rng.uniform(-params.max_offset, params.max_offset),
                     random_element(field, rng, candidates, params.max_terms));
    const int cells = static_cast<int>(rng.uniform(0, params.max_cells));
    for (int i = 0; i < cells; ++i)
        out.add_cell(CellKey{rng.uniform(1, params.max_cell), rng.uniform(1, params.max_cell)},
                     random_element(field, rng, candidates, params.max_terms));
    return out;
}

std::vector<std::vector<AlgebraElement>> window_product(
    const BaseAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& a,
    const std::vector<std::vector<AlgebraElement>>& b, std::int64_t window) {
    const std::size_t w = static_cast<std::size_t>(window);
    const std::size_t inner = a.size();
    std::vector<std::vector<AlgebraElement>> out(w, std::vector<AlgebraElement>(w));
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t t = 0; t < inner; ++t)
                out[i][j] += alg.mul(a[i][t], b[t][j]);
    return out;
}

std::string window_str(const BaseAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? ", " : "") << alg.element_str(row[j]);
        os << "]\n";
    }
    return os.str();
}

bool truncation_check(const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y,
                      std::int64_t window, std::int64_t truncation, std::string* detail) {
    if (window < 1) throw PreconditionError("oracle window must be >= 1");
    const std::int64_t required =
        std::max({window + x.max_abs_offset() + y.max_abs_offset(), x.max_cell_col(),
                  y.max_cell_row(), window});
    if (truncation < required)
        throw PreconditionError("oracle truncation " + std::to_string(truncation) +
                                " too small: need >= " + std::to_string(required));

    const auto direct = truncate(mul_banded(alg, x, y), window);
    const auto windowed = window_product(alg, truncate(x, truncation), truncate(y, truncation), window);
    if (direct == windowed) return true;
    if (detail) {
        std::ostringstream os;
        os << "x = " << banded_str(alg, x) << "\n"
           << "y = " << banded_str(alg, y) << "\n"
           << "truncate(mul_banded(x,y), " << window << "):\n"
           << window_str(alg, direct) << "window(truncate(x)*truncate(y), " << window << "):\n"
           << window_str(alg, windowed);
        *detail = os.str();
    }
    return false;
}

OracleOutcome run_truncation_oracle(const BaseAlgebra& alg, const OracleParams& params,
                                    int threads) {
    if (params.trials < 1) throw PreconditionError("oracle needs trials >= 1");
    const auto candidates = alg.enumerate_basis(params.max_degree);

    auto run_trial = [&](int trial, std::string* detail) {
        Rng rng(params.seed + static_cast<std::uint64_t>(trial));
        const BandedElement x = random_banded(alg.field(), rng, candidates, params.banded);
        const BandedElement y = random_banded(alg.field(), rng, candidates, params.banded);
        return truncation_check(alg, x, y, params.window, params.truncation, detail);
    };

    OracleOutcome outcome;
    if (threads <= 1) {
        for (int t = 0; t < params.trials; ++t) {
            std::string detail;
            if (!run_trial(t, &detail)) {
                outcome.ok = false;
                outcome.failed_trial = t;
                outcome.detail = std::move(detail);
                break;
            }
        }
        return outcome;
    }

    // Deterministic regardless of scheduling: per-trial generators, first
    // failing trial index reported.
    std::vector<std::future<std::pair<int, std::string>>> futures;
    const int per = (params.trials + threads - 1) / threads;
    for (int c = 0; c < threads; ++c) {
        const int lo = c * per, hi = std::min(params.trials, (c + 1) * per);
        futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
            for (int t = lo; t < hi; ++t) {
                std::string detail;
                if (!run_trial(t, &detail)) return std::make_pair(t, detail);
            }
            return std::make_pair(-1, std::string());
        }));
    }
    for (auto& f : futures) {
        auto [failed, detail] = f.get();
        if (failed >= 0 && (outcome.ok || failed < outcome.failed_trial)) {
            outcome.ok = false;
            outcome.failed_trial = failed;
            outcome.detail = std::move(detail);
        }
    }
    return outcome;
}

} // namespace bandgrowth
