#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>

#include "bandgrowth/span.hpp"

namespace bandgrowth {

/// g(V,n) for n = 1..n_max, with an optional integer bound column.
/// Dimensions are weakly increasing (V^1 <= V^2 <= ...).
struct GrowthTable {
    enum class Kind { Assoc, Lie };

    Kind kind = Kind::Assoc;
    std::vector<std::uint64_t> dims;   // dims[n-1] = g(n)
    std::vector<std::uint64_t> bounds; // empty, or parallel to dims

    int n_max() const { return static_cast<int>(dims.size()); }

    std::uint64_t at(int n) const {
        if (n < 1 || n > n_max())
            throw PreconditionError("growth table has no row n=" + std::to_string(n));
        return dims[static_cast<std::size_t>(n - 1)];
    }
};

/// CSV with a header row and plain integer fields: n,dim[,bound].
void write_growth_csv(std::ostream& os, const GrowthTable& table);

/// Smallest C <= c_max with f(n) <= C * g(C*n) for all n = 1..n_range, or
/// nothing. A finite-range witness only; never a proof of the asymptotic
/// order.
std::optional<std::uint32_t> asym_leq(const GrowthTable& f, const GrowthTable& g,
                                      std::uint32_t c_max, int n_range);

/// A generator together with its degree in the ambient filtration (1 for
/// plain growth; commutator generators in the matrix comparison weigh 2).
template <class Elem>
struct WeightedGen {
    Elem elem;
    int weight = 1;
};

/// A spanning element the engine kept because it grew the span: the element,
/// the level (total generator weight) at which it appeared, and its
/// derivation word (left-normed product of the listed generator indices).
template <class Elem>
struct KeptElement {
    Elem elem;
    int level = 0;
    std::vector<std::uint32_t> word;
};

template <class Elem>
struct GrowthResult {
    GrowthTable table;
    std::vector<KeptElement<Elem>> kept;
};

/// Observes every product the engine forms (generators included), before
/// span insertion. Used for exhaustive frontier checks.
template <class Elem>
using ProductVisitor = std::function<void(const Elem&, int level, const std::vector<std::uint32_t>& word)>;

/// Growth of the subalgebra generated by gens under an arbitrary bilinear
/// product, by the left-normed recurrence: each level extends the kept
/// spanning elements by one generator on the right. Products are bilinear,
/// so generators that do not grow the span are dropped as right multipliers;
/// the span of each level is unchanged by that.
///
/// table.dims[n-1] = dim span of all products of total weight <= n.
template <class Elem, class MulFn>
GrowthResult<Elem> compute_growth(GrowthTable::Kind kind, std::span<const WeightedGen<Elem>> gens,
                                  MulFn mul, int n_max,
                                  const ProductVisitor<Elem>& on_product = {}) {
    if (n_max < 1) throw PreconditionError("n_max must be >= 1");
    if (gens.empty()) throw PreconditionError("generator set must be nonempty");
    for (const auto& g : gens)
        if (g.weight < 1) throw PreconditionError("generator weight must be >= 1");

    GrowthResult<Elem> result;
    result.table.kind = kind;
    SpanBasis basis;
    std::vector<std::size_t> kept_gens; // indexes into result.kept that are generators

    for (int level = 1; level <= n_max; ++level) {
        // fresh generators of this weight first, then frontier extensions
        for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
            if (gens[gi].weight != level) continue;
            const std::vector<std::uint32_t> word{gi};
            if (on_product) on_product(gens[gi].elem, level, word);
            if (basis.insert(coordinates(gens[gi].elem))) {
                kept_gens.push_back(result.kept.size());
                result.kept.push_back({gens[gi].elem, level, word});
            }
        }
        const std::size_t kept_count = result.kept.size(); // freeze this level's frontier
        for (std::size_t ki = 0; ki < kept_count; ++ki) {
            for (std::size_t gk : kept_gens) {
                const std::uint32_t gi = result.kept[gk].word[0];
                if (result.kept[ki].level + gens[gi].weight != level) continue;
                Elem prod = mul(result.kept[ki].elem, gens[gi].elem);
                std::vector<std::uint32_t> word = result.kept[ki].word;
                word.push_back(gi);
                if (on_product) on_product(prod, level, word);
                if (basis.insert(coordinates(prod)))
                    result.kept.push_back({std::move(prod), level, std::move(word)});
            }
        }
        result.table.dims.push_back(basis.dimension());
    }

    for (std::size_t i = 1; i < result.table.dims.size(); ++i)
        if (result.table.dims[i] < result.table.dims[i - 1])
            throw std::logic_error("growth table not monotone"); // unreachable
    return result;
}

/// Definitional oracle: the span of every full-binary-tree product of every
/// generator sequence of length <= n. Exponential in n; test-scale only.
template <class Elem, class MulFn>
std::uint64_t brute_force_span(std::span<const Elem> gens, MulFn mul, int n, int cap = 6) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    if (n > cap)
        throw PreconditionError("brute-force span capped at n=" + std::to_string(cap) +
                                " (all bracketings grow as Catalan numbers)");
    std::vector<std::vector<Elem>> by_len(static_cast<std::size_t>(n) + 1);
    by_len[1].assign(gens.begin(), gens.end());
    for (int len = 2; len <= n; ++len)
        for (int split = 1; split < len; ++split)
            for (const Elem& a : by_len[split])
                for (const Elem& b : by_len[len - split])
                    by_len[len].push_back(mul(a, b));
    SpanBasis basis;
    for (int len = 1; len <= n; ++len)
        for (const Elem& e : by_len[len]) basis.insert(coordinates(e));
    return basis.dimension();
}

} // namespace bandgrowth
