#pragma once

#include <map>

#include "bandgrowth/coordinates.hpp"

namespace bandgrowth {

/// Incremental exact row reduction. Stored rows are fully reduced: each
/// row's leading coordinate is its pivot, pivot values are normalized to 1,
/// and no row holds a nonzero value at another row's pivot. Pivot order is
/// the CoordinateKey order, so identical insertion sequences produce
/// identical bases.
class SpanBasis {
public:
    std::size_t dimension() const { return rows_.size(); }

    /// Residual of v against the stored rows; zero iff v is in the span.
    SparseVec reduce(SparseVec v) const;

    /// Adds v to the span. Returns whether the dimension grew.
    bool insert(SparseVec v);

    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::vector<SparseVec> rows_;
    std::map<CoordinateKey, std::size_t> pivots_;
};

} // namespace bandgrowth
