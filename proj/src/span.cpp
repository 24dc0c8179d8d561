#include "bandgrowth/span.hpp"

namespace bandgrowth {

SparseVec SpanBasis::reduce(SparseVec v) const {
    // Forward sweep: stored rows only touch coordinates >= their pivot, so
    // entries before position i never reappear once passed.
    std::size_t i = 0;
    while (i < v.size()) {
        const auto& [key, value] = v.entries()[i];
        auto it = pivots_.find(key);
        if (it == pivots_.end()) {
            ++i;
            continue;
        }
        v = v.add_scaled(rows_[it->second], -value); // pivot value is 1
    }
    return v;
}

bool SpanBasis::insert(SparseVec v) {
    SparseVec r = reduce(std::move(v));
    if (r.is_zero()) return false;
    r = r.scaled(r.leading().second.inverse());
    const CoordinateKey pivot = r.leading().first;
    for (auto& row : rows_) {
        if (const Scalar* c = row.at(pivot)) row = row.add_scaled(r, -*c);
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

} // namespace bandgrowth
