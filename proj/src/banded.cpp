#include "bandgrowth/banded.hpp"

#include <algorithm>

namespace bandgrowth {

BandedElement BandedElement::cell(std::int64_t i, std::int64_t j, AlgebraElement a) {
    if (i < 1 || j < 1)
        throw IndexError("matrix positions are 1-indexed: (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    BandedElement e;
    if (!a.is_zero()) e.cells_.emplace(CellKey{i, j}, std::move(a));
    return e;
}

BandedElement BandedElement::band(std::int64_t k, AlgebraElement a) {
    BandedElement e;
    if (!a.is_zero()) e.bands_.emplace(k, std::move(a));
    return e;
}

BandedElement BandedElement::canonicalize(Cells cells, Bands bands) {
    BandedElement e;
    for (auto& [key, a] : cells) {
        if (key.row < 1 || key.col < 1) throw IndexError("matrix positions are 1-indexed");
        if (!a.is_zero()) e.cells_.emplace(key, std::move(a));
    }
    for (auto& [k, a] : bands)
        if (!a.is_zero()) e.bands_.emplace(k, std::move(a));
    return e;
}

void BandedElement::add_cell(const CellKey& k, const AlgebraElement& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = cells_.emplace(k, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero()) cells_.erase(it);
    }
}

void BandedElement::add_band(std::int64_t k, const AlgebraElement& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = bands_.emplace(k, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero()) bands_.erase(it);
    }
}

BandedElement BandedElement::operator+(const BandedElement& o) const {
    BandedElement r = *this;
    for (const auto& [k, a] : o.cells_) r.add_cell(k, a);
    for (const auto& [k, a] : o.bands_) r.add_band(k, a);
    return r;
}

BandedElement BandedElement::operator-() const {
    BandedElement r;
    for (const auto& [k, a] : cells_) r.cells_.emplace(k, -a);
    for (const auto& [k, a] : bands_) r.bands_.emplace(k, -a);
    return r;
}

BandedElement BandedElement::scaled(const Scalar& c) const {
    BandedElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, a] : cells_) r.add_cell(k, a.scaled(c));
    for (const auto& [k, a] : bands_) r.add_band(k, a.scaled(c));
    return r;
}

std::int64_t BandedElement::max_abs_offset() const {
    std::int64_t m = 0;
    for (const auto& [k, a] : bands_) {
        (void)a;
        m = std::max(m, k < 0 ? -k : k);
    }
    return m;
}

std::int64_t BandedElement::max_cell_row() const {
    std::int64_t m = 0;
    for (const auto& [k, a] : cells_) {
        (void)a;
        m = std::max(m, k.row);
    }
    return m;
}

std::int64_t BandedElement::max_cell_col() const {
    std::int64_t m = 0;
    for (const auto& [k, a] : cells_) {
        (void)a;
        m = std::max(m, k.col);
    }
    return m;
}

namespace {

BandedElement mul_banded_impl(const BaseAlgebra& alg, const BandedElement& x,
                              const BandedElement& y, bool corrections) {
    BandedElement out;

    // band x band. Writing p = k1, q = k2 for the signed offsets: the
    // product lands on diagonal k1 + k2 except for the lower-times-upper
    // order (k1 < 0 < k2), which misses the first few positions of that
    // diagonal and needs matrix-unit corrections:
    //   q' = -k1, p' = k2 (both > 0):
    //     p' >= q':  E_{p'-q'}(ab) - sum_{i=1..q'} e_{i, i+p'-q'}(ab)
    //     p' <  q':  E_{p'-q'}(ab) - sum_{i=1..p'} e_{i+q'-p', i}(ab)
    for (const auto& [k1, a] : x.bands()) {
        for (const auto& [k2, b] : y.bands()) {
            const AlgebraElement ab = alg.mul(a, b);
            if (ab.is_zero()) continue;
            out.add_band(k1 + k2, ab);
            if (corrections && k1 < 0 && k2 > 0) {
                const std::int64_t q = -k1, p = k2;
                const AlgebraElement neg = -ab;
                if (p >= q) {
                    for (std::int64_t i = 1; i <= q; ++i)
                        out.add_cell(CellKey{i, i + p - q}, neg);
                } else {
                    for (std::int64_t i = 1; i <= p; ++i)
                        out.add_cell(CellKey{i + q - p, i}, neg);
                }
            }
        }
    }

    // cell x band: e_{i,j}(a) E_k(b) = e_{i,j+k}(ab) when j+k >= 1, else 0.
    for (const auto& [key, a] : x.cells()) {
        for (const auto& [k, b] : y.bands()) {
            if (key.col + k < 1) continue;
            out.add_cell(CellKey{key.row, key.col + k}, alg.mul(a, b));
        }
    }

    // band x cell: E_k(a) e_{i,j}(b) = e_{i-k,j}(ab) when i-k >= 1, else 0.
    for (const auto& [k, a] : x.bands()) {
        for (const auto& [key, b] : y.cells()) {
            if (key.row - k < 1) continue;
            out.add_cell(CellKey{key.row - k, key.col}, alg.mul(a, b));
        }
    }

    // cell x cell: e_{i,j}(a) e_{k,l}(b) = [j == k] e_{i,l}(ab).
    for (const auto& [k1, a] : x.cells()) {
        for (const auto& [k2, b] : y.cells()) {
            if (k1.col != k2.row) continue;
            out.add_cell(CellKey{k1.row, k2.col}, alg.mul(a, b));
        }
    }

    return out;
}

} // namespace

BandedElement mul_banded(const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y) {
    return mul_banded_impl(alg, x, y, true);
}

BandedElement mul_banded_drop_corrections(const BaseAlgebra& alg, const BandedElement& x,
                                          const BandedElement& y) {
    return mul_banded_impl(alg, x, y, false);
}

BandedElement bracket(const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y) {
    return mul_banded(alg, x, y) - mul_banded(alg, y, x);
}

std::vector<std::vector<AlgebraElement>> truncate(const BandedElement& x, std::int64_t m) {
    if (m < 1) throw PreconditionError("truncation size must be >= 1");
    std::vector<std::vector<AlgebraElement>> out(
        static_cast<std::size_t>(m), std::vector<AlgebraElement>(static_cast<std::size_t>(m)));
    for (std::int64_t i = 1; i <= m; ++i) {
        for (std::int64_t j = 1; j <= m; ++j) {
            AlgebraElement& entry = out[i - 1][j - 1];
            auto cit = x.cells().find(CellKey{i, j});
            if (cit != x.cells().end()) entry += cit->second;
            auto bit = x.bands().find(j - i);
            if (bit != x.bands().end()) entry += bit->second;
        }
    }
    return out;
}

SparseVec coordinates(const BandedElement& x) {
    SparseVec v;
    for (const auto& [key, a] : x.cells())
        for (const auto& [idx, c] : a.terms()) v.add(CoordinateKey::cell(key.row, key.col, idx), c);
    for (const auto& [k, a] : x.bands())
        for (const auto& [idx, c] : a.terms()) v.add(CoordinateKey::band(k, idx), c);
    return v;
}

std::string banded_str(const BaseAlgebra& alg, const BandedElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    for (const auto& [k, a] : x.bands())
        append("E(" + std::to_string(k) + "){" + alg.element_str(a) + "}");
    for (const auto& [key, a] : x.cells())
        append("e(" + std::to_string(key.row) + "," + std::to_string(key.col) + "){" +
               alg.element_str(a) + "}");
    return out;
}

} // namespace bandgrowth
