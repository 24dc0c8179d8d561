#pragma once

#include <compare>
#include <map>

#include "bandgrowth/algebra.hpp"
#include "bandgrowth/coordinates.hpp"

namespace bandgrowth {

/// 1-indexed matrix position.
struct CellKey {
    std::int64_t row;
    std::int64_t col;
    auto operator<=>(const CellKey&) const = default;
};

/// Element of the subalgebra of column-finite N x N matrices over a base
/// algebra generated by bands and matrix units, in canonical form: finitely
/// many cell deviations plus finitely many full diagonals.
///
/// Semantics: sum of e_{i,j}(cells[i,j]) over cells plus sum of
/// E_k(bands[k]) over bands, where E_k(a) has the entry a at every valid
/// position of diagonal k (columns j = i + k). A nonzero band has infinitely
/// many nonzero entries, so no cell sum can equal one: the representation is
/// unique once zero values are dropped, and coordinates() below is linear.
class BandedElement {
public:
    using Cells = std::map<CellKey, AlgebraElement>;
    using Bands = std::map<std::int64_t, AlgebraElement>;

    BandedElement() = default;

    static BandedElement zero() { return {}; }

    /// e_{i,j}(a); rows and columns start at 1.
    static BandedElement cell(std::int64_t i, std::int64_t j, AlgebraElement a);

    /// E_k(a), any integer offset k.
    static BandedElement band(std::int64_t k, AlgebraElement a);

    /// Canonical element from arbitrary finite part maps (zeros dropped).
    static BandedElement canonicalize(Cells cells, Bands bands);

    const Cells& cells() const { return cells_; }
    const Bands& bands() const { return bands_; }

    bool is_zero() const { return cells_.empty() && bands_.empty(); }

    // The linear operations merge coefficients coefficientwise (scalars of
    // different fields throw); membership of every coefficient in one base
    // algebra is enforced by the operations that take the algebra.
    void add_cell(const CellKey& k, const AlgebraElement& a);
    void add_band(std::int64_t k, const AlgebraElement& a);

    BandedElement operator+(const BandedElement& o) const;
    BandedElement operator-() const;
    BandedElement operator-(const BandedElement& o) const { return *this + (-o); }
    BandedElement& operator+=(const BandedElement& o) { return *this = *this + o; }
    BandedElement scaled(const Scalar& c) const;

    bool operator==(const BandedElement& o) const {
        return cells_ == o.cells_ && bands_ == o.bands_;
    }
    bool operator!=(const BandedElement& o) const { return !(*this == o); }

    std::int64_t max_abs_offset() const;
    std::int64_t max_cell_row() const;
    std::int64_t max_cell_col() const;

private:
    Cells cells_;
    Bands bands_;
};

/// Exact product via the closed band/cell rules (with the finite matrix-unit
/// corrections arising for lower-band times upper-band).
BandedElement mul_banded(const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y);

/// Test hook: the same expansion with the corrections dropped, i.e. a wrong
/// product, for exercising failure paths end to end.
BandedElement mul_banded_drop_corrections(const BaseAlgebra& alg, const BandedElement& x,
                                          const BandedElement& y);

/// xy - yx.
BandedElement bracket(const BaseAlgebra& alg, const BandedElement& x, const BandedElement& y);

/// Top-left m x m window; entry (i,j) = cells[i,j] + bands[j-i].
std::vector<std::vector<AlgebraElement>> truncate(const BandedElement& x, std::int64_t m);

/// One Band(k, index) coordinate per band term and one Cell(i, j, index) per
/// cell term; linear and injective on canonical elements.
SparseVec coordinates(const BandedElement& x);

std::string banded_str(const BaseAlgebra& alg, const BandedElement& x);

} // namespace bandgrowth
