#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bandgrowth/errors.hpp"

namespace bandgrowth {

namespace detail {
inline void append_u32_be(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}
} // namespace detail

/// Identifier of one basis element of a base algebra. Per algebra kind it
/// holds a slot number, an exponent vector, a word over generators, a PBW
/// exponent vector, or ((r,s), inner index) for the 2x2 matrix extension.
///
/// Total order: kind, then degree, then lexicographic within the degree —
/// words letter by letter, monomials by their expanded word (so x < y and
/// x^2 < x*y at equal degree), matrix cells by (r, s, inner). Implemented
/// as a byte-wise comparison of a precomputed order-preserving key, so map
/// operations stay cheap.
class BasisIndex {
public:
    enum class Kind : std::uint8_t {
        Slot = 0,
        Exponents = 1,
        Word = 2,
        Pbw = 3,
        MatrixCell = 4,
    };

    static BasisIndex slot(std::uint32_t i) {
        return BasisIndex(Kind::Slot, {i}, nullptr, 0, 0);
    }
    static BasisIndex exponents(std::vector<std::uint32_t> e) {
        return BasisIndex(Kind::Exponents, std::move(e), nullptr, 0, 0);
    }
    static BasisIndex word(std::vector<std::uint32_t> letters) {
        return BasisIndex(Kind::Word, std::move(letters), nullptr, 0, 0);
    }
    static BasisIndex pbw(std::vector<std::uint32_t> e) {
        return BasisIndex(Kind::Pbw, std::move(e), nullptr, 0, 0);
    }
    static BasisIndex matrix_cell(int r, int s, BasisIndex inner) {
        if (r < 1 || r > 2 || s < 1 || s > 2)
            throw IndexError("matrix position out of {1,2}x{1,2}");
        return BasisIndex(Kind::MatrixCell, {static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s)},
                          std::make_shared<BasisIndex>(std::move(inner)), r, s);
    }

    Kind kind() const { return kind_; }
    const std::vector<std::uint32_t>& nums() const { return nums_; }

    int mat_row() const { return static_cast<int>(nums_[0]); }
    int mat_col() const { return static_cast<int>(nums_[1]); }
    const BasisIndex& inner() const { return *inner_; }

    std::uint32_t degree() const { return degree_; }

    const std::string& sort_key() const { return key_; }

    bool operator<(const BasisIndex& o) const { return key_ < o.key_; }
    bool operator==(const BasisIndex& o) const { return key_ == o.key_; }
    bool operator!=(const BasisIndex& o) const { return key_ != o.key_; }

private:
    BasisIndex(Kind kind, std::vector<std::uint32_t> nums,
               std::shared_ptr<const BasisIndex> inner, int, int)
        : kind_(kind), nums_(std::move(nums)), inner_(std::move(inner)) {
        switch (kind_) {
        case Kind::Slot:
            degree_ = 0;
            break;
        case Kind::Exponents:
        case Kind::Pbw: {
            std::uint64_t d = 0;
            for (auto e : nums_) d += e;
            degree_ = static_cast<std::uint32_t>(d);
            break;
        }
        case Kind::Word:
            degree_ = static_cast<std::uint32_t>(nums_.size());
            break;
        case Kind::MatrixCell:
            degree_ = inner_->degree();
            break;
        }
        key_.push_back(static_cast<char>(kind_));
        detail::append_u32_be(key_, degree_);
        if (kind_ == Kind::MatrixCell) {
            key_.push_back(static_cast<char>(nums_[0]));
            key_.push_back(static_cast<char>(nums_[1]));
            key_ += inner_->sort_key();
        } else if (kind_ == Kind::Exponents || kind_ == Kind::Pbw) {
            // complemented exponents: at equal degree, byte order then
            // matches the order of the expanded words (x^2 < x*y < y^2)
            for (auto v : nums_) detail::append_u32_be(key_, ~v);
        } else {
            for (auto v : nums_) detail::append_u32_be(key_, v);
        }
    }

    Kind kind_;
    std::vector<std::uint32_t> nums_;
    std::shared_ptr<const BasisIndex> inner_;
    std::uint32_t degree_ = 0;
    std::string key_;
};

} // namespace bandgrowth
