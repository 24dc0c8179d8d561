#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bandgrowth/element.hpp"

namespace bandgrowth {

/// Ambient coordinate for dimension counting: a base-algebra basis index,
/// a matrix cell holding one, or a band offset holding one.
///
/// Total order: Base < Cell < Band; lexicographic within a variant
/// ((row, col, index) resp. (offset, index)). As with BasisIndex the order
/// is realized by a precomputed byte key.
class CoordinateKey {
public:
    enum class Tag : std::uint8_t { Base = 0, Cell = 1, Band = 2 };

    static CoordinateKey base(BasisIndex idx) {
        return CoordinateKey(Tag::Base, 0, 0, std::move(idx));
    }
    static CoordinateKey cell(std::int64_t row, std::int64_t col, BasisIndex idx) {
        return CoordinateKey(Tag::Cell, row, col, std::move(idx));
    }
    static CoordinateKey band(std::int64_t offset, BasisIndex idx) {
        return CoordinateKey(Tag::Band, offset, 0, std::move(idx));
    }

    Tag tag() const { return tag_; }
    std::int64_t row() const { return a_; }
    std::int64_t col() const { return b_; }
    std::int64_t offset() const { return a_; }
    const BasisIndex& index() const { return idx_; }

    const std::string& sort_key() const { return key_; }

    bool operator<(const CoordinateKey& o) const { return key_ < o.key_; }
    bool operator==(const CoordinateKey& o) const { return key_ == o.key_; }
    bool operator!=(const CoordinateKey& o) const { return key_ != o.key_; }

private:
    CoordinateKey(Tag tag, std::int64_t a, std::int64_t b, BasisIndex idx)
        : tag_(tag), a_(a), b_(b), idx_(std::move(idx)) {
        key_.push_back(static_cast<char>(tag_));
        // positions/offsets stay far below 2^31 in practice; biased to keep
        // byte order == numeric order for negatives
        if (tag_ == Tag::Cell) {
            detail::append_u32_be(key_, static_cast<std::uint32_t>(a_));
            detail::append_u32_be(key_, static_cast<std::uint32_t>(b_));
        } else if (tag_ == Tag::Band) {
            detail::append_u32_be(key_, static_cast<std::uint32_t>(a_ + 0x80000000LL));
        }
        key_ += idx_.sort_key();
    }

    Tag tag_;
    std::int64_t a_;
    std::int64_t b_;
    BasisIndex idx_;
    std::string key_;
};

/// Sparse exact vector over CoordinateKey, entries sorted by key, no zeros.
class SparseVec {
public:
    using Entry = std::pair<CoordinateKey, Scalar>;

    SparseVec() = default;

    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    const Entry& leading() const { return entries_.front(); }

    const Scalar* at(const CoordinateKey& k) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const Entry& e, const CoordinateKey& key) { return e.first < key; });
        if (it == entries_.end() || !(it->first == k)) return nullptr;
        return &it->second;
    }

    /// Accumulate (keys may arrive in any order; zeros dropped).
    void add(const CoordinateKey& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const Entry& e, const CoordinateKey& key) { return e.first < key; });
        if (it != entries_.end() && it->first == k) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        } else {
            entries_.insert(it, {k, c});
        }
    }

    /// this + c * o, by linear merge.
    SparseVec add_scaled(const SparseVec& o, const Scalar& c) const {
        SparseVec out;
        out.entries_.reserve(entries_.size() + o.entries_.size());
        auto a = entries_.begin();
        auto b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                out.entries_.push_back(*a++);
            } else if (a == entries_.end() || b->first < a->first) {
                Scalar v = c * b->second;
                if (!v.is_zero()) out.entries_.emplace_back(b->first, std::move(v));
                ++b;
            } else {
                Scalar v = a->second + c * b->second;
                if (!v.is_zero()) out.entries_.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        return out;
    }

    SparseVec operator+(const SparseVec& o) const {
        if (o.is_zero()) return *this;
        return add_scaled(o, Scalar::one(o.entries_.front().second.field()));
    }

    SparseVec scaled(const Scalar& c) const {
        SparseVec out;
        if (c.is_zero()) return out;
        out.entries_.reserve(entries_.size());
        for (const auto& [k, v] : entries_) out.entries_.emplace_back(k, c * v);
        return out;
    }

    bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

/// Base-algebra elements as Base(...) coordinates; injective and linear.
inline SparseVec coordinates(const AlgebraElement& x) {
    SparseVec v;
    for (const auto& [idx, c] : x.terms()) v.add(CoordinateKey::base(idx), c);
    return v;
}

} // namespace bandgrowth
