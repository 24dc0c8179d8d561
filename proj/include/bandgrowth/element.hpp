#pragma once

#include <map>

#include "bandgrowth/basis_index.hpp"
#include "bandgrowth/scalar.hpp"

namespace bandgrowth {

/// Finitely supported Scalar-valued map over basis indices, kept in
/// canonical sparse form: no stored coefficient is zero.
class AlgebraElement {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }

    static AlgebraElement term(BasisIndex idx, Scalar c) {
        AlgebraElement e;
        e.add_term(std::move(idx), std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }

    /// Coefficient at idx; zero scalars are never stored, so absence means
    /// the caller supplies its own zero.
    const Scalar* coefficient(const BasisIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(BasisIndex idx, Scalar c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(idx), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        r += o;
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r;
        for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const { return *this + (-o); }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this += (-o); }

    AlgebraElement scaled(const Scalar& c) const {
        AlgebraElement r;
        if (c.is_zero()) return r;
        for (const auto& [idx, v] : terms_) r.terms_.emplace(idx, c * v);
        return r;
    }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

private:
    Terms terms_;
};

} // namespace bandgrowth
