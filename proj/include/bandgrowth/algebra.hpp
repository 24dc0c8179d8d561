#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bandgrowth/element.hpp"

namespace bandgrowth {

class BaseAlgebra;
using AlgebraPtr = std::shared_ptr<const BaseAlgebra>;

/// A basis-indexed algebra over an exact field: the basis is an effectively
/// enumerable index set and the product of two basis elements is a finite,
/// computable linear combination. Elements are canonical sparse maps.
class BaseAlgebra {
public:
    enum class Kind {
        StructureConstants,
        Polynomial,
        FreeAssociative,
        Enveloping,
        MatrixExtension,
    };

    virtual ~BaseAlgebra() = default;

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return field_; }

    virtual bool index_valid(const BasisIndex& idx) const = 0;

    /// Product of two basis elements, canonical.
    virtual AlgebraElement mul_basis(const BasisIndex& i, const BasisIndex& j) const = 0;

    /// Two-sided identity, or nullptr for algebras without one.
    virtual const AlgebraElement* unit() const = 0;

    virtual std::string index_name(const BasisIndex& idx) const = 0;
    virtual BasisIndex parse_index(const std::string& name) const = 0;

    /// All basis indices of degree <= max_degree, in index order.
    virtual std::vector<BasisIndex> enumerate_basis(std::uint32_t max_degree) const = 0;

    virtual std::string describe() const = 0;

    bool is_unital() const { return unit() != nullptr; }

    /// Identity element; throws PreconditionError when the algebra has none.
    AlgebraElement one() const;

    /// Bilinear extension of mul_basis. Indices foreign to this algebra are
    /// rejected (mixed-descriptor error).
    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;

    /// xy - yx.
    AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) const;

    void check_element(const AlgebraElement& x) const;

    std::string element_str(const AlgebraElement& x) const;

    /// Builds sum of (basis-name, num, den) terms; the config entry format.
    AlgebraElement element_from_triples(
        std::span<const std::tuple<std::string, std::int64_t, std::int64_t>> triples) const;

protected:
    BaseAlgebra(Kind kind, FieldSpec field) : kind_(kind), field_(std::move(field)) {}

    void require_valid(const BasisIndex& i, const BasisIndex& j) const {
        if (!index_valid(i) || !index_valid(j))
            throw IndexError("basis index not valid for " + describe());
    }

    Kind kind_;
    FieldSpec field_;
};

/// Commutative polynomial algebra F[x_1..x_k]; k = 0 yields F itself.
AlgebraPtr make_polynomial(FieldSpec field, std::uint32_t vars,
                           std::vector<std::string> names = {});

/// Free associative algebra on k generators (basis: all words).
AlgebraPtr make_free_associative(FieldSpec field, std::uint32_t gens,
                                 std::vector<std::string> names = {});

/// The 2x2 matrix algebra over a unital base.
AlgebraPtr matrix_extend(AlgebraPtr inner);

/// Finite-dimensional algebra from a structure-constant table. Products not
/// set are zero. A declared unit is checked against the table at build().
class StructureConstantsBuilder {
public:
    StructureConstantsBuilder(FieldSpec field, std::uint32_t dim);

    StructureConstantsBuilder& set_product(std::uint32_t i, std::uint32_t j,
                                           std::vector<std::pair<std::uint32_t, Scalar>> terms);
    StructureConstantsBuilder& set_unit(std::vector<std::pair<std::uint32_t, Scalar>> coeffs);
    StructureConstantsBuilder& set_names(std::vector<std::string> names);

    AlgebraPtr build() const;

private:
    FieldSpec field_;
    std::uint32_t dim_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, AlgebraElement> products_;
    std::optional<AlgebraElement> unit_;
    std::vector<std::string> names_;
};

/// Universal enveloping algebra of a Lie algebra given by bracket constants
/// on d generators. set_bracket(i, j, ...) also fixes [j,i] = -[i,j];
/// antisymmetry conflicts and Jacobi violations are rejected at build().
/// The PBW monomial order is the generator order, or `order` if given.
class EnvelopingBuilder {
public:
    EnvelopingBuilder(FieldSpec field, std::uint32_t dim);

    EnvelopingBuilder& set_bracket(std::uint32_t i, std::uint32_t j,
                                   std::vector<std::pair<std::uint32_t, Scalar>> terms);
    EnvelopingBuilder& set_names(std::vector<std::string> names);
    EnvelopingBuilder& set_order(std::vector<std::uint32_t> order);

    AlgebraPtr build() const;

private:
    FieldSpec field_;
    std::uint32_t dim_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<std::uint32_t, Scalar>>> brackets_;
    std::vector<std::string> names_;
    std::vector<std::uint32_t> order_;
};

/// Extends a non-unital structure-constant algebra by an adjoined identity
/// (new last slot). Existing slot numbers are preserved.
AlgebraPtr adjoin_unit(const AlgebraPtr& alg);

/// Access to enveloping-specific machinery (PBW straightening).
class EnvelopingAlgebra : public BaseAlgebra {
public:
    std::uint32_t generators() const { return dim_; }

    /// [x_i, x_j] as coefficients over the generators, in PBW order labels.
    const std::vector<std::pair<std::uint32_t, Scalar>>& bracket_gen(std::uint32_t i,
                                                                     std::uint32_t j) const;

    /// Rewrites an arbitrary word over the generators into the canonical
    /// linear combination of weakly increasing PBW monomials. Terminates:
    /// each rewrite x_j x_i -> x_i x_j + [x_j, x_i] (j > i) strictly
    /// reduces (length, inversion count) lexicographically.
    AlgebraElement straighten_word(std::span<const std::uint32_t> word) const;

    bool index_valid(const BasisIndex& idx) const override;
    AlgebraElement mul_basis(const BasisIndex& i, const BasisIndex& j) const override;
    const AlgebraElement* unit() const override { return &unit_; }
    std::string index_name(const BasisIndex& idx) const override;
    BasisIndex parse_index(const std::string& name) const override;
    std::vector<BasisIndex> enumerate_basis(std::uint32_t max_degree) const override;
    std::string describe() const override;

private:
    friend class EnvelopingBuilder;
    EnvelopingAlgebra(FieldSpec field, std::uint32_t dim,
                      std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> table,
                      std::vector<std::string> names);

    std::uint32_t dim_;
    // table_[i * dim_ + j] = [x_i, x_j], PBW-order labels
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> table_;
    std::vector<std::string> names_;
    AlgebraElement unit_;
};

/// Jacobi + antisymmetry validation for a bracket table over d generators;
/// bracket(i, j) returns [x_i, x_j] as generator coefficients.
void validate_lie_table(
    const FieldSpec& field, std::uint32_t dim,
    const std::function<std::vector<std::pair<std::uint32_t, Scalar>>(std::uint32_t, std::uint32_t)>& bracket);

/// Checks that a structure-constant algebra's table is a Lie bracket
/// (antisymmetric + Jacobi), so it can serve as a bracket ambient.
void validate_lie_structure(const BaseAlgebra& alg);

/// Default print names: x,y,z,w for small var counts, x1..xk otherwise.
std::vector<std::string> default_names(std::uint32_t count, const std::string& stem);

} // namespace bandgrowth
