#include "bandgrowth/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace bandgrowth {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

void check_names(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (n.empty()) throw ValidationError("empty basis name");
        if (n == "1") throw ValidationError("basis name '1' is reserved for the unit");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ValidationError("basis name '" + n + "' has characters outside [A-Za-z0-9_]");
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw ValidationError("duplicate basis name '" + names[i] + "'");
}

std::uint32_t lookup_name(const std::vector<std::string>& names, const std::string& token) {
    auto it = std::find(names.begin(), names.end(), token);
    if (it == names.end()) throw IndexError("unknown basis name '" + token + "'");
    return static_cast<std::uint32_t>(it - names.begin());
}

// Parses "x^2*y" into (var, exponent) factors in written order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_factors(
    const std::vector<std::string>& names, const std::string& name) {
    const std::string s = trim(name);
    if (s.empty()) throw IndexError("empty basis name");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    if (s == "1") return factors;
    for (const auto& raw : split(s, '*')) {
        const std::string factor = trim(raw);
        auto caret = factor.find('^');
        std::string var = trim(caret == std::string::npos ? factor : factor.substr(0, caret));
        std::uint32_t exp = 1;
        if (caret != std::string::npos) {
            const std::string es = trim(factor.substr(caret + 1));
            try {
                const long v = std::stol(es);
                if (v < 0) throw std::out_of_range("");
                exp = static_cast<std::uint32_t>(v);
            } catch (const std::exception&) {
                throw IndexError("bad exponent '" + es + "' in '" + name + "'");
            }
        }
        factors.emplace_back(lookup_name(names, var), exp);
    }
    return factors;
}

std::string format_monomial(const std::vector<std::string>& names,
                            const std::vector<std::uint32_t>& exps) {
    std::string out;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
    }
    return out.empty() ? "1" : out;
}

// Exponent vectors of total degree <= max_degree, length vars.
void enumerate_exponents(std::uint32_t vars, std::uint32_t max_degree,
                         std::vector<std::uint32_t>& cur,
                         const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (cur.size() == vars) {
        emit(cur);
        return;
    }
    std::uint32_t used = 0;
    for (auto e : cur) used += e;
    for (std::uint32_t e = 0; e + used <= max_degree; ++e) {
        cur.push_back(e);
        enumerate_exponents(vars, max_degree, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::string> default_names(std::uint32_t count, const std::string& stem) {
    static const char* xyzw[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    if (stem == "x" && count <= 4) {
        for (std::uint32_t i = 0; i < count; ++i) names.emplace_back(xyzw[i]);
    } else {
        for (std::uint32_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(i + 1));
    }
    return names;
}

AlgebraElement BaseAlgebra::one() const {
    const AlgebraElement* u = unit();
    if (!u) throw PreconditionError("algebra has no unit: " + describe());
    return *u;
}

void BaseAlgebra::check_element(const AlgebraElement& x) const {
    for (const auto& [idx, c] : x.terms()) {
        if (!index_valid(idx))
            throw IndexError("basis index foreign to algebra " + describe());
        if (c.field() != field_)
            throw FieldMismatchError("element coefficients do not match the algebra field");
    }
}

AlgebraElement BaseAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    check_element(x);
    check_element(y);
    AlgebraElement r;
    for (const auto& [i, ci] : x.terms()) {
        for (const auto& [j, cj] : y.terms()) {
            const Scalar c = ci * cj;
            const AlgebraElement prod = mul_basis(i, j);
            for (const auto& [k, ck] : prod.terms()) r.add_term(k, c * ck);
        }
    }
    return r;
}

AlgebraElement BaseAlgebra::commutator(const AlgebraElement& x, const AlgebraElement& y) const {
    return mul(x, y) - mul(y, x);
}

std::string BaseAlgebra::element_str(const AlgebraElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : x.terms()) {
        const std::string name = index_name(idx);
        std::string term;
        if (name == "1")
            term = c.str();
        else if (c.is_one())
            term = name;
        else if ((-c).is_one())
            term = "-" + name;
        else
            term = c.str() + "*" + name;
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

AlgebraElement BaseAlgebra::element_from_triples(
    std::span<const std::tuple<std::string, std::int64_t, std::int64_t>> triples) const {
    AlgebraElement e;
    for (const auto& [name, num, den] : triples)
        e.add_term(parse_index(name), Scalar::fraction(field_, num, den));
    return e;
}

// ---------------------------------------------------------------------------
// Polynomial algebra

namespace {

class PolynomialAlgebra final : public BaseAlgebra {
public:
    PolynomialAlgebra(FieldSpec field, std::uint32_t vars, std::vector<std::string> names)
        : BaseAlgebra(Kind::Polynomial, std::move(field)), vars_(vars), names_(std::move(names)) {
        if (names_.empty()) names_ = default_names(vars_, "x");
        if (names_.size() != vars_) throw ValidationError("expected one name per variable");
        check_names(names_);
        unit_ = AlgebraElement::term(BasisIndex::exponents(std::vector<std::uint32_t>(vars_, 0)),
                                     Scalar::one(field_));
    }

    bool index_valid(const BasisIndex& idx) const override {
        return idx.kind() == BasisIndex::Kind::Exponents && idx.nums().size() == vars_;
    }

    AlgebraElement mul_basis(const BasisIndex& i, const BasisIndex& j) const override {
        require_valid(i, j);
        std::vector<std::uint32_t> e(vars_);
        for (std::uint32_t v = 0; v < vars_; ++v) e[v] = i.nums()[v] + j.nums()[v];
        return AlgebraElement::term(BasisIndex::exponents(std::move(e)), Scalar::one(field_));
    }

    const AlgebraElement* unit() const override { return &unit_; }

    std::string index_name(const BasisIndex& idx) const override {
        return format_monomial(names_, idx.nums());
    }

    BasisIndex parse_index(const std::string& name) const override {
        std::vector<std::uint32_t> e(vars_, 0);
        for (auto [v, exp] : parse_factors(names_, name)) e[v] += exp;
        return BasisIndex::exponents(std::move(e));
    }

    std::vector<BasisIndex> enumerate_basis(std::uint32_t max_degree) const override {
        std::vector<BasisIndex> out;
        std::vector<std::uint32_t> cur;
        enumerate_exponents(vars_, max_degree, cur,
                            [&](const std::vector<std::uint32_t>& e) { out.push_back(BasisIndex::exponents(e)); });
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string describe() const override {
        return "polynomial vars=" + std::to_string(vars_);
    }

private:
    std::uint32_t vars_;
    std::vector<std::string> names_;
    AlgebraElement unit_;
};

} // namespace

AlgebraPtr make_polynomial(FieldSpec field, std::uint32_t vars, std::vector<std::string> names) {
    return std::make_shared<PolynomialAlgebra>(std::move(field), vars, std::move(names));
}

// ---------------------------------------------------------------------------
// Free associative algebra

namespace {

class FreeAssociativeAlgebra final : public BaseAlgebra {
public:
    FreeAssociativeAlgebra(FieldSpec field, std::uint32_t gens, std::vector<std::string> names)
        : BaseAlgebra(Kind::FreeAssociative, std::move(field)), gens_(gens), names_(std::move(names)) {
        if (gens_ == 0) throw ValidationError("free algebra needs at least one generator");
        if (names_.empty()) names_ = default_names(gens_, "x");
        if (names_.size() != gens_) throw ValidationError("expected one name per generator");
        check_names(names_);
        unit_ = AlgebraElement::term(BasisIndex::word({}), Scalar::one(field_));
    }

    bool index_valid(const BasisIndex& idx) const override {
        if (idx.kind() != BasisIndex::Kind::Word) return false;
        for (auto l : idx.nums())
            if (l >= gens_) return false;
        return true;
    }

    AlgebraElement mul_basis(const BasisIndex& i, const BasisIndex& j) const override {
        require_valid(i, j);
        std::vector<std::uint32_t> w = i.nums();
        w.insert(w.end(), j.nums().begin(), j.nums().end());
        return AlgebraElement::term(BasisIndex::word(std::move(w)), Scalar::one(field_));
    }

    const AlgebraElement* unit() const override { return &unit_; }

    std::string index_name(const BasisIndex& idx) const override {
        if (idx.nums().empty()) return "1";
        std::string out;
        for (auto l : idx.nums()) {
            if (!out.empty()) out += "*";
            out += names_[l];
        }
        return out;
    }

    BasisIndex parse_index(const std::string& name) const override {
        std::vector<std::uint32_t> w;
        for (auto [v, exp] : parse_factors(names_, name))
            for (std::uint32_t r = 0; r < exp; ++r) w.push_back(v);
        return BasisIndex::word(std::move(w));
    }

    std::vector<BasisIndex> enumerate_basis(std::uint32_t max_degree) const override {
        std::vector<BasisIndex> out;
        std::vector<std::uint32_t> word;
        // words of length <= max_degree, shortest first
        std::function<void()> rec = [&]() {
            out.push_back(BasisIndex::word(word));
            if (word.size() == max_degree) return;
            for (std::uint32_t l = 0; l < gens_; ++l) {
                word.push_back(l);
                rec();
                word.pop_back();
            }
        };
        rec();
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string describe() const override {
        return "free gens=" + std::to_string(gens_);
    }

private:
    std::uint32_t gens_;
    std::vector<std::string> names_;
    AlgebraElement unit_;
};

} // namespace

AlgebraPtr make_free_associative(FieldSpec field, std::uint32_t gens, std::vector<std::string> names) {
    return std::make_shared<FreeAssociativeAlgebra>(std::move(field), gens, std::move(names));
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

class StructureConstantsAlgebra final : public BaseAlgebra {
public:
    StructureConstantsAlgebra(FieldSpec field, std::uint32_t dim, std::vector<AlgebraElement> table,
                              std::optional<AlgebraElement> unit, std::vector<std::string> names)
        : BaseAlgebra(Kind::StructureConstants, std::move(field)),
          dim_(dim),
          table_(std::move(table)),
          declared_unit_(std::move(unit)),
          names_(std::move(names)) {
        if (dim_ == 0) throw ValidationError("structure-constant algebra needs dimension >= 1");
        if (names_.empty()) names_ = default_names(dim_, "e");
        if (names_.size() != dim_) throw ValidationError("expected one name per basis slot");
        check_names(names_);
        for (const auto& entry : table_) check_element(entry);
        if (declared_unit_) {
            check_element(*declared_unit_);
            for (std::uint32_t i = 0; i < dim_; ++i) {
                const AlgebraElement ei = AlgebraElement::term(BasisIndex::slot(i), Scalar::one(field_));
                if (mul(*declared_unit_, ei) != ei || mul(ei, *declared_unit_) != ei)
                    throw ValidationError("declared unit fails 1*e = e*1 = e at slot " + std::to_string(i + 1));
            }
        }
    }

    bool index_valid(const BasisIndex& idx) const override {
        return idx.kind() == BasisIndex::Kind::Slot && idx.nums()[0] < dim_;
    }

    AlgebraElement mul_basis(const BasisIndex& i, const BasisIndex& j) const override {
        require_valid(i, j);
        return table_[i.nums()[0] * dim_ + j.nums()[0]];
    }

    const AlgebraElement* unit() const override {
        return declared_unit_ ? &*declared_unit_ : nullptr;
    }

    std::string index_name(const BasisIndex& idx) const override { return names_[idx.nums()[0]]; }

    BasisIndex parse_index(const std::string& name) const override {
        return BasisIndex::slot(lookup_name(names_, trim(name)));
    }

    std::vector<BasisIndex> enumerate_basis(std::uint32_t) const override {
        std::vector<BasisIndex> out;
        for (std::uint32_t i = 0; i < dim_; ++i) out.push_back(BasisIndex::slot(i));
        return out;
    }

    std::string describe() const override {
        return "structure_constants dim=" + std::to_string(dim_);
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::uint32_t dim_;
    std::vector<AlgebraElement> table_; // row-major d*d
    std::optional<AlgebraElement> declared_unit_;
    std::vector<std::string> names_;
};

} // namespace

StructureConstantsBuilder::StructureConstantsBuilder(FieldSpec field, std::uint32_t dim)
    : field_(std::move(field)), dim_(dim) {}

StructureConstantsBuilder& StructureConstantsBuilder::set_product(
    std::uint32_t i, std::uint32_t j, std::vector<std::pair<std::uint32_t, Scalar>> terms) {
    if (i >= dim_ || j >= dim_) throw IndexError("product slot out of range");
    AlgebraElement e;
    for (auto& [k, c] : terms) {
        if (k >= dim_) throw IndexError("product target slot out of range");
        e.add_term(BasisIndex::slot(k), c);
    }
    products_[{i, j}] = std::move(e);
    return *this;
}

StructureConstantsBuilder& StructureConstantsBuilder::set_unit(
    std::vector<std::pair<std::uint32_t, Scalar>> coeffs) {
    AlgebraElement e;
    for (auto& [k, c] : coeffs) {
        if (k >= dim_) throw IndexError("unit slot out of range");
        e.add_term(BasisIndex::slot(k), c);
    }
    unit_ = std::move(e);
    return *this;
}

StructureConstantsBuilder& StructureConstantsBuilder::set_names(std::vector<std::string> names) {
    names_ = std::move(names);
    return *this;
}

AlgebraPtr StructureConstantsBuilder::build() const {
    std::vector<AlgebraElement> table(static_cast<std::size_t>(dim_) * dim_);
    for (const auto& [key, e] : products_) table[key.first * dim_ + key.second] = e;
    return std::make_shared<StructureConstantsAlgebra>(field_, dim_, std::move(table), unit_, names_);
}

AlgebraPtr adjoin_unit(const AlgebraPtr& alg) {
    if (alg->kind() != BaseAlgebra::Kind::StructureConstants)
        throw PreconditionError("adjoin_unit applies to structure-constant algebras");
    if (alg->is_unital())
        throw PreconditionError("algebra already has a declared unit");
    const auto& sc = static_cast<const StructureConstantsAlgebra&>(*alg);
    const std::uint32_t d = static_cast<std::uint32_t>(sc.names().size());
    StructureConstantsBuilder b(alg->field(), d + 1);
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
            std::vector<std::pair<std::uint32_t, Scalar>> terms;
            const AlgebraElement prod = alg->mul_basis(BasisIndex::slot(i), BasisIndex::slot(j));
            for (const auto& [idx, c] : prod.terms()) terms.emplace_back(idx.nums()[0], c);
            b.set_product(i, j, std::move(terms));
        }
    }
    const Scalar one = Scalar::one(alg->field());
    for (std::uint32_t i = 0; i <= d; ++i) {
        b.set_product(d, i, {{i, one}});
        if (i < d) b.set_product(i, d, {{i, one}});
    }
    b.set_unit({{d, one}});
    std::vector<std::string> names = sc.names();
    std::string uname = "u";
    while (std::find(names.begin(), names.end(), uname) != names.end()) uname += "u";
    names.push_back(uname);
    b.set_names(std::move(names));
    return b.build();
}

// ---------------------------------------------------------------------------
// Lie validation

void validate_lie_table(
    const FieldSpec& field, std::uint32_t dim,
    const std::function<std::vector<std::pair<std::uint32_t, Scalar>>(std::uint32_t, std::uint32_t)>& bracket) {
    using Vec = std::map<std::uint32_t, Scalar>;
    auto as_vec = [](const std::vector<std::pair<std::uint32_t, Scalar>>& terms) {
        Vec v;
        for (const auto& [k, c] : terms) {
            if (c.is_zero()) continue;
            auto [it, fresh] = v.emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) v.erase(it);
            }
        }
        return v;
    };
    (void)field;
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (!as_vec(bracket(i, i)).empty())
            throw ValidationError("[x,x] != 0 at generator " + std::to_string(i + 1));
        for (std::uint32_t j = i + 1; j < dim; ++j) {
            Vec sum = as_vec(bracket(i, j));
            for (const auto& [k, c] : as_vec(bracket(j, i))) {
                auto [it, fresh] = sum.emplace(k, c);
                if (!fresh) {
                    it->second += c;
                    if (it->second.is_zero()) sum.erase(it);
                }
            }
            if (!sum.empty())
                throw ValidationError("bracket not antisymmetric at pair (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ")");
        }
    }
    auto bracket_vec = [&](const Vec& u, std::uint32_t k) {
        Vec out;
        for (const auto& [l, cl] : u) {
            for (const auto& [m, cm] : bracket(l, k)) {
                const Scalar c = cl * cm;
                if (c.is_zero()) continue;
                auto [it, fresh] = out.emplace(m, c);
                if (!fresh) {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        return out;
    };
    for (std::uint32_t i = 0; i < dim; ++i) {
        for (std::uint32_t j = i + 1; j < dim; ++j) {
            for (std::uint32_t k = j + 1; k < dim; ++k) {
                Vec total;
                auto acc = [&](const Vec& v) {
                    for (const auto& [m, c] : v) {
                        auto [it, fresh] = total.emplace(m, c);
                        if (!fresh) {
                            it->second += c;
                            if (it->second.is_zero()) total.erase(it);
                        }
                    }
                };
                acc(bracket_vec(as_vec(bracket(i, j)), k));
                acc(bracket_vec(as_vec(bracket(j, k)), i));
                acc(bracket_vec(as_vec(bracket(k, i)), j));
                if (!total.empty())
                    throw ValidationError("Jacobi identity fails at triple (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            }
        }
    }
}

void validate_lie_structure(const BaseAlgebra& alg) {
    if (alg.kind() != BaseAlgebra::Kind::StructureConstants)
        throw PreconditionError("Lie bracket ambient requires a structure-constant table");
    const std::uint32_t d =
        static_cast<std::uint32_t>(alg.enumerate_basis(0).size());
    validate_lie_table(alg.field(), d, [&](std::uint32_t i, std::uint32_t j) {
        std::vector<std::pair<std::uint32_t, Scalar>> terms;
        const AlgebraElement prod = alg.mul_basis(BasisIndex::slot(i), BasisIndex::slot(j));
        for (const auto& [idx, c] : prod.terms()) terms.emplace_back(idx.nums()[0], c);
        return terms;
    });
}

// ---------------------------------------------------------------------------
// Universal enveloping algebra

EnvelopingAlgebra::EnvelopingAlgebra(FieldSpec field, std::uint32_t dim,
                                     std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> table,
                                     std::vector<std::string> names)
    : BaseAlgebra(Kind::Enveloping, std::move(field)),
      dim_(dim),
      table_(std::move(table)),
      names_(std::move(names)) {
    unit_ = AlgebraElement::term(BasisIndex::pbw(std::vector<std::uint32_t>(dim_, 0)),
                                 Scalar::one(field_));
}

const std::vector<std::pair<std::uint32_t, Scalar>>& EnvelopingAlgebra::bracket_gen(
    std::uint32_t i, std::uint32_t j) const {
    if (i >= dim_ || j >= dim_) throw IndexError("generator out of range");
    return table_[i * dim_ + j];
}

AlgebraElement EnvelopingAlgebra::straighten_word(std::span<const std::uint32_t> word) const {
    for (auto g : word)
        if (g >= dim_) throw IndexError("generator out of range in PBW word");
    AlgebraElement result;
    std::vector<std::pair<std::vector<std::uint32_t>, Scalar>> work;
    work.emplace_back(std::vector<std::uint32_t>(word.begin(), word.end()), Scalar::one(field_));
    while (!work.empty()) {
        auto [w, coeff] = std::move(work.back());
        work.pop_back();
        std::size_t t = 0;
        while (t + 1 < w.size() && w[t] <= w[t + 1]) ++t;
        if (t + 1 >= w.size()) {
            std::vector<std::uint32_t> exps(dim_, 0);
            for (auto g : w) ++exps[g];
            result.add_term(BasisIndex::pbw(std::move(exps)), coeff);
            continue;
        }
        // x_j x_i -> x_i x_j + [x_j, x_i], j = w[t] > i = w[t+1]
        const std::uint32_t j = w[t], i = w[t + 1];
        std::vector<std::uint32_t> swapped = w;
        std::swap(swapped[t], swapped[t + 1]);
        for (const auto& [k, c] : table_[j * dim_ + i]) {
            std::vector<std::uint32_t> contracted;
            contracted.reserve(w.size() - 1);
            contracted.insert(contracted.end(), w.begin(), w.begin() + t);
            contracted.push_back(k);
            contracted.insert(contracted.end(), w.begin() + t + 2, w.end());
            work.emplace_back(std::move(contracted), coeff * c);
        }
        work.emplace_back(std::move(swapped), std::move(coeff));
    }
    return result;
}

bool EnvelopingAlgebra::index_valid(const BasisIndex& idx) const {
    return idx.kind() == BasisIndex::Kind::Pbw && idx.nums().size() == dim_;
}

AlgebraElement EnvelopingAlgebra::mul_basis(const BasisIndex& i, const BasisIndex& j) const {
    require_valid(i, j);
    std::vector<std::uint32_t> word;
    word.reserve(i.degree() + j.degree());
    for (std::uint32_t g = 0; g < dim_; ++g)
        word.insert(word.end(), i.nums()[g], g);
    for (std::uint32_t g = 0; g < dim_; ++g)
        word.insert(word.end(), j.nums()[g], g);
    return straighten_word(word);
}

std::string EnvelopingAlgebra::index_name(const BasisIndex& idx) const {
    return format_monomial(names_, idx.nums());
}

BasisIndex EnvelopingAlgebra::parse_index(const std::string& name) const {
    std::vector<std::uint32_t> e(dim_, 0);
    for (auto [v, exp] : parse_factors(names_, name)) e[v] += exp;
    return BasisIndex::pbw(std::move(e));
}

std::vector<BasisIndex> EnvelopingAlgebra::enumerate_basis(std::uint32_t max_degree) const {
    std::vector<BasisIndex> out;
    std::vector<std::uint32_t> cur;
    enumerate_exponents(dim_, max_degree, cur,
                        [&](const std::vector<std::uint32_t>& e) { out.push_back(BasisIndex::pbw(e)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string EnvelopingAlgebra::describe() const {
    return "enveloping dim=" + std::to_string(dim_);
}

EnvelopingBuilder::EnvelopingBuilder(FieldSpec field, std::uint32_t dim)
    : field_(std::move(field)), dim_(dim) {}

EnvelopingBuilder& EnvelopingBuilder::set_bracket(std::uint32_t i, std::uint32_t j,
                                                  std::vector<std::pair<std::uint32_t, Scalar>> terms) {
    if (i >= dim_ || j >= dim_) throw IndexError("bracket generator out of range");
    for (const auto& [k, c] : terms) {
        (void)c;
        if (k >= dim_) throw IndexError("bracket target generator out of range");
    }
    brackets_[{i, j}] = std::move(terms);
    return *this;
}

EnvelopingBuilder& EnvelopingBuilder::set_names(std::vector<std::string> names) {
    names_ = std::move(names);
    return *this;
}

EnvelopingBuilder& EnvelopingBuilder::set_order(std::vector<std::uint32_t> order) {
    order_ = std::move(order);
    return *this;
}

AlgebraPtr EnvelopingBuilder::build() const {
    if (dim_ == 0) throw ValidationError("enveloping algebra needs at least one generator");
    std::vector<std::string> names = names_.empty() ? default_names(dim_, "g") : names_;
    if (names.size() != dim_) throw ValidationError("expected one name per generator");
    check_names(names);

    // order_[pos] = original generator sitting at PBW position pos
    std::vector<std::uint32_t> order = order_;
    if (order.empty()) {
        order.resize(dim_);
        for (std::uint32_t i = 0; i < dim_; ++i) order[i] = i;
    }
    if (order.size() != dim_) throw ValidationError("order must list every generator once");
    std::vector<std::uint32_t> pos(dim_, dim_);
    for (std::uint32_t p = 0; p < dim_; ++p) {
        if (order[p] >= dim_ || pos[order[p]] != dim_)
            throw ValidationError("order must be a permutation of the generators");
        pos[order[p]] = p;
    }

    using Terms = std::map<std::uint32_t, Scalar>;
    auto canon = [](const std::vector<std::pair<std::uint32_t, Scalar>>& in) {
        Terms t;
        for (const auto& [k, c] : in) {
            if (c.is_zero()) continue;
            auto [it, fresh] = t.emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) t.erase(it);
            }
        }
        return t;
    };

    // Fill the antisymmetric closure over original labels.
    std::vector<std::optional<Terms>> full(static_cast<std::size_t>(dim_) * dim_);
    for (const auto& [key, terms] : brackets_) {
        auto [i, j] = key;
        Terms t = canon(terms);
        for (const auto& [k, c] : t) {
            (void)k;
            if (c.field() != field_)
                throw FieldMismatchError("bracket coefficients do not match the declared field");
        }
        Terms neg;
        for (const auto& [k, c] : t) neg.emplace(k, -c);
        auto put = [&](std::uint32_t a, std::uint32_t b, Terms v) {
            auto& slot = full[a * dim_ + b];
            if (slot && *slot != v)
                throw ValidationError("inconsistent brackets for pair (" + std::to_string(a + 1) +
                                      "," + std::to_string(b + 1) + ")");
            slot = std::move(v);
        };
        put(i, j, std::move(t));
        put(j, i, std::move(neg));
    }

    // Relabel into PBW positions.
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> table(
        static_cast<std::size_t>(dim_) * dim_);
    for (std::uint32_t i = 0; i < dim_; ++i) {
        for (std::uint32_t j = 0; j < dim_; ++j) {
            const auto& src = full[order[i] * dim_ + order[j]];
            if (!src) continue;
            for (const auto& [k, c] : *src) table[i * dim_ + j].emplace_back(pos[k], c);
        }
    }

    validate_lie_table(field_, dim_, [&](std::uint32_t i, std::uint32_t j) { return table[i * dim_ + j]; });

    std::vector<std::string> pbw_names(dim_);
    for (std::uint32_t p = 0; p < dim_; ++p) pbw_names[p] = names[order[p]];
    return std::shared_ptr<EnvelopingAlgebra>(
        new EnvelopingAlgebra(field_, dim_, std::move(table), std::move(pbw_names)));
}

// ---------------------------------------------------------------------------
// 2x2 matrix extension

namespace {

class MatrixExtensionAlgebra final : public BaseAlgebra {
public:
    explicit MatrixExtensionAlgebra(AlgebraPtr inner)
        : BaseAlgebra(Kind::MatrixExtension, inner->field()), inner_(std::move(inner)) {
        if (!inner_->is_unital())
            throw PreconditionError("matrix extension requires a unital base");
        const AlgebraElement inner_one = inner_->one();
        for (int r = 1; r <= 2; ++r)
            for (const auto& [idx, c] : inner_one.terms())
                unit_.add_term(BasisIndex::matrix_cell(r, r, idx), c);
    }

    bool index_valid(const BasisIndex& idx) const override {
        return idx.kind() == BasisIndex::Kind::MatrixCell && inner_->index_valid(idx.inner());
    }

    AlgebraElement mul_basis(const BasisIndex& i, const BasisIndex& j) const override {
        require_valid(i, j);
        AlgebraElement out;
        if (i.mat_col() != j.mat_row()) return out;
        const AlgebraElement prod = inner_->mul_basis(i.inner(), j.inner());
        for (const auto& [idx, c] : prod.terms())
            out.add_term(BasisIndex::matrix_cell(i.mat_row(), j.mat_col(), idx), c);
        return out;
    }

    const AlgebraElement* unit() const override { return &unit_; }

    std::string index_name(const BasisIndex& idx) const override {
        return "m" + std::to_string(idx.mat_row()) + std::to_string(idx.mat_col()) + "(" +
               inner_->index_name(idx.inner()) + ")";
    }

    BasisIndex parse_index(const std::string& name) const override {
        const std::string s = trim(name);
        if (s.size() < 5 || s[0] != 'm' || s[3] != '(' || s.back() != ')')
            throw IndexError("matrix basis names look like m12(x): got '" + name + "'");
        const int r = s[1] - '0', c = s[2] - '0';
        if (r < 1 || r > 2 || c < 1 || c > 2)
            throw IndexError("matrix position out of {1,2}x{1,2} in '" + name + "'");
        return BasisIndex::matrix_cell(r, c, inner_->parse_index(s.substr(4, s.size() - 5)));
    }

    std::vector<BasisIndex> enumerate_basis(std::uint32_t max_degree) const override {
        std::vector<BasisIndex> out;
        for (const auto& idx : inner_->enumerate_basis(max_degree))
            for (int r = 1; r <= 2; ++r)
                for (int c = 1; c <= 2; ++c) out.push_back(BasisIndex::matrix_cell(r, c, idx));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string describe() const override { return "matrix2(" + inner_->describe() + ")"; }

private:
    AlgebraPtr inner_;
    AlgebraElement unit_;
};

} // namespace

AlgebraPtr matrix_extend(AlgebraPtr inner) {
    return std::make_shared<MatrixExtensionAlgebra>(std::move(inner));
}

} // namespace bandgrowth
