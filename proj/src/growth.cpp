#include "bandgrowth/growth.hpp"

namespace bandgrowth {

void write_growth_csv(std::ostream& os, const GrowthTable& table) {
    const bool with_bound = !table.bounds.empty();
    os << (with_bound ? "n,dim,bound\n" : "n,dim\n");
    for (std::size_t i = 0; i < table.dims.size(); ++i) {
        os << (i + 1) << ',' << table.dims[i];
        if (with_bound) os << ',' << table.bounds[i];
        os << '\n';
    }
}

std::optional<std::uint32_t> asym_leq(const GrowthTable& f, const GrowthTable& g,
                                      std::uint32_t c_max, int n_range) {
    if (n_range < 1 || c_max < 1) throw PreconditionError("asym_leq needs n_range >= 1, C_max >= 1");
    if (f.n_max() < n_range)
        throw PreconditionError("f table too short: need n up to " + std::to_string(n_range));
    if (g.n_max() < static_cast<int>(c_max) * n_range)
        throw PreconditionError("g table too short: need n up to " +
                                std::to_string(static_cast<std::uint64_t>(c_max) * n_range));
    for (std::uint32_t c = 1; c <= c_max; ++c) {
        bool ok = true;
        for (int n = 1; n <= n_range && ok; ++n)
            ok = f.at(n) <= static_cast<std::uint64_t>(c) * g.at(static_cast<int>(c) * n);
        if (ok) return c;
    }
    return std::nullopt;
}

} // namespace bandgrowth
