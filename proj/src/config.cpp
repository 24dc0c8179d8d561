#include "bandgrowth/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>

namespace bandgrowth {

namespace {

struct Entry {
    std::string key;
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

std::int64_t parse_int(const Entry& e, std::int64_t lo, std::int64_t hi) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(trim(e.value), &pos);
        if (pos != trim(e.value).size()) throw std::invalid_argument("");
        if (v < lo || v > hi)
            throw ConfigError(e.line, e.key + " must be in [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "]");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(e.line, e.key + ": expected an integer, got '" + e.value + "'");
    }
}

std::uint64_t parse_u64(const Entry& e) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(trim(e.value), &pos);
        if (pos != trim(e.value).size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(e.line, e.key + ": expected a nonnegative integer, got '" + e.value + "'");
    }
}

using Triple = std::tuple<std::string, std::int64_t, std::int64_t>;

/// "(name, num, den) (name, num, den) ..." with optional '+' separators.
std::vector<Triple> parse_triples(const Entry& e) {
    std::vector<Triple> out;
    const std::string& s = e.value;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '+')) ++i;
    };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(')
            throw ConfigError(e.line, e.key + ": expected '(' starting a (name, num, den) triple");
        const auto close = s.find(')', i);
        if (close == std::string::npos)
            throw ConfigError(e.line, e.key + ": unterminated triple");
        const auto parts = split_list(s.substr(i + 1, close - i - 1));
        if (parts.size() != 3)
            throw ConfigError(e.line, e.key + ": a triple has exactly (name, num, den)");
        auto parse_ll = [&](const std::string& t) {
            try {
                std::size_t pos = 0;
                const long long v = std::stoll(t, &pos);
                if (pos != t.size()) throw std::invalid_argument("");
                return v;
            } catch (const std::exception&) {
                throw ConfigError(e.line, e.key + ": expected an integer, got '" + t + "'");
            }
        };
        out.emplace_back(parts[0], parse_ll(parts[1]), parse_ll(parts[2]));
        i = close + 1;
        skip_ws();
    }
    if (out.empty()) throw ConfigError(e.line, e.key + ": expected at least one (name, num, den) triple");
    return out;
}

std::vector<std::pair<std::uint32_t, Scalar>> resolve_triples(
    const Entry& e, const std::vector<Triple>& triples, const std::vector<std::string>& names,
    const FieldSpec& field) {
    std::vector<std::pair<std::uint32_t, Scalar>> out;
    for (const auto& [name, num, den] : triples) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ConfigError(e.line, e.key + ": unknown basis name '" + name + "'");
        try {
            out.emplace_back(static_cast<std::uint32_t>(it - names.begin()),
                             Scalar::fraction(field, num, den));
        } catch (const std::exception& ex) {
            throw ConfigError(e.line, e.key + ": " + ex.what());
        }
    }
    return out;
}

const Entry* find_key(const std::vector<Entry>& entries, const std::string& key) {
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

} // namespace

ScenarioConfig parse_config(std::istream& in) {
    std::map<std::string, std::vector<Entry>> sections;
    std::set<std::string> seen_keys;

    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[' && t.back() == ']' && t.find('=') == std::string::npos) {
            section = trim(t.substr(1, t.size() - 2));
            if (section != "field" && section != "algebra" && section != "elements" &&
                section != "run")
                throw ConfigError(lineno, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, "expected 'key = value', got '" + t + "'");
        if (section.empty()) throw ConfigError(lineno, "key outside any [section]");
        Entry e{trim(t.substr(0, eq)), trim(t.substr(eq + 1)), lineno};
        if (e.key.empty()) throw ConfigError(lineno, "empty key");
        if (!seen_keys.insert(section + "\n" + e.key).second)
            throw ConfigError(lineno, "duplicate key '" + e.key + "' in [" + section + "]");
        sections[section].push_back(std::move(e));
    }

    ScenarioConfig cfg;

    // [field]
    {
        const auto& entries = sections["field"];
        std::string kind = "rational";
        const Entry* p_entry = nullptr;
        for (const auto& e : entries) {
            if (e.key == "kind") {
                kind = e.value;
                if (kind != "rational" && kind != "prime")
                    throw ConfigError(e.line, "field kind must be rational or prime");
            } else if (e.key == "p") {
                p_entry = &e;
            } else {
                throw ConfigError(e.line, "unknown key '" + e.key + "' in [field]");
            }
        }
        if (kind == "prime") {
            if (!p_entry) throw ConfigError(0, "[field] kind = prime requires p");
            try {
                cfg.field = FieldSpec::prime(parse_u64(*p_entry));
            } catch (const ValidationError& ex) {
                throw ConfigError(p_entry->line, ex.what());
            }
        } else if (p_entry) {
            throw ConfigError(p_entry->line, "p is only valid for kind = prime");
        }
    }

    // [run]
    {
        const auto& entries = sections["run"];
        for (const auto& e : entries) {
            if (e.key == "n_max")
                cfg.n_max = static_cast<int>(parse_int(e, 1, 64));
            else if (e.key == "seed")
                cfg.seed = parse_u64(e);
            else if (e.key == "window")
                cfg.oracle.window = parse_int(e, 1, 64);
            else if (e.key == "truncation")
                cfg.oracle.truncation = parse_int(e, 1, 256);
            else if (e.key == "trials")
                cfg.oracle.trials = static_cast<int>(parse_int(e, 1, 1000000));
            else if (e.key == "max_offset")
                cfg.oracle.banded.max_offset = parse_int(e, 0, 32);
            else if (e.key == "max_cell")
                cfg.oracle.banded.max_cell = parse_int(e, 1, 64);
            else if (e.key == "max_degree")
                cfg.oracle.max_degree = static_cast<std::uint32_t>(parse_int(e, 0, 16));
            else
                throw ConfigError(e.line, "unknown key '" + e.key + "' in [run]");
        }
        cfg.oracle.seed = cfg.seed;
    }

    // [algebra]
    {
        auto it = sections.find("algebra");
        if (it == sections.end() || it->second.empty())
            throw ConfigError(0, "missing [algebra] section");
        const auto& entries = it->second;

        const Entry* kind_entry = find_key(entries, "kind");
        if (!kind_entry) throw ConfigError(0, "[algebra] is missing kind");
        const std::string kind = kind_entry->value;

        auto names_of = [&](const char* stem, std::uint32_t count) {
            if (const Entry* ne = find_key(entries, "names")) {
                auto names = split_list(ne->value);
                if (names.size() != count)
                    throw ConfigError(ne->line, "names lists " + std::to_string(names.size()) +
                                                    " entries, expected " + std::to_string(count));
                return names;
            }
            return default_names(count, stem);
        };
        auto check_keys = [&](const std::set<std::string>& allowed, bool products, bool brackets) {
            for (const auto& e : entries) {
                if (allowed.count(e.key)) continue;
                if (products && e.key.find('*') != std::string::npos) continue;
                if (brackets && e.key.size() > 1 && e.key.front() == '[' && e.key.back() == ']')
                    continue;
                throw ConfigError(e.line, "unknown key '" + e.key + "' in [algebra] for kind " + kind);
            }
        };

        if (kind == "polynomial") {
            check_keys({"kind", "vars", "names"}, false, false);
            const Entry* ve = find_key(entries, "vars");
            if (!ve) throw ConfigError(0, "polynomial algebra requires vars");
            const auto vars = static_cast<std::uint32_t>(parse_int(*ve, 1, 64));
            cfg.algebra = make_polynomial(cfg.field, vars, names_of("x", vars));
        } else if (kind == "free") {
            check_keys({"kind", "gens", "names"}, false, false);
            const Entry* ge = find_key(entries, "gens");
            if (!ge) throw ConfigError(0, "free algebra requires gens");
            const auto gens = static_cast<std::uint32_t>(parse_int(*ge, 1, 64));
            cfg.algebra = make_free_associative(cfg.field, gens, names_of("x", gens));
        } else if (kind == "structure_constants") {
            check_keys({"kind", "dim", "names", "unit"}, true, false);
            const Entry* de = find_key(entries, "dim");
            if (!de) throw ConfigError(0, "structure_constants algebra requires dim");
            const auto dim = static_cast<std::uint32_t>(parse_int(*de, 1, 256));
            const auto names = names_of("e", dim);
            auto slot_of = [&](const Entry& e, const std::string& name) {
                auto nit = std::find(names.begin(), names.end(), trim(name));
                if (nit == names.end())
                    throw ConfigError(e.line, e.key + ": unknown basis name '" + trim(name) + "'");
                return static_cast<std::uint32_t>(nit - names.begin());
            };
            StructureConstantsBuilder b(cfg.field, dim);
            b.set_names(names);
            for (const auto& e : entries) {
                const auto star = e.key.find('*');
                if (star == std::string::npos) continue;
                const std::uint32_t i = slot_of(e, e.key.substr(0, star));
                const std::uint32_t j = slot_of(e, e.key.substr(star + 1));
                b.set_product(i, j, resolve_triples(e, parse_triples(e), names, cfg.field));
            }
            if (const Entry* ue = find_key(entries, "unit"))
                b.set_unit(resolve_triples(*ue, parse_triples(*ue), names, cfg.field));
            cfg.algebra = b.build();
        } else if (kind == "enveloping") {
            check_keys({"kind", "dim", "names", "order"}, false, true);
            const Entry* de = find_key(entries, "dim");
            if (!de) throw ConfigError(0, "enveloping algebra requires dim");
            const auto dim = static_cast<std::uint32_t>(parse_int(*de, 1, 64));
            const auto names = names_of("g", dim);
            auto gen_of = [&](const Entry& e, const std::string& name) {
                auto nit = std::find(names.begin(), names.end(), trim(name));
                if (nit == names.end())
                    throw ConfigError(e.line, e.key + ": unknown generator '" + trim(name) + "'");
                return static_cast<std::uint32_t>(nit - names.begin());
            };
            EnvelopingBuilder b(cfg.field, dim);
            b.set_names(names);
            for (const auto& e : entries) {
                if (e.key.size() < 2 || e.key.front() != '[' || e.key.back() != ']') continue;
                const auto pair = split_list(e.key.substr(1, e.key.size() - 2));
                if (pair.size() != 2)
                    throw ConfigError(e.line, "bracket keys look like [e,f]");
                b.set_bracket(gen_of(e, pair[0]), gen_of(e, pair[1]),
                              resolve_triples(e, parse_triples(e), names, cfg.field));
            }
            if (const Entry* oe = find_key(entries, "order")) {
                std::vector<std::uint32_t> order;
                for (const auto& n : split_list(oe->value)) order.push_back(gen_of(*oe, n));
                b.set_order(std::move(order));
            }
            cfg.algebra = b.build();
        } else {
            throw ConfigError(kind_entry->line,
                              "unknown algebra kind '" + kind +
                                  "' (polynomial | free | structure_constants | enveloping)");
        }
    }

    // [elements]
    {
        const auto& entries = sections["elements"];
        std::vector<const Entry*> ordered(entries.size(), nullptr);
        for (const auto& e : entries) {
            bool digits = e.key.size() >= 2 && e.key[0] == 'a' && e.key[1] != '0';
            for (std::size_t i = 1; digits && i < e.key.size(); ++i)
                digits = std::isdigit(static_cast<unsigned char>(e.key[i])) != 0;
            std::size_t idx = digits ? std::stoul(e.key.substr(1)) : 0;
            if (idx < 1 || idx > entries.size() || ordered[idx - 1] != nullptr)
                throw ConfigError(e.line, "element keys must be a1..a" + std::to_string(entries.size()) +
                                              " with no gaps: got '" + e.key + "'");
            ordered[idx - 1] = &e;
        }
        for (const Entry* e : ordered) {
            const auto triples = parse_triples(*e);
            AlgebraElement elem;
            for (const auto& [name, num, den] : triples) {
                try {
                    elem.add_term(cfg.algebra->parse_index(trim(name)),
                                  Scalar::fraction(cfg.field, num, den));
                } catch (const std::exception& ex) {
                    throw ConfigError(e->line, e->key + ": " + ex.what());
                }
            }
            cfg.elements.push_back(std::move(elem));
        }
    }

    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace bandgrowth
