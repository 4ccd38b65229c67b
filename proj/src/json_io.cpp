#include "cubecat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cubecat {

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) schema_error(msg);
}

int int_field(const json& j, const std::string& key, const std::string& what) {
    require(j.is_object() && j.contains(key), what + ": missing key \"" + key + "\"");
    const json& v = j.at(key);
    require(v.is_number_integer(), what + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

const json& array_field(const json& j, const std::string& key, const std::string& what) {
    require(j.is_object() && j.contains(key), what + ": missing key \"" + key + "\"");
    const json& v = j.at(key);
    require(v.is_array(), what + ": \"" + key + "\" must be an array");
    return v;
}

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& what) {
    require(j.is_object(), what + ": expected a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || item.key() == k;
        require(known, what + ": unknown key \"" + item.key() + "\"");
    }
}

std::vector<int> int_vector(const json& j, const std::string& what) {
    require(j.is_array(), what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& v : j) {
        require(v.is_number_integer(), what + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

json subset_to_json(const Subset& s) {
    json out = json::array();
    for (int p : s.positions()) out.push_back(p);
    return out;
}

Subset subset_from_json(int degree, const json& j, const std::string& what) {
    std::vector<int> pos = int_vector(j, what);
    for (size_t i = 1; i < pos.size(); ++i)
        require(pos[i - 1] < pos[i], what + " must be strictly increasing");
    try {
        return Subset::from_positions(degree, pos);
    } catch (const std::invalid_argument&) {
        schema_error(what + " has a position outside 0.." + std::to_string(degree - 1));
    }
}

json base_to_json(const BaseMorphism& f) {
    json out;
    out["map"] = json::array();
    for (uint8_t v : f.map) out["map"].push_back(static_cast<int>(v));
    out["twist"] = static_cast<int>(f.twist);
    return out;
}

BaseMorphism base_from_json(const Site& site, int src, int dst, const json& j,
                            const std::string& what) {
    require_keys(j, {"map", "twist"}, what);
    std::vector<int> map = int_vector(array_field(j, "map", what), what + ": \"map\"");
    require(static_cast<int>(map.size()) == src,
            what + ": \"map\" must have length " + std::to_string(src));
    BaseMorphism f;
    f.src = src;
    f.dst = dst;
    f.map.reserve(map.size());
    for (size_t i = 0; i < map.size(); ++i) {
        require(map[i] >= 0 && map[i] < dst, what + ": map value out of range");
        if (i > 0) {
            bool ok = site.kind() == SiteKind::Plain ? map[i - 1] < map[i] : map[i - 1] <= map[i];
            require(ok, what + ": map must be monotone");
        }
        f.map.push_back(static_cast<uint8_t>(map[i]));
    }
    int twist = int_field(j, "twist", what);
    int order;
    try {
        order = site.group_order(src);
    } catch (const std::out_of_range& e) {
        schema_error(what + ": " + e.what());
    }
    require(twist >= 0 && twist < order, what + ": twist index out of range");
    f.twist = static_cast<uint16_t>(twist);
    return f;
}

json span_to_json(const Span& s) {
    json out;
    out["gamma"] = subset_to_json(s.gamma);
    out["f"] = base_to_json(s.f);
    out["src"] = s.src;
    out["dst"] = s.dst;
    return out;
}

Span span_from_json(const Site& site, const json& j) {
    const std::string what = "span";
    require_keys(j, {"gamma", "f", "src", "dst"}, what);
    Span s;
    s.src = int_field(j, "src", what);
    s.dst = int_field(j, "dst", what);
    require(s.src >= 0 && s.dst >= 0, what + ": degrees must be nonnegative");
    s.gamma = subset_from_json(s.src, array_field(j, "gamma", what), what + ": \"gamma\"");
    require(j.contains("f"), what + ": missing key \"f\"");
    s.f = base_from_json(site, s.gamma.size(), s.dst, j.at("f"), what + ": \"f\"");
    return s;
}

json morphism_to_json(const Site& site, const CubeMorphism& m) {
    NormalForm nf = normal_form(site, m);
    json out;
    out["gamma"] = subset_to_json(nf.gamma);
    out["sigma"] = base_to_json(nf.sigma);
    out["delta"] = subset_to_json(nf.delta);
    out["xi"] = subset_to_json(nf.xi);
    out["src"] = nf.src;
    out["dst"] = nf.dst;
    return out;
}

CubeMorphism morphism_from_json(const Site& site, const json& j) {
    const std::string what = "morphism";
    require_keys(j, {"gamma", "sigma", "delta", "xi", "src", "dst"}, what);
    NormalForm nf;
    nf.src = int_field(j, "src", what);
    nf.dst = int_field(j, "dst", what);
    require(nf.src >= 0 && nf.dst >= 0, what + ": degrees must be nonnegative");
    nf.gamma = subset_from_json(nf.src, array_field(j, "gamma", what), what + ": \"gamma\"");
    nf.delta = subset_from_json(nf.dst, array_field(j, "delta", what), what + ": \"delta\"");
    nf.xi = subset_from_json(nf.dst, array_field(j, "xi", what), what + ": \"xi\"");
    require((nf.xi.bits & nf.delta.bits) == 0, what + ": \"xi\" must be disjoint from \"delta\"");
    require(j.contains("sigma"), what + ": missing key \"sigma\"");
    nf.sigma =
        base_from_json(site, nf.gamma.size(), nf.delta.size(), j.at("sigma"), what + ": \"sigma\"");
    CubeMorphism m;
    try {
        m = reassemble(site, nf);
    } catch (const std::exception& e) {
        schema_error(what + ": fields do not assemble: " + std::string(e.what()));
    }
    require(normal_form(site, m) == nf, what + ": fields are not in normal form");
    return m;
}

json crossed_table_to_json(const CrossedTable& t) {
    json out;
    out["max_degree"] = t.max_degree;
    out["arity_groups"] = t.mult;
    out["action"] = t.action;
    out["restriction"] = t.restriction;
    return out;
}

CrossedTable crossed_table_from_json(const json& j) {
    const std::string what = "crossed table";
    require_keys(j, {"max_degree", "arity_groups", "action", "restriction"}, what);
    CrossedTable t;
    t.max_degree = int_field(j, "max_degree", what);
    require(t.max_degree >= 0 && t.max_degree <= 8, what + ": max_degree out of range");
    const json& mult = array_field(j, "arity_groups", what);
    const json& action = array_field(j, "action", what);
    const json& restriction = array_field(j, "restriction", what);
    size_t degrees = static_cast<size_t>(t.max_degree) + 1;
    require(mult.size() == degrees && action.size() == degrees && restriction.size() == degrees,
            what + ": tables must cover degrees 0..max_degree");
    try {
        t.mult = mult.get<std::vector<std::vector<std::vector<uint16_t>>>>();
        t.action = action.get<std::vector<std::vector<std::vector<std::vector<uint16_t>>>>>();
        t.restriction = restriction.get<std::vector<std::vector<std::vector<std::vector<uint16_t>>>>>();
    } catch (const json::exception& e) {
        schema_error(what + ": malformed index table: " + std::string(e.what()));
    }
    for (int m = 0; m <= t.max_degree; ++m) {
        size_t order = t.mult[m].size();
        require(order >= 1, what + ": arity group " + std::to_string(m) + " is empty");
        for (const auto& row : t.mult[m]) {
            require(row.size() == order, what + ": multiplication table must be square");
            for (uint16_t v : row) require(v < order, what + ": multiplication index out of range");
        }
        require(t.action[m].size() == degrees && t.restriction[m].size() == degrees,
                what + ": action tables must cover degrees 0..max_degree");
        for (int n = 0; n <= t.max_degree; ++n) {
            size_t maps = Site::weak_maps(m, n).size();
            size_t target_order = t.mult[n].size();
            require(t.action[m][n].size() == target_order,
                    what + ": action table must have one row per group element");
            for (const auto& row : t.action[m][n]) {
                require(row.size() == maps, what + ": action row has the wrong length");
                for (uint16_t v : row) require(v < maps, what + ": action index out of range");
            }
            require(t.restriction[m][n].size() == maps,
                    what + ": restriction table must have one row per map");
            for (const auto& row : t.restriction[m][n]) {
                require(row.size() == target_order, what + ": restriction row has the wrong length");
                for (uint16_t v : row) require(v < order, what + ": restriction index out of range");
            }
        }
    }
    return t;
}

Site site_from_selector(const std::string& selector) {
    if (selector == "plain") return Site::plain();
    if (selector == "connections") return Site::connections();
    if (selector == "crossed") return Site::sigma();
    if (selector.rfind("crossed:", 0) == 0) {
        std::string path = selector.substr(8);
        require(!path.empty(), "site selector \"crossed:\" needs a table path");
        return Site::crossed(crossed_table_from_json(load_json_file(path)));
    }
    schema_error("unknown site selector \"" + selector +
                 "\" (expected plain, connections, crossed, or crossed:<path>)");
}

json presheaf_to_json(const Presheaf& X, const std::string& site_selector) {
    const CubeSite& site = X.site();
    int D = X.max_degree();
    json out;
    out["site"] = site_selector;
    out["max_degree"] = D;
    json cells = json::object();
    for (int n = 0; n <= D; ++n) {
        json names = json::array();
        for (int c = 0; c < X.cell_count(n); ++c) names.push_back(X.cell_name(n, c));
        cells[std::to_string(n)] = std::move(names);
    }
    out["cells"] = std::move(cells);
    json action = json::array();
    for (int n = 0; n <= D; ++n) {
        for (const CubeMorphism& u : site.generators_into(n)) {
            if (u.src() > D) continue;
            json entry;
            entry["morphism"] = morphism_to_json(site.base(), u);
            json map = json::object();
            for (int c = 0; c < X.cell_count(n); ++c)
                map[X.cell_name(n, c)] = X.cell_name(u.src(), X.act(u, c));
            entry["map"] = std::move(map);
            action.push_back(std::move(entry));
        }
    }
    out["action"] = std::move(action);
    return out;
}

Presheaf presheaf_from_json(const json& j) {
    const std::string what = "presheaf";
    require_keys(j, {"site", "max_degree", "cells", "action"}, what);
    require(j.contains("site") && j.at("site").is_string(),
            what + ": \"site\" must be a selector string");
    auto site = std::make_shared<CubeSite>(site_from_selector(j.at("site").get<std::string>()));
    int D = int_field(j, "max_degree", what);
    require(D >= 0 && D <= 8, what + ": max_degree out of range");
    Presheaf X(site, D);

    require(j.contains("cells") && j.at("cells").is_object(),
            what + ": \"cells\" must be an object keyed by degree");
    std::vector<const json*> degree_cells(static_cast<size_t>(D) + 1, nullptr);
    for (const auto& item : j.at("cells").items()) {
        int n = -1;
        try {
            size_t used = 0;
            n = std::stoi(item.key(), &used);
            if (used != item.key().size()) n = -1;
        } catch (const std::exception&) {
            n = -1;
        }
        require(n >= 0 && n <= D, what + ": cell degree \"" + item.key() + "\" out of range");
        require(item.value().is_array(), what + ": cells at degree " + item.key() + " must be an array");
        degree_cells[static_cast<size_t>(n)] = &item.value();
    }
    for (int n = 0; n <= D; ++n) {
        if (!degree_cells[static_cast<size_t>(n)]) continue;
        for (const json& name : *degree_cells[static_cast<size_t>(n)]) {
            require(name.is_string() && !name.get<std::string>().empty(),
                    what + ": cell names must be nonempty strings");
            require(X.cell_index(n, name.get<std::string>()) < 0,
                    what + ": duplicate cell \"" + name.get<std::string>() + "\" at degree " +
                        std::to_string(n));
            X.add_cell(n, name.get<std::string>());
        }
    }

    // Collect the explicitly given actions as complete rows of the table.
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> rows;
    auto rows_for = [&](int m, int n) -> std::vector<std::vector<int>>& {
        auto it = rows.find({m, n});
        if (it == rows.end())
            it = rows.emplace(std::make_pair(m, n),
                              std::vector<std::vector<int>>(site->homs(m, n).size()))
                     .first;
        return it->second;
    };
    const json& action = array_field(j, "action", what);
    for (const json& entry : action) {
        require_keys(entry, {"morphism", "map"}, what + ": action entry");
        require(entry.contains("morphism"), what + ": action entry missing \"morphism\"");
        CubeMorphism u = morphism_from_json(site->base(), entry.at("morphism"));
        require(u.src() <= D && u.dst() <= D,
                what + ": action morphism degree exceeds max_degree");
        int mor = site->index_of(u);
        require(entry.contains("map") && entry.at("map").is_object(),
                what + ": action entry needs a \"map\" object");
        const json& map = entry.at("map");
        std::vector<int> row(static_cast<size_t>(X.cell_count(u.dst())), -1);
        for (const auto& item : map.items()) {
            int c = X.cell_index(u.dst(), item.key());
            require(c >= 0, what + ": action map names unknown cell \"" + item.key() +
                                "\" at degree " + std::to_string(u.dst()));
            require(item.value().is_string(), what + ": action map values must be cell names");
            int v = X.cell_index(u.src(), item.value().get<std::string>());
            require(v >= 0, what + ": action map targets unknown cell \"" +
                                item.value().get<std::string>() + "\" at degree " +
                                std::to_string(u.src()));
            row[static_cast<size_t>(c)] = v;
        }
        for (int c = 0; c < X.cell_count(u.dst()); ++c)
            require(row[static_cast<size_t>(c)] >= 0,
                    what + ": action map misses cell \"" + X.cell_name(u.dst(), c) + "\"");
        auto& slot = rows_for(u.src(), u.dst())[static_cast<size_t>(mor)];
        if (!slot.empty())
            require(slot == row, what + ": conflicting action entries for morphism " +
                                     morphism_to_json(site->base(), u).dump());
        slot = std::move(row);
    }

    // Knownness is tracked separately from the rows: a complete row over an
    // empty degree is the empty vector, indistinguishable from "absent".
    std::map<std::pair<int, int>, std::vector<char>> known;
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n)
            known[{m, n}].assign(site->homs(m, n).size(), 0);
    for (const json& entry : action) {
        CubeMorphism u = morphism_from_json(site->base(), entry.at("morphism"));
        known[{u.src(), u.dst()}][static_cast<size_t>(site->index_of(u))] = 1;
    }

    // A presheaf must send identities to identities; fill them in, and reject
    // files that say otherwise.
    for (int n = 0; n <= D; ++n) {
        CubeMorphism id = cube_identity(site->base(), n);
        int mor = site->index_of(id);
        std::vector<int> idrow(static_cast<size_t>(X.cell_count(n)));
        for (int c = 0; c < X.cell_count(n); ++c) idrow[static_cast<size_t>(c)] = c;
        auto& slot = rows_for(n, n)[static_cast<size_t>(mor)];
        if (known[{n, n}][static_cast<size_t>(mor)]) {
            if (slot != idrow)
                throw std::runtime_error(what + ": identity at degree " + std::to_string(n) +
                                         " must act as the identity");
        } else {
            slot = idrow;
            known[{n, n}][static_cast<size_t>(mor)] = 1;
        }
    }

    // Derive every action that is a composite of known ones, to a fixpoint.
    // comp[(m,n,q)][u][v] = index of homs(n,q)[v] . homs(m,n)[u] in homs(m,q).
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> comp;
    auto comp_for = [&](int m, int n, int q) -> const std::vector<std::vector<int>>& {
        auto it = comp.find({m, n, q});
        if (it == comp.end()) {
            const auto& in = site->homs(m, n);
            const auto& out = site->homs(n, q);
            std::vector<std::vector<int>> table(in.size(), std::vector<int>(out.size()));
            for (size_t a = 0; a < in.size(); ++a)
                for (size_t b = 0; b < out.size(); ++b)
                    table[a][b] = site->index_of(cube_compose(site->base(), out[b], in[a]));
            it = comp.emplace(std::make_tuple(m, n, q), std::move(table)).first;
        }
        return it->second;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (int m = 0; m <= D; ++m)
            for (int n = 0; n <= D; ++n)
                for (int q = 0; q <= D; ++q) {
                    const auto& table = comp_for(m, n, q);
                    const auto& inner_known = known[{m, n}];
                    const auto& outer_known = known[{n, q}];
                    auto& target_known = known[{m, q}];
                    for (size_t a = 0; a < inner_known.size(); ++a) {
                        if (!inner_known[a]) continue;
                        for (size_t b = 0; b < outer_known.size(); ++b) {
                            if (!outer_known[b]) continue;
                            int w = table[a][b];
                            if (target_known[static_cast<size_t>(w)]) continue;
                            const auto& inner = rows_for(m, n)[a];
                            const auto& outer = rows_for(n, q)[b];
                            std::vector<int> row(static_cast<size_t>(X.cell_count(q)));
                            for (int c = 0; c < X.cell_count(q); ++c)
                                row[static_cast<size_t>(c)] =
                                    inner[static_cast<size_t>(outer[static_cast<size_t>(c)])];
                            rows_for(m, q)[static_cast<size_t>(w)] = std::move(row);
                            target_known[static_cast<size_t>(w)] = 1;
                            progress = true;
                        }
                    }
                }
    }
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            const auto& flags = known[{m, n}];
            for (size_t i = 0; i < flags.size(); ++i)
                if (!flags[i])
                    schema_error(what + ": missing action for morphism " +
                                 morphism_to_json(site->base(), site->homs(m, n)[i]).dump() +
                                 " and it is not a composite of the given actions");
        }

    // The completed table must be functorial; name the offending pair if not.
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n)
            for (int q = 0; q <= D; ++q) {
                const auto& table = comp_for(m, n, q);
                const auto& inner_rows = rows_for(m, n);
                const auto& outer_rows = rows_for(n, q);
                const auto& composite_rows = rows_for(m, q);
                for (size_t a = 0; a < inner_rows.size(); ++a)
                    for (size_t b = 0; b < outer_rows.size(); ++b) {
                        const auto& expected = composite_rows[static_cast<size_t>(table[a][b])];
                        for (int c = 0; c < X.cell_count(q); ++c) {
                            int two_step = inner_rows[a][static_cast<size_t>(
                                outer_rows[b][static_cast<size_t>(c)])];
                            if (two_step == expected[static_cast<size_t>(c)]) continue;
                            throw std::runtime_error(
                                what + ": action not functorial for inner " +
                                morphism_to_json(site->base(), site->homs(m, n)[a]).dump() +
                                " and outer " +
                                morphism_to_json(site->base(), site->homs(n, q)[b]).dump() +
                                " at cell \"" + X.cell_name(q, c) + "\"");
                        }
                    }
            }

    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            const auto& table = rows_for(m, n);
            for (size_t mor = 0; mor < table.size(); ++mor)
                for (int c = 0; c < X.cell_count(n); ++c)
                    X.set_action(m, n, static_cast<int>(mor), c, table[mor][static_cast<size_t>(c)]);
        }
    X.seal();
    return X;
}

Presheaf parse_presheaf(const std::string& path) { return presheaf_from_json(load_json_file(path)); }

json simplicial_to_json(const SimplicialSet& S) {
    json out;
    out["simplices"] = S.counts;
    out["faces"] = S.faces;
    out["degeneracies"] = S.degeneracies;
    return out;
}

json homology_to_json(const std::vector<HomologyGroup>& groups) {
    json out = json::array();
    for (const HomologyGroup& g : groups) {
        json entry;
        entry["dim"] = g.dim;
        entry["betti"] = g.betti;
        entry["torsion"] = g.torsion;
        out.push_back(std::move(entry));
    }
    return out;
}

json report_to_json(const Report& r) {
    json out;
    out["suite"] = r.suite;
    out["site"] = r.site;
    out["max_degree"] = r.max_degree;
    out["passed"] = r.passed();
    out["checks"] = r.total_checks();
    json results = json::array();
    for (const CheckResult& c : r.results) {
        json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["checks"] = c.checks;
        if (!c.witness.empty()) entry["witness"] = c.witness;
        results.push_back(std::move(entry));
    }
    out["results"] = std::move(results);
    return out;
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        schema_error(what + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), "cannot open \"" + path + "\" for writing");
    out << j.dump(2) << '\n';
}

} // namespace cubecat
