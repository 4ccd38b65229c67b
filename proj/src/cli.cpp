#include "cubecat/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cubecat/homology.hpp"
#include "cubecat/json_io.hpp"
#include "cubecat/presheaf.hpp"
#include "cubecat/simplicial.hpp"
#include "cubecat/verify.hpp"

namespace cubecat {

namespace {

struct Common {
    std::string site;          // empty = plain
    std::string crossed_table; // table file, implies a crossed site
    int max_degree = -1;       // -1 = site-dependent default
    std::string format;        // per-command default
};

struct Resolved {
    Site site;
    std::string selector;
    int max_degree = 0;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
    c.format = default_format;
    sub->add_option("--site", c.site,
                    "site selector: plain | connections | crossed | crossed:<table.json>");
    sub->add_option("--crossed-table", c.crossed_table,
                    "crossed-group table file (shorthand for --site crossed:<file>)");
    sub->add_option("--max-degree", c.max_degree,
                    "truncation degree (default 3, or 2 for crossed sites)");
    sub->add_option("--format", c.format, "output format (default " + default_format + ")")
        ->check(CLI::IsMember({"text", "json"}));
}

Resolved resolve(const Common& c) {
    std::string selector = c.site.empty() ? "plain" : c.site;
    if (!c.crossed_table.empty()) {
        if (!c.site.empty() && c.site != "crossed")
            throw std::invalid_argument("--crossed-table requires a crossed site");
        selector = "crossed:" + c.crossed_table;
    }
    Resolved r{site_from_selector(selector), selector, 0};
    r.max_degree = c.max_degree >= 0 ? c.max_degree : (r.site.has_twists() ? 2 : 3);
    if (r.max_degree > 8) throw std::invalid_argument("--max-degree too large (limit 8)");
    return r;
}

int parse_int(const std::string& text, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < 0)
        throw std::invalid_argument(what + ": expected a nonnegative integer, got \"" + text + "\"");
    return value;
}

std::vector<std::string> split_on_colons(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t colon = text.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
}

// Named objects: rep:<n>, boundary:<n>, tensor:<a>:<b>, cylinder:<name>.
Presheaf parse_object(const std::shared_ptr<const CubeSite>& site, int D, const std::string& text) {
    const std::string what = "object \"" + text + "\"";
    std::vector<std::string> parts = split_on_colons(text);
    if (parts[0] == "rep" && parts.size() == 2)
        return representable(site, D, parse_int(parts[1], what));
    if (parts[0] == "boundary" && parts.size() == 2)
        return boundary(site, D, parse_int(parts[1], what)).presheaf;
    if (parts[0] == "tensor" && parts.size() == 3) {
        Presheaf a = representable(site, D, parse_int(parts[1], what));
        Presheaf b = representable(site, D, parse_int(parts[2], what));
        return Tensor(a, b).presheaf();
    }
    if (parts[0] == "cylinder" && parts.size() >= 2) {
        Presheaf base = parse_object(site, D, text.substr(9));
        return cylinder(base).presheaf();
    }
    throw std::invalid_argument(
        what + ": expected rep:<n>, boundary:<n>, tensor:<a>:<b>, or cylinder:<object>");
}

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Normalization input: the four factors need not form a normal form; they
// are read as the composite face . degeneracy . dagger and renormalized.
CubeMorphism morphism_from_parts(const Site& site, const json& j) {
    const std::string what = "morphism";
    if (!j.is_object()) throw std::invalid_argument(what + ": expected a JSON object");
    int src = j.contains("src") ? j.at("src").get<int>() : -1;
    int dst = j.contains("dst") ? j.at("dst").get<int>() : -1;
    if (src < 0 || dst < 0)
        throw std::invalid_argument(what + ": needs nonnegative \"src\" and \"dst\"");
    Subset gamma = j.contains("gamma")
                       ? subset_from_json(src, j.at("gamma"), what + ": \"gamma\"")
                       : Subset::full(src);
    Subset delta = j.contains("delta")
                       ? subset_from_json(dst, j.at("delta"), what + ": \"delta\"")
                       : Subset::full(dst);
    Subset xi = j.contains("xi") ? subset_from_json(dst, j.at("xi"), what + ": \"xi\"")
                                 : Subset::empty(dst);
    if ((xi.bits & delta.bits) != 0)
        throw std::invalid_argument(what + ": \"xi\" must be disjoint from \"delta\"");
    BaseMorphism sigma;
    if (j.contains("sigma")) {
        sigma = base_from_json(site, gamma.size(), delta.size(), j.at("sigma"), what + ": \"sigma\"");
    } else {
        if (gamma.size() != delta.size())
            throw std::invalid_argument(what + ": missing \"sigma\" with |gamma| != |delta|");
        sigma.src = sigma.dst = gamma.size();
        for (int i = 0; i < gamma.size(); ++i) sigma.map.push_back(static_cast<uint8_t>(i));
    }
    CubeMorphism lift{dagger(site, gamma), Subset::empty(gamma.size())};
    CubeMorphism mid = cube_of_base(sigma);
    CubeMorphism cap = face(site, delta, xi);
    return cube_compose(site, cap, cube_compose(site, mid, lift));
}

Report run_suite(const std::string& name, const Site& site, int D) {
    if (name == "site-axioms") return verify_site_axioms(site, D);
    if (name == "span-identities") return verify_span_identities(site, D);
    if (name == "cube-axioms") return verify_cube_axioms(site, D);
    if (name == "presheaf-laws") return verify_presheaf_laws(site, D);
    if (name == "topology") return verify_topology(site, D);
    throw std::invalid_argument("unknown suite \"" + name +
                                "\" (site-axioms, span-identities, cube-axioms, presheaf-laws, "
                                "topology, all)");
}

std::string homology_text(const std::vector<HomologyGroup>& groups) {
    std::ostringstream out;
    std::string bettis;
    for (const HomologyGroup& g : groups) {
        out << "H_" << g.dim << " = ";
        if (g.betti == 0 && g.torsion.empty()) {
            out << "0";
        } else {
            bool first = true;
            if (g.betti > 0) {
                out << "Z";
                if (g.betti > 1) out << "^" << g.betti;
                first = false;
            }
            for (long long t : g.torsion) {
                if (!first) out << " + ";
                out << "Z/" << t;
                first = false;
            }
        }
        out << "\n";
        if (!bettis.empty()) bettis += ", ";
        bettis += std::to_string(g.betti);
    }
    out << "betti (" << bettis << ")\n";
    return out.str();
}

} // namespace

int cubecat_main(std::vector<std::string> args, std::istream& in, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"cubicalizations of thin-powered sites: morphism calculus, presheaves,"
                 " realizations, homology, and law verification"};
    app.name("cubecat");
    app.require_subcommand(1);
    int exit_code = 0;

    // hom-count ------------------------------------------------------------
    auto* homc = app.add_subcommand("hom-count", "count cube morphisms src -> dst");
    Common homc_c;
    int homc_src = 0, homc_dst = 0;
    add_common(homc, homc_c, "text");
    homc->add_option("--src", homc_src, "source degree")->required();
    homc->add_option("--dst", homc_dst, "target degree")->required();
    homc->callback([&] {
        Resolved r = resolve(homc_c);
        if (homc_src < 0 || homc_dst < 0) throw std::invalid_argument("degrees must be nonnegative");
        long long count = cube_hom_count_formula(r.site, homc_src, homc_dst);
        if (homc_src <= 4 && homc_dst <= 4) {
            CubeSite cs(r.site);
            long long enumerated = cs.hom_count(homc_src, homc_dst);
            if (enumerated != count)
                throw std::runtime_error("hom-count formula disagrees with enumeration: " +
                                         std::to_string(count) + " vs " +
                                         std::to_string(enumerated));
        }
        if (homc_c.format == "json") {
            json j;
            j["site"] = r.selector;
            j["src"] = homc_src;
            j["dst"] = homc_dst;
            j["count"] = count;
            out << j.dump(2) << "\n";
        } else {
            out << count << "\n";
        }
    });

    // compose ----------------------------------------------------------------
    auto* comp = app.add_subcommand(
        "compose", "compose two morphisms read from stdin as {\"outer\": ..., \"inner\": ...}");
    Common comp_c;
    add_common(comp, comp_c, "json");
    comp->callback([&] {
        Resolved r = resolve(comp_c);
        json j = parse_json_text(read_all(in), "stdin");
        if (!j.is_object() || !j.contains("outer") || !j.contains("inner"))
            throw std::invalid_argument("compose input needs keys \"outer\" and \"inner\"");
        CubeMorphism inner = morphism_from_json(r.site, j.at("inner"));
        CubeMorphism outer = morphism_from_json(r.site, j.at("outer"));
        if (inner.dst() != outer.src())
            throw std::invalid_argument("morphisms are not composable: inner lands in degree " +
                                        std::to_string(inner.dst()) + ", outer starts at " +
                                        std::to_string(outer.src()));
        out << morphism_to_json(r.site, cube_compose(r.site, outer, inner)).dump(2) << "\n";
    });

    // normalize --------------------------------------------------------------
    auto* norm = app.add_subcommand(
        "normalize", "read one morphism from stdin and print its normal form");
    Common norm_c;
    add_common(norm, norm_c, "json");
    norm->callback([&] {
        Resolved r = resolve(norm_c);
        json j = parse_json_text(read_all(in), "stdin");
        out << morphism_to_json(r.site, morphism_from_parts(r.site, j)).dump(2) << "\n";
    });

    // verify -------------------------------------------------------------
    auto* verf = app.add_subcommand("verify", "run a verification suite and report");
    Common verf_c;
    std::string verf_suite = "all";
    add_common(verf, verf_c, "text");
    verf->add_option("--suite", verf_suite,
                     "site-axioms | span-identities | cube-axioms | presheaf-laws | topology | all");
    verf->callback([&] {
        Resolved r = resolve(verf_c);
        std::vector<std::string> names;
        if (verf_suite == "all")
            names = {"site-axioms", "span-identities", "cube-axioms", "presheaf-laws", "topology"};
        else
            names = {verf_suite};
        json all = json::array();
        bool ok = true;
        for (const std::string& name : names) {
            Report rep = run_suite(name, r.site, r.max_degree);
            ok = ok && rep.passed();
            if (verf_c.format == "json")
                all.push_back(report_to_json(rep));
            else
                out << rep.to_text() << "\n";
        }
        if (verf_c.format == "json") out << (names.size() == 1 ? all[0] : all).dump(2) << "\n";
        exit_code = ok ? 0 : 1;
    });

    // boundary -------------------------------------------------------------
    auto* bdry = app.add_subcommand("boundary", "emit the boundary of a representable");
    Common bdry_c;
    std::string bdry_obj;
    add_common(bdry, bdry_c, "json");
    bdry->add_option("--object", bdry_obj, "rep:<n> (or bare <n>)")->required();
    bdry->callback([&] {
        Resolved r = resolve(bdry_c);
        std::vector<std::string> parts = split_on_colons(bdry_obj);
        int n = 0;
        if (parts.size() == 1)
            n = parse_int(parts[0], "object");
        else if (parts.size() == 2 && (parts[0] == "rep" || parts[0] == "boundary"))
            n = parse_int(parts[1], "object");
        else
            throw std::invalid_argument("boundary expects --object rep:<n> or a bare degree");
        auto site = std::make_shared<const CubeSite>(r.site);
        SubPresheaf b = boundary(site, r.max_degree, n);
        if (bdry_c.format == "text") {
            for (int k = 0; k <= r.max_degree; ++k)
                out << k << ": " << b.presheaf.cell_count(k) << " cells\n";
        } else {
            out << presheaf_to_json(b.presheaf, r.selector).dump(2) << "\n";
        }
    });

    // tensor ----------------------------------------------------------------
    auto* tens = app.add_subcommand("tensor", "emit the tensor product of two representables");
    Common tens_c;
    std::string tens_obj;
    add_common(tens, tens_c, "json");
    tens->add_option("--object", tens_obj, "tensor:<a>:<b> (or <a>:<b>)")->required();
    tens->callback([&] {
        Resolved r = resolve(tens_c);
        std::vector<std::string> parts = split_on_colons(tens_obj);
        if (parts.size() == 3 && parts[0] == "tensor") parts.erase(parts.begin());
        if (parts.size() != 2)
            throw std::invalid_argument("tensor expects --object tensor:<a>:<b>");
        auto site = std::make_shared<const CubeSite>(r.site);
        Presheaf X = parse_object(site, r.max_degree,
                                  "tensor:" + parts[0] + ":" + parts[1]);
        if (tens_c.format == "text") {
            for (int k = 0; k <= r.max_degree; ++k)
                out << k << ": " << X.cell_count(k) << " cells\n";
        } else {
            out << presheaf_to_json(X, r.selector).dump(2) << "\n";
        }
    });

    // realize ---------------------------------------------------------------
    auto* real = app.add_subcommand("realize", "simplicial realization of a named object");
    Common real_c;
    std::string real_obj;
    int real_top = -1;
    add_common(real, real_c, "json");
    real->add_option("--object", real_obj, "rep:<n> | boundary:<n> | tensor:<a>:<b> | cylinder:<o>")
        ->required();
    real->add_option("--top-dim", real_top, "simplicial truncation (default max-degree + 1)");
    real->callback([&] {
        Resolved r = resolve(real_c);
        int K = real_top >= 0 ? real_top : r.max_degree + 1;
        auto site = std::make_shared<const CubeSite>(r.site);
        Presheaf X = parse_object(site, r.max_degree, real_obj);
        Realization R = realize(X, K);
        if (real_c.format == "text") {
            std::vector<int> nondeg = nondegenerate_counts(R.space);
            for (int k = 0; k <= R.space.top; ++k)
                out << k << ": " << R.space.count(k) << " simplices (" << nondeg[k]
                    << " nondegenerate)\n";
            out << "euler " << euler_characteristic(R.space) << "\n";
        } else {
            out << simplicial_to_json(R.space).dump(2) << "\n";
        }
    });

    // homology -------------------------------------------------------------
    auto* homl = app.add_subcommand("homology", "integral homology of a named object");
    Common homl_c;
    std::string homl_obj;
    int homl_top = -1;
    add_common(homl, homl_c, "text");
    homl->add_option("--object", homl_obj, "rep:<n> | boundary:<n> | tensor:<a>:<b> | cylinder:<o>")
        ->required();
    homl->add_option("--top-dim", homl_top, "highest homology degree (default max-degree)");
    homl->callback([&] {
        Resolved r = resolve(homl_c);
        int top = homl_top >= 0 ? homl_top : r.max_degree;
        auto site = std::make_shared<const CubeSite>(r.site);
        Presheaf X = parse_object(site, r.max_degree, homl_obj);
        Realization R = realize(X, top + 1);
        std::vector<HomologyGroup> groups = homology(R.space, top);
        if (homl_c.format == "json")
            out << homology_to_json(groups).dump(2) << "\n";
        else
            out << homology_text(groups);
    });

    // presheaf-check ----------------------------------------------------------
    auto* pchk = app.add_subcommand("presheaf-check",
                                    "load a presheaf file, derive omitted actions, check laws");
    Common pchk_c;
    std::string pchk_path;
    add_common(pchk, pchk_c, "text");
    pchk->add_option("file", pchk_path, "presheaf JSON file")->required();
    pchk->callback([&] {
        json doc = load_json_file(pchk_path);
        Presheaf X = presheaf_from_json(doc);
        if (pchk_c.format == "json") {
            json j;
            j["site"] = doc.at("site");
            j["max_degree"] = X.max_degree();
            json cells = json::object();
            for (int k = 0; k <= X.max_degree(); ++k)
                cells[std::to_string(k)] = X.cell_count(k);
            j["cells"] = std::move(cells);
            j["ok"] = true;
            out << j.dump(2) << "\n";
        } else {
            out << "site: " << doc.at("site").get<std::string>() << "\n";
            out << "max_degree: " << X.max_degree() << "\n";
            for (int k = 0; k <= X.max_degree(); ++k)
                out << k << ": " << X.cell_count(k) << " cells\n";
            out << "ok\n";
        }
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace cubecat
