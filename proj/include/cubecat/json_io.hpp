#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubecat/homology.hpp"
#include "cubecat/presheaf.hpp"
#include "cubecat/report.hpp"
#include "cubecat/simplicial.hpp"

namespace cubecat {

// All serialization uses ordered_json so that emitted documents are
// byte-identical across runs: object keys appear in the order they are
// inserted, and every emitter below inserts in a fixed order.
using json = nlohmann::ordered_json;

// Error convention: malformed or schema-violating input throws
// std::invalid_argument; input that parses but fails a semantic law (a
// non-functorial presheaf action, say) throws std::runtime_error. The CLI
// maps these to exit codes 2 and 1 respectively.

// Subsets serialize as sorted arrays of positions.
json subset_to_json(const Subset& s);
Subset subset_from_json(int degree, const json& j, const std::string& what);

// {"map": [...], "twist": t}; src is the length of the map, dst is given by
// the surrounding context.
json base_to_json(const BaseMorphism& f);
BaseMorphism base_from_json(const Site& site, int src, int dst, const json& j,
                            const std::string& what);

// {"gamma": [...], "f": {"map": [...], "twist": t}, "src": m, "dst": n}
json span_to_json(const Span& s);
Span span_from_json(const Site& site, const json& j);

// Cube morphisms serialize through their normal form:
// {"gamma": [...], "sigma": {"map": [...], "twist": t},
//  "delta": [...], "xi": [...], "src": m, "dst": n}
json morphism_to_json(const Site& site, const CubeMorphism& m);
CubeMorphism morphism_from_json(const Site& site, const json& j);

// Crossed-group table files:
// {"max_degree": M, "arity_groups": mult[m][a][b],
//  "action": action[m][n][y][f], "restriction": restriction[m][n][f][y]}
// Loading checks shapes and index ranges; the group and crossed-group axioms
// themselves are the verify suites' job.
json crossed_table_to_json(const CrossedTable& t);
CrossedTable crossed_table_from_json(const json& j);

// Site selectors: "plain" | "connections" | "crossed" (built-in symmetric
// groups) | "crossed:<path>" (table file).
Site site_from_selector(const std::string& selector);

// Presheaf files:
// {"site": selector, "max_degree": D,
//  "cells": {"0": [names], ..., "D": [names]},
//  "action": [{"morphism": <morphism>, "map": {cell: cell, ...}}, ...]}
// Emission writes actions for the generating morphisms only. Loading fills
// identity actions, derives every omitted action that is a composite of the
// given ones, rejects morphisms that remain undetermined, and then checks
// functoriality of the completed table, naming the offending composable pair
// on failure.
json presheaf_to_json(const Presheaf& X, const std::string& site_selector);
Presheaf presheaf_from_json(const json& j);
Presheaf parse_presheaf(const std::string& path);

// {"simplices": [counts], "faces": faces[k][i][s],
//  "degeneracies": degeneracies[k][i][s]}
json simplicial_to_json(const SimplicialSet& S);

// [{"dim": k, "betti": b, "torsion": [...]}, ...]
json homology_to_json(const std::vector<HomologyGroup>& groups);

// {"suite": ..., "site": ..., "max_degree": D, "passed": ..., "checks": N,
//  "results": [{"name", "passed", "checks"[, "witness"]}, ...]}
json report_to_json(const Report& r);

// File and text helpers with uniform error wrapping.
json parse_json_text(const std::string& text, const std::string& what);
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace cubecat
