#include <doctest.h>

#include "cubecat/presheaf.hpp"
#include "cubecat/simplicial.hpp"
#include "cubecat/verify.hpp"

using namespace cubecat;

TEST_CASE("site axioms hold on the shipped sites") {
    CHECK(verify_site_axioms(Site::plain(), 3).passed());
    CHECK(verify_site_axioms(Site::connections(), 3).passed());
    CHECK(verify_site_axioms(Site::sigma(), 2).passed());
    CHECK(verify_site_axioms(Site::crossed(build_sigma_table(2)), 2).passed());
}

TEST_CASE("span identities hold on the shipped sites") {
    CHECK(verify_span_identities(Site::plain(), 3).passed());
    CHECK(verify_span_identities(Site::connections(), 2).passed());
    CHECK(verify_span_identities(Site::sigma(), 2).passed());
}

TEST_CASE("cube axioms hold on the shipped sites") {
    CHECK(verify_cube_axioms(Site::plain(), 3).passed());
    CHECK(verify_cube_axioms(Site::connections(), 2).passed());
    CHECK(verify_cube_axioms(Site::sigma(), 2).passed());
}

TEST_CASE("presheaf laws hold at low degree on the shipped sites") {
    CHECK(verify_presheaf_laws(Site::plain(), 2).passed());
    CHECK(verify_presheaf_laws(Site::connections(), 2).passed());
    CHECK(verify_presheaf_laws(Site::sigma(), 1).passed());
}

TEST_CASE("topology laws hold at low degree on the shipped sites") {
    CHECK(verify_topology(Site::plain(), 2).passed());
    CHECK(verify_topology(Site::connections(), 2).passed());
    CHECK(verify_topology(Site::sigma(), 2).passed());
}

TEST_CASE("reports carry named results with check counts") {
    Report r = verify_cube_axioms(Site::plain(), 2);
    CHECK(r.suite == "cube-axioms");
    CHECK(r.site == "plain");
    CHECK(r.max_degree == 2);
    CHECK(!r.results.empty());
    CHECK(r.total_checks() > 0);
    bool found = false;
    for (const CheckResult& c : r.results) found = found || c.name == "normal-form-bijection";
    CHECK(found);
    std::string text = r.to_text();
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("cube-axioms") != std::string::npos);
}

TEST_CASE("a corrupted crossed table fails verification with a witness, not a crash") {
    CrossedTable bad = build_sigma_table(2);
    // break the unit law of the arity-2 group: t . id = id instead of t
    bad.mult[2][1][0] = 0;
    Report r = verify_site_axioms(Site::crossed(std::move(bad)), 2);
    CHECK(!r.passed());
    bool witnessed = false;
    for (const CheckResult& c : r.results)
        if (!c.passed && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("a crossed table with a broken action fails the crossed-group laws") {
    CrossedTable bad = build_sigma_table(2);
    // make the transposition act non-bijectively on the maps 1 -> 2, which
    // contradicts the action-composition law t.(t.f) = (t.t).f = f
    auto& row = bad.action[1][2][1];
    row[0] = row[1];
    Report r = verify_site_axioms(Site::crossed(std::move(bad)), 2);
    CHECK(!r.passed());
}
