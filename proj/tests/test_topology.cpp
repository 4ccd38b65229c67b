#include <doctest.h>

#include <random>

#include "cubecat/homology.hpp"
#include "cubecat/json_io.hpp"
#include "cubecat/presheaf.hpp"
#include "cubecat/simplicial.hpp"
#include "oracles.hpp"

using namespace cubecat;

namespace {

std::shared_ptr<const CubeSite> make_site(const Site& s) {
    return std::make_shared<const CubeSite>(s);
}

std::vector<HomologyGroup> homology_of(const Presheaf& X, int top) {
    Realization R = realize(X, top + 1);
    return homology(R.space, top);
}

bool is_group(const HomologyGroup& g, int betti, std::vector<long long> torsion = {}) {
    return g.betti == betti && g.torsion == torsion;
}

} // namespace

TEST_CASE("nerves of Boolean lattices: counts, identities, products") {
    for (int n = 0; n <= 3; ++n) {
        SimplicialSet N = nerve_boolean(n, 4);
        for (int k = 0; k <= 4; ++k)
            CHECK(N.count(k) == oracle::chain_count(n, k));
        std::string witness;
        CHECK(check_simplicial_identities(N, &witness));
        CHECK(euler_characteristic(N) == 1);
    }
    SimplicialSet prod = product(nerve_boolean(1, 4), nerve_boolean(1, 4));
    SimplicialSet two = nerve_boolean(2, 4);
    std::string witness;
    CHECK(check_simplicial_identities(prod, &witness));
    for (int k = 0; k <= 4; ++k) CHECK(prod.count(k) == two.count(k));
}

TEST_CASE("realization of representables is the nerve of the cube") {
    for (const Site& s : {Site::plain(), Site::connections(), Site::sigma()}) {
        auto site = make_site(s);
        int D = s.has_twists() ? 2 : 3;
        for (int r = 0; r <= D; ++r) {
            Presheaf X = representable(site, D, r);
            Realization R = realize(X, D + 1);
            std::string witness;
            CHECK(check_simplicial_identities(R.space, &witness));
            for (int k = 0; k <= D + 1; ++k)
                CHECK(R.space.count(k) == oracle::chain_count(r, k));
            CHECK(euler_characteristic(R.space) == 1);
        }
    }
}

TEST_CASE("realization of boundaries is a sphere") {
    for (const Site& s : {Site::plain(), Site::connections()}) {
        auto site = make_site(s);
        const int D = 3;
        for (int r = 1; r <= 3; ++r) {
            SubPresheaf b = boundary(site, D, r);
            Realization R = realize(b.presheaf, D + 1);
            std::string witness;
            CHECK(check_simplicial_identities(R.space, &witness));
            for (int k = 0; k <= D + 1; ++k) {
                long long expect = oracle::chain_count(r, k);
                // remove the chains that stay inside the open cell: those
                // whose switch tuple avoids the boundary, k^r of them
                long long inner = 1;
                for (int i = 0; i < r; ++i) inner *= k;
                CHECK(R.space.count(k) == expect - inner);
            }
            CHECK(euler_characteristic(R.space) == (r % 2 == 1 ? 2 : 0));
            // the realized inclusion embeds the sphere into the disk
            Realization RD = realize(representable(site, D, r), D + 1);
            SimplicialMap inc = realize_map(R, RD, b.inclusion);
            CHECK(simplicial_map_injective(inc));
            CHECK(simplicial_map_natural(R.space, RD.space, inc));
        }
    }
}

TEST_CASE("realization refuses truncations beyond the safe bound") {
    auto site = make_site(Site::plain());
    Presheaf X = representable(site, 2, 1);
    CHECK_THROWS_AS((void)realize(X, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)realize(X, -1), std::invalid_argument);
    (void)realize(X, 3); // K = D + 1 is the last admissible truncation
}

TEST_CASE("normalized chains form a complex") {
    auto site = make_site(Site::connections());
    SubPresheaf b = boundary(site, 3, 2);
    Realization R = realize(b.presheaf, 3);
    ChainComplex C = normalized_chains(R.space, 2);
    std::string witness;
    CHECK(check_chain_complex(C, &witness));
    CHECK(C.ranks.size() == 3);
}

TEST_CASE("homology of disks and spheres") {
    for (const Site& s : {Site::plain(), Site::connections()}) {
        auto site = make_site(s);
        const int D = 3;
        // disks: contractible in every degree
        for (int r = 0; r <= 3; ++r) {
            auto H = homology_of(representable(site, D, r), std::min(r + 1, D));
            CHECK(is_group(H[0], 1));
            for (size_t k = 1; k < H.size(); ++k) CHECK(is_group(H[k], 0));
        }
        // spheres: S^0, S^1, S^2
        auto H1 = homology_of(boundary(site, D, 1).presheaf, 1);
        CHECK(is_group(H1[0], 2));
        CHECK(is_group(H1[1], 0));
        auto H2 = homology_of(boundary(site, D, 2).presheaf, 1);
        CHECK(is_group(H2[0], 1));
        CHECK(is_group(H2[1], 1));
        auto H3 = homology_of(boundary(site, D, 3).presheaf, 2);
        CHECK(is_group(H3[0], 1));
        CHECK(is_group(H3[1], 0));
        CHECK(is_group(H3[2], 1));
    }
}

TEST_CASE("homology of a glued circle") {
    auto site = make_site(Site::plain());
    const int D = 2;
    Presheaf pt = representable(site, D, 0);
    Presheaf edge = representable(site, D, 1);
    PresheafMap end0 = yoneda_map(site, D, face(site->base(), Subset(1, 0), Subset::empty(1)));
    PresheafMap end1 = yoneda_map(site, D, face(site->base(), Subset(1, 0), Subset(1, 1)));
    Colimit s1 = coequalizer(pt, edge, end0, end1);
    auto H = homology_of(s1.presheaf, 1);
    CHECK(is_group(H[0], 1));
    CHECK(is_group(H[1], 1));
}

TEST_CASE("smith normal form: frozen examples and certificates") {
    {
        SmithResult r = smith_normal_form({{2, 0}, {0, 3}});
        CHECK(r.invariants == std::vector<long long>{1, 6});
        CHECK(check_smith_certificate({{2, 0}, {0, 3}}, r));
    }
    {
        SmithResult r = smith_normal_form({{0, 0}, {0, 0}});
        CHECK(r.invariants.empty());
        CHECK(check_smith_certificate({{0, 0}, {0, 0}}, r));
    }
    {
        IntMatrix id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        SmithResult r = smith_normal_form(id3);
        CHECK(r.invariants == std::vector<long long>{1, 1, 1});
        CHECK(check_smith_certificate(id3, r));
    }
    {
        // a matrix with genuine torsion: invariants (1, 2)
        IntMatrix m = {{1, 1}, {1, -1}};
        SmithResult r = smith_normal_form(m);
        CHECK(r.invariants == std::vector<long long>{1, 2});
        CHECK(check_smith_certificate(m, r));
    }
}

TEST_CASE("smith invariants agree with the determinantal-divisor oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        IntMatrix m(static_cast<size_t>(rows), std::vector<long long>(static_cast<size_t>(cols)));
        for (auto& row : m)
            for (auto& v : row) v = entry(rng);
        SmithResult r = smith_normal_form(m);
        CHECK(check_smith_certificate(m, r));
        CHECK(r.invariants == oracle::smith_invariants_minors(m));
    }
}
