#include <doctest.h>

#include "cubecat/span.hpp"
#include "oracles.hpp"

using namespace cubecat;

namespace {

// Every span src -> dst: a choice of gamma below src plus a base morphism
// from |gamma|.
std::vector<Span> all_spans(const Site& s, int m, int n) {
    std::vector<Span> out;
    for (uint32_t g = 0; g < (1u << m); ++g) {
        Subset gamma(m, g);
        for (const BaseMorphism& f : s.homs(gamma.size(), n))
            out.push_back(Span{m, n, gamma, f});
    }
    return out;
}

std::vector<Site> shipped_sites() { return {Site::plain(), Site::connections(), Site::sigma()}; }

} // namespace

TEST_CASE("span identities are units and daggers are sections") {
    for (const Site& s : shipped_sites()) {
        for (int m = 0; m <= 3; ++m) {
            Span id = span_identity(s, m);
            CHECK(id.gamma.is_full());
            for (int n = 0; n <= 3; ++n)
                for (const Span& a : all_spans(s, m, n)) {
                    CHECK(span_valid(s, a));
                    CHECK(span_compose(s, a, span_identity(s, m)) == a);
                    CHECK(span_compose(s, span_identity(s, n), a) == a);
                }
            // dagger(gamma) . (gamma as injection) = identity of |gamma|
            for (uint32_t g = 0; g < (1u << m); ++g) {
                Subset gamma(m, g);
                Span inj = span_of_base(s.injection(gamma));
                CHECK(span_compose(s, dagger(s, gamma), inj) ==
                      span_identity(s, gamma.size()));
            }
        }
    }
}

TEST_CASE("span composition is associative") {
    for (const Site& s : shipped_sites()) {
        const int D = 2;
        for (int m = 0; m <= D; ++m)
            for (int n = 0; n <= D; ++n)
                for (int q = 0; q <= D; ++q)
                    for (int r = 0; r <= D; ++r)
                        for (const Span& a : all_spans(s, m, n))
                            for (const Span& b : all_spans(s, n, q))
                                for (const Span& c : all_spans(s, q, r)) {
                                    Span left = span_compose(s, c, span_compose(s, b, a));
                                    Span right = span_compose(s, span_compose(s, c, b), a);
                                    CHECK(left == right);
                                }
    }
}

TEST_CASE("span composition of base morphisms is plain composition") {
    for (const Site& s : shipped_sites()) {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (int q = 0; q <= 3; ++q)
                    for (const BaseMorphism& f : s.homs(m, n))
                        for (const BaseMorphism& g : s.homs(n, q))
                            CHECK(span_compose(s, span_of_base(g), span_of_base(f)) ==
                                  span_of_base(s.compose(g, f)));
    }
}

TEST_CASE("pushforward along spans is functorial and computes the image") {
    for (const Site& s : shipped_sites()) {
        int D = s.has_twists() ? 2 : 3;
        for (int m = 0; m <= D; ++m)
            for (int n = 0; n <= D; ++n)
                for (const Span& a : all_spans(s, m, n)) {
                    CHECK(span_image(a) == span_pushforward(s, a, Subset::full(m)));
                    // direct formula: push the restriction of eta to gamma
                    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                        Subset eta(m, mask);
                        oracle::Map u = s.underlying(a.f);
                        uint32_t restricted = 0;
                        int pos = 0;
                        for (int i = 0; i < m; ++i)
                            if (a.gamma.contains(i)) {
                                if (eta.contains(i)) restricted |= 1u << pos;
                                ++pos;
                            }
                        CHECK(span_pushforward(s, a, eta).bits ==
                              oracle::push_mask(u, restricted));
                    }
                }
        // functoriality over composable pairs at low degree
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                for (int q = 0; q <= 2; ++q)
                    for (const Span& a : all_spans(s, m, n))
                        for (const Span& b : all_spans(s, n, q)) {
                            Span ba = span_compose(s, b, a);
                            for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                                Subset eta(m, mask);
                                CHECK(span_pushforward(s, ba, eta) ==
                                      span_pushforward(s, b, span_pushforward(s, a, eta)));
                            }
                        }
    }
}

TEST_CASE("span validity rejects mismatched components") {
    Site s = Site::connections();
    Span good{2, 1, Subset(2, 0b01), BaseMorphism{1, 1, {0}, 0}};
    CHECK(span_valid(s, good));
    Span bad_leg{2, 1, Subset(2, 0b01), BaseMorphism{2, 1, {0, 0}, 0}};
    CHECK(!span_valid(s, bad_leg));
    Span bad_target{2, 1, Subset(2, 0b01), BaseMorphism{1, 2, {1}, 0}};
    CHECK(!span_valid(s, bad_target));
}
