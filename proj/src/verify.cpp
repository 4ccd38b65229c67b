#include "cubecat/verify.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace cubecat {
namespace {

std::string show(const BaseMorphism& f) {
    std::ostringstream o;
    o << "[";
    for (size_t i = 0; i < f.map.size(); ++i) o << (i ? "," : "") << int(f.map[i]);
    o << "]";
    if (f.twist) o << "t" << f.twist;
    o << ":" << f.src << "->" << f.dst;
    return o.str();
}

std::string show(const Span& s) {
    return "(gamma=" + to_string(s.gamma) + ", f=" + show(s.f) + ")";
}

std::string show(const CubeMorphism& m) { return show(m.span) + " xi=" + to_string(m.xi); }

// Local cache: Site::homs builds its vector per call.
class HomCache {
public:
    explicit HomCache(const Site& site) : site_(site) {}
    const std::vector<BaseMorphism>& operator()(int m, int n) {
        auto it = cache_.find({m, n});
        if (it == cache_.end()) it = cache_.emplace(std::make_pair(m, n), site_.homs(m, n)).first;
        return it->second;
    }

private:
    const Site& site_;
    std::map<std::pair<int, int>, std::vector<BaseMorphism>> cache_;
};

std::vector<Span> all_spans(HomCache& H, int m, int n) {
    std::vector<Span> out;
    for (uint32_t g = 0; g < (1u << m); ++g) {
        Subset gamma(m, g);
        for (const BaseMorphism& f : H(gamma.size(), n)) out.push_back({m, n, gamma, f});
    }
    return out;
}

// The marker projection Lambda(xi) = xi . xi^dagger as an endo-span.
Span lambda_span(const Site& site, const Subset& xi) {
    return Span{xi.deg, xi.deg, xi, site.injection(xi)};
}

Span lambda_complement(const Site& site, const Subset& xi) { return lambda_span(site, neg(xi)); }

bool map_injective(const std::vector<uint8_t>& m) {
    uint32_t seen = 0;
    for (uint8_t v : m) {
        if (seen & (1u << v)) return false;
        seen |= 1u << v;
    }
    return true;
}

using SpanKey = std::tuple<uint32_t, uint16_t, std::vector<uint8_t>>;
SpanKey span_key(const Span& s) { return {s.gamma.bits, s.f.twist, s.f.map}; }

// Associativity over composition tables: `lists(m,n)` enumerates hom-sets,
// `comp` composes, `index` resolves a morphism back to its position. Checks
// (h.g).f == h.(g.f) for every composable triple with objects <= D using
// integer tables, so each triple costs lookups, not compositions.
template <class T, class Lists, class Comp, class Index>
bool check_associativity(int D, Lists&& lists, Comp&& comp, Index&& index, long long& checks,
                         std::string& witness) {
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> tables;
    for (int q = 0; q <= D; ++q)
        for (int r = 0; r <= D; ++r)
            for (int s = 0; s <= D; ++s) {
                const std::vector<T>& A = lists(r, s);
                const std::vector<T>& B = lists(q, r);
                std::vector<std::vector<int>> tab(A.size(), std::vector<int>(B.size()));
                for (size_t i = 0; i < A.size(); ++i)
                    for (size_t j = 0; j < B.size(); ++j)
                        tab[i][j] = index(q, s, comp(A[i], B[j]));
                tables[{q, r, s}] = std::move(tab);
            }
    for (int p = 0; p <= D; ++p)
        for (int q = 0; q <= D; ++q)
            for (int r = 0; r <= D; ++r)
                for (int s = 0; s <= D; ++s) {
                    const auto& hg = tables[{q, r, s}];
                    const auto& hg_f = tables[{p, q, s}];
                    const auto& gf = tables[{p, q, r}];
                    const auto& h_gf = tables[{p, r, s}];
                    size_t nh = lists(r, s).size(), ng = lists(q, r).size(),
                           nf = lists(p, q).size();
                    for (size_t h = 0; h < nh; ++h)
                        for (size_t g = 0; g < ng; ++g) {
                            int t1 = hg[h][g];
                            for (size_t f = 0; f < nf; ++f) {
                                ++checks;
                                if (hg_f[t1][f] != h_gf[h][gf[g][f]]) {
                                    std::ostringstream o;
                                    o << "objects (" << p << "," << q << "," << r << "," << s
                                      << ") indices h=" << h << " g=" << g << " f=" << f;
                                    witness = o.str();
                                    return false;
                                }
                            }
                        }
                }
    return true;
}

} // namespace

Report verify_site_axioms(const Site& site, int D) {
    Report rep;
    rep.suite = "site-axioms";
    rep.site = site.selector();
    rep.max_degree = D;
    HomCache H(site);

    // (DI1): distinguished injections are monomorphisms — postcomposition
    // with any injection is injective on every hom-set.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t d = 0; d < (1u << n) && ok; ++d) {
                BaseMorphism inj = site.injection(Subset(n, d));
                for (int m = 0; m <= D && ok; ++m) {
                    std::set<std::pair<std::vector<uint8_t>, uint16_t>> images;
                    const auto& hom = H(m, inj.src);
                    for (const BaseMorphism& g : hom) {
                        BaseMorphism c = site.compose(inj, g);
                        images.emplace(c.map, c.twist);
                        ++checks;
                    }
                    if (images.size() != hom.size()) {
                        ok = false;
                        wit = "delta=" + to_string(Subset(n, d)) + " not monic on hom(" +
                              std::to_string(m) + ",...)";
                    }
                }
            }
        rep.add("di1-injections-monic", ok, checks, wit);
    }

    // (DI2): identities and composites of distinguished injections are
    // distinguished.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n <= D; ++n) {
            ++checks;
            if (!site.is_distinguished(site.identity(n))) {
                ok = false;
                wit = "identity at " + std::to_string(n);
            }
        }
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t d2 = 0; d2 < (1u << n) && ok; ++d2) {
                Subset outer(n, d2);
                int k = outer.size();
                for (uint32_t d1 = 0; d1 < (1u << k) && ok; ++d1) {
                    BaseMorphism c =
                        site.compose(site.injection(outer), site.injection(Subset(k, d1)));
                    ++checks;
                    if (!site.is_distinguished(c)) {
                        ok = false;
                        wit = to_string(outer) + " after " + to_string(Subset(k, d1));
                    }
                }
            }
        rep.add("di2-closed-under-composition", ok, checks, wit);
    }

    // (DI3): every morphism factors strictly uniquely as a distinguished
    // injection after a full-image morphism.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    auto fact = site.factorize(f);
                    bool good = site.is_degeneracy(fact.surj) &&
                                site.compose(site.injection(fact.image), fact.surj) == f;
                    int solutions = 0;
                    for (uint32_t d = 0; d < (1u << n); ++d) {
                        Subset delta(n, d);
                        for (const BaseMorphism& s : H(m, delta.size())) {
                            if (!site.is_degeneracy(s)) continue;
                            if (site.compose(site.injection(delta), s) == f) ++solutions;
                        }
                    }
                    ++checks;
                    if (!good || solutions != 1) {
                        ok = false;
                        wit = show(f) + " solutions=" + std::to_string(solutions);
                        break;
                    }
                }
        rep.add("di3-unique-factorization", ok, checks, wit);
    }

    // Semicompleteness: the pullback of a distinguished injection along any
    // morphism exists, commutes, is the greatest such subobject, and its
    // restricted morphism is strictly unique.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    for (uint32_t d = 0; d < (1u << n); ++d) {
                        Subset delta(n, d);
                        auto pb = site.pullback(f, delta);
                        bool commutes = site.compose(f, site.injection(pb.sub)) ==
                                        site.compose(site.injection(delta), pb.restricted);
                        bool below = leq(site.pushforward(f, pb.sub), delta);
                        bool greatest = true;
                        for (int i = 0; i < m; ++i) {
                            if (pb.sub.contains(i)) continue;
                            if (leq(site.pushforward(f, Subset(m, 1u << i)), delta))
                                greatest = false;
                        }
                        int sections = 0;
                        for (const BaseMorphism& g : H(pb.sub.size(), delta.size()))
                            if (site.compose(site.injection(delta), g) ==
                                site.compose(f, site.injection(pb.sub)))
                                ++sections;
                        ++checks;
                        if (!(commutes && below && greatest && sections == 1)) {
                            ok = false;
                            wit = show(f) + " delta=" + to_string(delta);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("semicomplete-greatest-pullback", ok, checks, wit);
    }

    // Pushforward is a semilattice map: preserves joins and the bottom.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    if (!(site.pushforward(f, Subset::empty(m)) == Subset::empty(n))) {
                        ok = false;
                        wit = show(f) + " bottom";
                        break;
                    }
                    ++checks;
                    for (uint32_t a = 0; a < (1u << m) && ok; ++a)
                        for (uint32_t b = 0; b < (1u << m); ++b) {
                            Subset sa(m, a), sb(m, b);
                            ++checks;
                            if (!(site.pushforward(f, join(sa, sb)) ==
                                  join(site.pushforward(f, sa), site.pushforward(f, sb)))) {
                                ok = false;
                                wit = show(f) + " a=" + to_string(sa) + " b=" + to_string(sb);
                                break;
                            }
                        }
                    if (!ok) break;
                }
        rep.add("pushforward-preserves-joins", ok, checks, wit);
    }

    // Galois connection between pushforward and pullback.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    Subset im = site.pushforward(f, Subset::full(m));
                    for (uint32_t a = 0; a < (1u << m); ++a) {
                        Subset sa(m, a);
                        ++checks;
                        if (!leq(sa, site.pullback(f, site.pushforward(f, sa)).sub)) {
                            ok = false;
                            wit = show(f) + " unit at " + to_string(sa);
                            break;
                        }
                    }
                    for (uint32_t b = 0; b < (1u << n) && ok; ++b) {
                        Subset sb(n, b);
                        ++checks;
                        if (!(site.pushforward(f, site.pullback(f, sb).sub) == meet(sb, im))) {
                            ok = false;
                            wit = show(f) + " counit at " + to_string(sb);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("galois-connection", ok, checks, wit);
    }

    // For injections pullback.pushforward = id; for degeneracies
    // pushforward.pullback = id; pullbacks of degeneracies along injections
    // stay degeneracies (stability).
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t d = 0; d < (1u << n) && ok; ++d) {
                BaseMorphism inj = site.injection(Subset(n, d));
                for (uint32_t a = 0; a < (1u << inj.src); ++a) {
                    Subset sa(inj.src, a);
                    ++checks;
                    if (!(site.pullback(inj, site.pushforward(inj, sa)).sub == sa)) {
                        ok = false;
                        wit = "inj " + to_string(Subset(n, d)) + " at " + to_string(sa);
                        break;
                    }
                }
            }
        rep.add("injection-pullback-section", ok, checks, wit);

        ok = true;
        checks = 0;
        wit.clear();
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    if (!site.is_degeneracy(f)) continue;
                    for (uint32_t b = 0; b < (1u << n); ++b) {
                        Subset sb(n, b);
                        ++checks;
                        if (!(site.pushforward(f, site.pullback(f, sb).sub) == sb)) {
                            ok = false;
                            wit = show(f) + " at " + to_string(sb);
                            break;
                        }
                    }
                    for (uint32_t d = 0; d < (1u << n) && ok; ++d) {
                        ++checks;
                        if (!site.is_degeneracy(site.pullback(f, Subset(n, d)).restricted)) {
                            ok = false;
                            wit = show(f) + " along " + to_string(Subset(n, d));
                        }
                    }
                    if (!ok) break;
                }
        rep.add("stability", ok, checks, wit);
    }

    // Boolean complements in every slice.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t a = 0; a < (1u << n); ++a) {
                Subset sa(n, a);
                ++checks;
                if (!(meet(sa, neg(sa)).is_empty() && join(sa, neg(sa)).is_full() &&
                      neg(neg(sa)) == sa)) {
                    ok = false;
                    wit = to_string(sa);
                    break;
                }
            }
        rep.add("boolean-complement", ok, checks, wit);
    }

    // Coherence: pullback preserves joins and the bottom.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    ++checks;
                    if (!site.pullback(f, Subset::empty(n)).sub.is_empty()) {
                        ok = false;
                        wit = show(f) + " bottom";
                        break;
                    }
                    for (uint32_t a = 0; a < (1u << n) && ok; ++a)
                        for (uint32_t b = 0; b < (1u << n); ++b) {
                            Subset sa(n, a), sb(n, b);
                            ++checks;
                            if (!(site.pullback(f, join(sa, sb)).sub ==
                                  join(site.pullback(f, sa).sub, site.pullback(f, sb).sub))) {
                                ok = false;
                                wit = show(f) + " a=" + to_string(sa) + " b=" + to_string(sb);
                                break;
                            }
                        }
                    if (!ok) break;
                }
        rep.add("pullback-preserves-joins", ok, checks, wit);
    }

    // Maximum saturated subobject: saturated, below delta, and above every
    // saturated subobject below delta (checked against brute force).
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        auto saturated = [&](const BaseMorphism& f, const Subset& g) {
            return site.pullback(f, site.pushforward(f, g)).sub == g;
        };
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    for (uint32_t d = 0; d < (1u << m); ++d) {
                        Subset delta(m, d);
                        Subset d0 = site.max_saturated(f, delta);
                        bool good = saturated(f, d0) && leq(d0, delta);
                        for (uint32_t g = 0; g < (1u << m) && good; ++g) {
                            Subset ga(m, g);
                            if (saturated(f, ga) && leq(ga, delta) && !leq(ga, d0)) good = false;
                        }
                        ++checks;
                        if (!good) {
                            ok = false;
                            wit = show(f) + " delta=" + to_string(delta);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("max-saturated", ok, checks, wit);
    }

    // factorize is a bijection onto (degeneracy, subset) pairs.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n) {
                std::set<std::tuple<std::vector<uint8_t>, uint16_t, uint32_t>> seen;
                const auto& hom = H(m, n);
                for (const BaseMorphism& f : hom) {
                    auto fact = site.factorize(f);
                    seen.emplace(fact.surj.map, fact.surj.twist, fact.image.bits);
                    ++checks;
                }
                long long pairs = 0;
                for (int k = 0; k <= n; ++k) {
                    long long degens = 0;
                    for (const BaseMorphism& s : H(m, k))
                        if (site.is_degeneracy(s)) ++degens;
                    long long subsets = 0;
                    for (uint32_t d = 0; d < (1u << n); ++d)
                        if (Subset(n, d).size() == k) ++subsets;
                    pairs += degens * subsets;
                }
                if (seen.size() != hom.size() || pairs != static_cast<long long>(hom.size())) {
                    ok = false;
                    wit = "hom(" + std::to_string(m) + "," + std::to_string(n) + ")";
                }
            }
        rep.add("factorize-bijection", ok, checks, wit);
    }

    // Identity and associativity of base composition.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    ++checks;
                    if (!(site.compose(site.identity(n), f) == f &&
                          site.compose(f, site.identity(m)) == f)) {
                        ok = false;
                        wit = show(f);
                        break;
                    }
                }
        rep.add("identity-laws", ok, checks, wit);

        ok = true;
        checks = 0;
        wit.clear();
        for (int p = 0; p <= D && ok; ++p)
            for (int q = 0; q <= D && ok; ++q)
                for (int r = 0; r <= D && ok; ++r)
                    for (int s = 0; s <= D && ok; ++s)
                        for (const BaseMorphism& h : H(r, s)) {
                            for (const BaseMorphism& g : H(q, r)) {
                                BaseMorphism hg = site.compose(h, g);
                                for (const BaseMorphism& f : H(p, q)) {
                                    ++checks;
                                    if (!(site.compose(hg, f) ==
                                          site.compose(h, site.compose(g, f)))) {
                                        ok = false;
                                        wit = show(h) + " . " + show(g) + " . " + show(f);
                                        break;
                                    }
                                }
                                if (!ok) break;
                            }
                            if (!ok) break;
                        }
        rep.add("composition-associativity", ok, checks, wit);
    }

    if (site.has_twists()) {
        // Group laws in every arity.
        {
            bool ok = true;
            long long checks = 0;
            std::string wit;
            for (int m = 0; m <= D && ok; ++m) {
                int order = site.group_order(m);
                for (int a = 0; a < order && ok; ++a) {
                    uint16_t ua = static_cast<uint16_t>(a);
                    ++checks;
                    if (site.group_mult(m, 0, ua) != ua || site.group_mult(m, ua, 0) != ua ||
                        site.group_mult(m, ua, site.group_inverse(m, ua)) != 0 ||
                        site.group_mult(m, site.group_inverse(m, ua), ua) != 0) {
                        ok = false;
                        wit = "arity " + std::to_string(m) + " element " + std::to_string(a);
                        break;
                    }
                    for (int b = 0; b < order && ok; ++b)
                        for (int c = 0; c < order; ++c) {
                            ++checks;
                            uint16_t ub = static_cast<uint16_t>(b), uc = static_cast<uint16_t>(c);
                            if (site.group_mult(m, site.group_mult(m, ua, ub), uc) !=
                                site.group_mult(m, ua, site.group_mult(m, ub, uc))) {
                                ok = false;
                                wit = "arity " + std::to_string(m) + " assoc";
                                break;
                            }
                        }
                }
            }
            rep.add("group-laws", ok, checks, wit);
        }

        // Left action laws: 1.f = f and (xy).f = x.(y.f).
        {
            bool ok = true;
            long long checks = 0;
            std::string wit;
            for (int m = 0; m <= D && ok; ++m)
                for (int n = 0; n <= D && ok; ++n)
                    for (const auto& f : site.base_maps(m, n)) {
                        ++checks;
                        if (site.act(0, f, n) != f) {
                            ok = false;
                            wit = "unit action";
                            break;
                        }
                        int order = site.group_order(n);
                        for (int x = 0; x < order && ok; ++x)
                            for (int y = 0; y < order; ++y) {
                                ++checks;
                                auto lhs = site.act(
                                    site.group_mult(n, static_cast<uint16_t>(x),
                                                    static_cast<uint16_t>(y)),
                                    f, n);
                                auto rhs = site.act(static_cast<uint16_t>(x),
                                                    site.act(static_cast<uint16_t>(y), f, n), n);
                                if (lhs != rhs) {
                                    ok = false;
                                    wit = "x=" + std::to_string(x) + " y=" + std::to_string(y);
                                    break;
                                }
                            }
                        if (!ok) break;
                    }
            rep.add("action-laws", ok, checks, wit);
        }

        // Restriction is a presheaf: along identities and composites.
        {
            bool ok = true;
            long long checks = 0;
            std::string wit;
            for (int n = 0; n <= D && ok; ++n) {
                auto idm = site.identity(n).map;
                for (int y = 0; y < site.group_order(n); ++y) {
                    ++checks;
                    if (site.restrict_twist(idm, n, static_cast<uint16_t>(y)) != y) {
                        ok = false;
                        wit = "identity restriction arity " + std::to_string(n);
                        break;
                    }
                }
            }
            for (int t = 0; t <= D && ok; ++t)
                for (int s = 0; s <= D && ok; ++s)
                    for (int r = 0; r <= D && ok; ++r)
                        for (const auto& g : site.base_maps(s, r)) {
                            for (const auto& f : site.base_maps(t, s)) {
                                std::vector<uint8_t> gf(f.size());
                                for (size_t i = 0; i < f.size(); ++i) gf[i] = g[f[i]];
                                for (int y = 0; y < site.group_order(r); ++y) {
                                    ++checks;
                                    uint16_t uy = static_cast<uint16_t>(y);
                                    if (site.restrict_twist(gf, r, uy) !=
                                        site.restrict_twist(f, s, site.restrict_twist(g, r, uy))) {
                                        ok = false;
                                        wit = "presheaf composite";
                                        break;
                                    }
                                }
                                if (!ok) break;
                            }
                            if (!ok) break;
                        }
            rep.add("restriction-presheaf", ok, checks, wit);
        }

        // (CG1): x.(fg) = (x.f)(f^*x.g)
        {
            bool ok = true;
            long long checks = 0;
            std::string wit;
            for (int r = 0; r <= D && ok; ++r)
                for (int s = 0; s <= D && ok; ++s)
                    for (int t = 0; t <= D && ok; ++t)
                        for (const auto& f : site.base_maps(s, r)) {
                            for (const auto& g : site.base_maps(t, s)) {
                                std::vector<uint8_t> fg(g.size());
                                for (size_t i = 0; i < g.size(); ++i) fg[i] = f[g[i]];
                                for (int x = 0; x < site.group_order(r); ++x) {
                                    uint16_t ux = static_cast<uint16_t>(x);
                                    auto lhs = site.act(ux, fg, r);
                                    auto xf = site.act(ux, f, r);
                                    auto xg = site.act(site.restrict_twist(f, r, ux), g, s);
                                    std::vector<uint8_t> rhs(xg.size());
                                    for (size_t i = 0; i < xg.size(); ++i) rhs[i] = xf[xg[i]];
                                    ++checks;
                                    if (lhs != rhs) {
                                        ok = false;
                                        wit = "x=" + std::to_string(x);
                                        break;
                                    }
                                }
                                if (!ok) break;
                            }
                            if (!ok) break;
                        }
            rep.add("cg1-action-composition", ok, checks, wit);
        }

        // (CG2): f^*(xy) = ((y.f)^*x)(f^*y)
        {
            bool ok = true;
            long long checks = 0;
            std::string wit;
            for (int r = 0; r <= D && ok; ++r)
                for (int s = 0; s <= D && ok; ++s)
                    for (const auto& f : site.base_maps(s, r)) {
                        int order = site.group_order(r);
                        for (int x = 0; x < order && ok; ++x)
                            for (int y = 0; y < order; ++y) {
                                uint16_t ux = static_cast<uint16_t>(x),
                                         uy = static_cast<uint16_t>(y);
                                uint16_t lhs =
                                    site.restrict_twist(f, r, site.group_mult(r, ux, uy));
                                uint16_t rhs = site.group_mult(
                                    s, site.restrict_twist(site.act(uy, f, r), r, ux),
                                    site.restrict_twist(f, r, uy));
                                ++checks;
                                if (lhs != rhs) {
                                    ok = false;
                                    wit = "x=" + std::to_string(x) + " y=" + std::to_string(y);
                                    break;
                                }
                            }
                        if (!ok) break;
                    }
            rep.add("cg2-restriction-multiplication", ok, checks, wit);
        }

        // (CG3): x.id = id; (CG4): f^*1 = 1.
        {
            bool ok = true;
            long long checks = 0;
            std::string wit;
            for (int r = 0; r <= D && ok; ++r) {
                auto idm = site.identity(r).map;
                for (int x = 0; x < site.group_order(r); ++x) {
                    ++checks;
                    if (site.act(static_cast<uint16_t>(x), idm, r) != idm) {
                        ok = false;
                        wit = "cg3 at arity " + std::to_string(r);
                        break;
                    }
                }
            }
            for (int r = 0; r <= D && ok; ++r)
                for (int s = 0; s <= D && ok; ++s)
                    for (const auto& f : site.base_maps(s, r)) {
                        ++checks;
                        if (site.restrict_twist(f, r, 0) != 0) {
                            ok = false;
                            wit = "cg4";
                            break;
                        }
                    }
            rep.add("cg3-cg4-units", ok, checks, wit);
        }
    }

    return rep;
}

Report verify_span_identities(const Site& site, int D) {
    Report rep;
    rep.suite = "span-identities";
    rep.site = site.selector();
    rep.max_degree = D;
    HomCache H(site);
    std::map<std::pair<int, int>, std::vector<Span>> span_cache;
    auto spans = [&](int m, int n) -> const std::vector<Span>& {
        auto it = span_cache.find({m, n});
        if (it == span_cache.end())
            it = span_cache.emplace(std::make_pair(m, n), all_spans(H, m, n)).first;
        return it->second;
    };

    // gamma^dagger . gamma = id
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t g = 0; g < (1u << n); ++g) {
                Subset gamma(n, g);
                Span composite = span_compose(site, dagger(site, gamma),
                                              span_of_base(site.injection(gamma)));
                ++checks;
                if (!(composite == span_identity(site, gamma.size()))) {
                    ok = false;
                    wit = to_string(gamma);
                    break;
                }
            }
        rep.add("dagger-section", ok, checks, wit);
    }

    // Interchange on pullback squares of injections:
    // delta1^dagger . delta2 = eta1 . eta2^dagger and symmetrically.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int r = 0; r <= D && ok; ++r)
            for (uint32_t d1 = 0; d1 < (1u << r) && ok; ++d1)
                for (uint32_t d2 = 0; d2 < (1u << r); ++d2) {
                    Subset delta1(r, d1), delta2(r, d2);
                    Subset common = meet(delta1, delta2);
                    Subset eta1 = compress(delta1, common);
                    Subset eta2 = compress(delta2, common);
                    Span lhs1 = span_compose(site, dagger(site, delta1),
                                             span_of_base(site.injection(delta2)));
                    Span rhs1 = span_compose(site, span_of_base(site.injection(eta1)),
                                             dagger(site, eta2));
                    Span lhs2 = span_compose(site, dagger(site, delta2),
                                             span_of_base(site.injection(delta1)));
                    Span rhs2 = span_compose(site, span_of_base(site.injection(eta2)),
                                             dagger(site, eta1));
                    checks += 2;
                    if (!(lhs1 == rhs1 && lhs2 == rhs2)) {
                        ok = false;
                        wit = to_string(delta1) + " vs " + to_string(delta2);
                        break;
                    }
                }
        rep.add("dagger-interchange", ok, checks, wit);
    }

    // The degeneracy/dagger square built from the maximum saturated
    // subobject commutes.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int r0 = 0; r0 <= D && ok; ++r0)
            for (int r1 = 0; r1 <= D && ok; ++r1)
                for (const BaseMorphism& sigma : H(r0, r1)) {
                    if (!site.is_degeneracy(sigma)) continue;
                    for (uint32_t g = 0; g < (1u << r0); ++g) {
                        Subset gamma(r0, g);
                        Subset gamma0 = site.max_saturated(sigma, gamma);
                        BaseMorphism sg0 = site.compose(sigma, site.injection(gamma0));
                        auto fact = site.factorize(sg0);
                        Span right = span_compose(site, span_of_base(fact.surj),
                                                  dagger(site, compress(gamma, gamma0)));
                        Span bottom = dagger(site, fact.image);
                        Span via_left = span_compose(site, bottom, span_of_base(sigma));
                        Span via_top = span_compose(site, right, dagger(site, gamma));
                        ++checks;
                        if (!(via_left == via_top)) {
                            ok = false;
                            wit = show(sigma) + " gamma=" + to_string(gamma);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("degeneracy-dagger-pushout-square", ok, checks, wit);
    }

    // Monomorphism criterion: monic iff gamma is full and f is injective.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const Span& s : spans(m, n)) {
                    bool predicted =
                        s.gamma.is_full() && map_injective(s.f.map);
                    bool actual = true;
                    for (int p = 0; p <= D && actual; ++p) {
                        std::set<SpanKey> images;
                        for (const Span& u : spans(p, m))
                            images.insert(span_key(span_compose(site, s, u)));
                        if (images.size() != spans(p, m).size()) actual = false;
                    }
                    ++checks;
                    if (predicted != actual) {
                        ok = false;
                        wit = show(s) + (predicted ? " predicted monic" : " predicted non-monic");
                        break;
                    }
                }
        rep.add("monomorphism-criterion", ok, checks, wit);
    }

    // Pushforward through spans is functorial.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int p = 0; p <= D && ok; ++p)
            for (int q = 0; q <= D && ok; ++q)
                for (int r = 0; r <= D && ok; ++r)
                    for (const Span& v : spans(q, r)) {
                        for (const Span& u : spans(p, q)) {
                            Span vu = span_compose(site, v, u);
                            for (uint32_t e = 0; e < (1u << p); ++e) {
                                Subset eta(p, e);
                                ++checks;
                                if (!(span_pushforward(site, vu, eta) ==
                                      span_pushforward(site, v,
                                                       span_pushforward(site, u, eta)))) {
                                    ok = false;
                                    wit = show(v) + " . " + show(u) + " at " + to_string(eta);
                                    break;
                                }
                            }
                            if (!ok) break;
                        }
                        if (!ok) break;
                    }
        rep.add("pushforward-functorial", ok, checks, wit);
    }

    // Identity and associativity of span composition.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const Span& s : spans(m, n)) {
                    ++checks;
                    if (!(span_compose(site, span_identity(site, n), s) == s &&
                          span_compose(site, s, span_identity(site, m)) == s)) {
                        ok = false;
                        wit = show(s);
                        break;
                    }
                }
        rep.add("identity-laws", ok, checks, wit);

        std::map<std::pair<int, int>, std::map<SpanKey, int>> index;
        auto span_index = [&](int m, int n, const Span& s) {
            auto& idx = index[{m, n}];
            if (idx.empty())
                for (size_t i = 0; i < spans(m, n).size(); ++i)
                    idx.emplace(span_key(spans(m, n)[i]), static_cast<int>(i));
            return idx.at(span_key(s));
        };
        ok = true;
        checks = 0;
        wit.clear();
        ok = check_associativity<Span>(
            D, [&](int m, int n) -> const std::vector<Span>& { return spans(m, n); },
            [&](const Span& a, const Span& b) { return span_compose(site, a, b); }, span_index,
            checks, wit);
        rep.add("composition-associativity", ok, checks, wit);
    }

    return rep;
}

Report verify_cube_axioms(const Site& site, int D) {
    Report rep;
    rep.suite = "cube-axioms";
    rep.site = site.selector();
    rep.max_degree = D;
    CubeSite cube(site);

    // Hom counts match the normal-form closed form.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D; ++n) {
                ++checks;
                if (cube.hom_count(m, n) != cube_hom_count_formula(site, m, n)) {
                    ok = false;
                    wit = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
                    break;
                }
            }
        rep.add("hom-count-formula", ok, checks, wit);
    }

    // Normal forms: valid components, reassemble inverts, representation is
    // therefore bijective (counts already match the tuple formula).
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const CubeMorphism& u : cube.homs(m, n)) {
                    NormalForm nf = normal_form(site, u);
                    bool good = nf.gamma.deg == m && nf.delta.deg == n && nf.xi.deg == n &&
                                meet(nf.delta, nf.xi).is_empty() &&
                                site.is_degeneracy(nf.sigma) &&
                                nf.sigma.src == nf.gamma.size() &&
                                nf.sigma.dst == nf.delta.size() &&
                                reassemble(site, nf) == u;
                    ++checks;
                    if (!good) {
                        ok = false;
                        wit = show(u);
                        break;
                    }
                }
        rep.add("normal-form-bijection", ok, checks, wit);
    }

    // Identity laws.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const CubeMorphism& u : cube.homs(m, n)) {
                    ++checks;
                    if (!(cube_compose(site, cube_identity(site, n), u) == u &&
                          cube_compose(site, u, cube_identity(site, m)) == u)) {
                        ok = false;
                        wit = show(u);
                        break;
                    }
                }
        rep.add("identity-laws", ok, checks, wit);
    }

    // Associativity via composition tables.
    {
        long long checks = 0;
        std::string wit;
        bool ok = check_associativity<CubeMorphism>(
            D, [&](int m, int n) -> const std::vector<CubeMorphism>& { return cube.homs(m, n); },
            [&](const CubeMorphism& a, const CubeMorphism& b) {
                return cube_compose(site, a, b);
            },
            [&](int, int, const CubeMorphism& u) { return cube.index_of(u); }, checks, wit);
        rep.add("composition-associativity", ok, checks, wit);
    }

    // (CM1): Lc(f_*a) . f . Lc(a) = Lc(f_*a)^2 . f over the span category.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        HomCache H(site);
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const Span& f : all_spans(H, m, n)) {
                    for (uint32_t a = 0; a < (1u << m); ++a) {
                        Subset sa(m, a);
                        Subset fa = span_pushforward(site, f, sa);
                        Span lc_fa = lambda_complement(site, fa);
                        Span lhs = span_compose(
                            site, lc_fa, span_compose(site, f, lambda_complement(site, sa)));
                        Span rhs = span_compose(site, lc_fa, span_compose(site, lc_fa, f));
                        ++checks;
                        if (!(lhs == rhs)) {
                            ok = false;
                            wit = show(f) + " a=" + to_string(sa);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("cm1-marker-transfer", ok, checks, wit);
    }

    // (CM2): a v b = (Lc(a)_* b) v a in every slice monoid.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t a = 0; a < (1u << n) && ok; ++a)
                for (uint32_t b = 0; b < (1u << n); ++b) {
                    Subset sa(n, a), sb(n, b);
                    Subset moved = span_pushforward(site, lambda_complement(site, sa), sb);
                    ++checks;
                    if (!(join(sa, sb) == join(moved, sa))) {
                        ok = false;
                        wit = to_string(sa) + " " + to_string(sb);
                        break;
                    }
                }
        rep.add("cm2-braiding", ok, checks, wit);
    }

    // Marker projection calculus.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        HomCache H(site);
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    Span sf = span_of_base(f);
                    for (uint32_t x = 0; x < (1u << n); ++x) {
                        Subset xi(n, x);
                        Subset pulled = site.pullback(f, xi).sub;
                        ++checks;
                        if (!(span_compose(site, lambda_span(site, xi), sf) ==
                              span_compose(site, sf, lambda_span(site, pulled)))) {
                            ok = false;
                            wit = show(f) + " xi=" + to_string(xi);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("lambda-naturality", ok, checks, wit);

        ok = true;
        checks = 0;
        wit.clear();
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t g = 0; g < (1u << n) && ok; ++g)
                for (uint32_t x = 0; x < (1u << n); ++x) {
                    Subset gamma(n, g), xi(n, x);
                    Subset pulled = compress(gamma, meet(gamma, xi));
                    ++checks;
                    if (!(span_compose(site, lambda_span(site, pulled), dagger(site, gamma)) ==
                          span_compose(site, dagger(site, gamma), lambda_span(site, xi)))) {
                        ok = false;
                        wit = to_string(gamma) + " xi=" + to_string(xi);
                        break;
                    }
                }
        rep.add("lambda-dagger-commutation", ok, checks, wit);

        ok = true;
        checks = 0;
        wit.clear();
        for (int n = 0; n <= D && ok; ++n)
            for (uint32_t x1 = 0; x1 < (1u << n) && ok; ++x1)
                for (uint32_t x2 = 0; x2 < (1u << n); ++x2) {
                    Subset a(n, x1), b(n, x2);
                    Span ab = span_compose(site, lambda_span(site, a), lambda_span(site, b));
                    Span ba = span_compose(site, lambda_span(site, b), lambda_span(site, a));
                    ++checks;
                    if (!(ab == ba && ab == lambda_span(site, meet(a, b)))) {
                        ok = false;
                        wit = to_string(a) + " " + to_string(b);
                        break;
                    }
                }
        rep.add("lambda-meet", ok, checks, wit);

        ok = true;
        checks = 0;
        wit.clear();
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const BaseMorphism& f : H(m, n)) {
                    Span sf = span_of_base(f);
                    Subset im = site.pushforward(f, Subset::full(m));
                    for (uint32_t x = 0; x < (1u << n); ++x) {
                        Subset xi(n, x);
                        bool fixed = span_compose(site, lambda_span(site, xi), sf) == sf;
                        ++checks;
                        if (fixed != leq(im, xi)) {
                            ok = false;
                            wit = show(f) + " xi=" + to_string(xi);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("disjoint-lambda", ok, checks, wit);
    }

    // Split-epi / mono factorization through the normal form: u = face . e
    // with the face monic and e split by an explicit section.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const CubeMorphism& u : cube.homs(m, n)) {
                    NormalForm nf = normal_form(site, u);
                    CubeMorphism mono = face(site, nf.delta, nf.xi);
                    CubeMorphism epi = cube_compose(site, cube_of_base(nf.sigma),
                                                    cube_dagger(site, nf.gamma));
                    bool good = cube_compose(site, mono, epi) == u;
                    if (good) {
                        bool split = false;
                        for (const CubeMorphism& v : cube.homs(nf.delta.size(), m)) {
                            if (cube_compose(site, epi, v) ==
                                cube_identity(site, nf.delta.size())) {
                                split = true;
                                break;
                            }
                        }
                        good = split;
                    }
                    ++checks;
                    if (!good) {
                        ok = false;
                        wit = show(u);
                        break;
                    }
                }
        rep.add("split-epi-mono-factorization", ok, checks, wit);
    }

    // Pushforward through cube morphisms: functorial, and the bottom of the
    // source lattice lands on the marker.
    {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int m = 0; m <= D && ok; ++m)
            for (int n = 0; n <= D && ok; ++n)
                for (const CubeMorphism& u : cube.homs(m, n)) {
                    ++checks;
                    if (!(cube_pushforward(site, u, Subset::empty(m)) == u.xi)) {
                        ok = false;
                        wit = show(u);
                        break;
                    }
                }
        for (int p = 0; p <= D && ok; ++p)
            for (int q = 0; q <= D && ok; ++q)
                for (int r = 0; r <= D && ok; ++r)
                    for (const CubeMorphism& v : cube.homs(q, r)) {
                        for (const CubeMorphism& u : cube.homs(p, q)) {
                            CubeMorphism vu = cube_compose(site, v, u);
                            for (uint32_t e = 0; e < (1u << p); ++e) {
                                Subset eta(p, e);
                                ++checks;
                                if (!(cube_pushforward(site, vu, eta) ==
                                      cube_pushforward(site, v,
                                                       cube_pushforward(site, u, eta)))) {
                                    ok = false;
                                    wit = show(v) + " . " + show(u);
                                    break;
                                }
                            }
                            if (!ok) break;
                        }
                        if (!ok) break;
                    }
        rep.add("pushforward-functorial", ok, checks, wit);
    }

    // Interval structure: naturality of the end inclusions and the
    // projection against the enlargement (monoidal sites).
    if (site.is_monoidal()) {
        bool ok = true;
        long long checks = 0;
        std::string wit;
        for (int n = 0; n + 1 <= D; ++n) {
            ++checks;
            if (!(enlarge(site, cube_identity(site, n)) == cube_identity(site, n + 1))) {
                ok = false;
                wit = "enlarge(id_" + std::to_string(n) + ")";
                break;
            }
        }
        for (int m = 0; m + 1 <= D && ok; ++m)
            for (int n = 0; n + 1 <= D && ok; ++n)
                for (const CubeMorphism& u : cube.homs(m, n)) {
                    CubeMorphism cu = enlarge(site, u);
                    bool good =
                        cube_compose(site, iota0(site, n), u) ==
                            cube_compose(site, cu, iota0(site, m)) &&
                        cube_compose(site, iota1(site, n), u) ==
                            cube_compose(site, cu, iota1(site, m)) &&
                        cube_compose(site, u, iota_dagger(site, m)) ==
                            cube_compose(site, iota_dagger(site, n), cu);
                    ++checks;
                    if (!good) {
                        ok = false;
                        wit = show(u);
                        break;
                    }
                }
        rep.add("interval-naturality", ok, checks, wit);
    }

    return rep;
}

} // namespace cubecat
