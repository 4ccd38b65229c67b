#include "cubecat/cube.hpp"

#include <stdexcept>

namespace cubecat {

CubeMorphism cube_identity(const Site& site, int n) {
    return {span_identity(site, n), Subset::empty(n)};
}

bool cube_valid(const Site& site, const CubeMorphism& m) {
    return span_valid(site, m.span) && m.xi.deg == m.dst() &&
           meet(span_image(m.span), m.xi).is_empty();
}

CubeMorphism face(const Site& site, const Subset& delta, const Subset& xi) {
    if (!meet(delta, xi).is_empty()) throw std::invalid_argument("face: marker meets the face");
    Span s;
    s.src = delta.size();
    s.dst = delta.deg;
    s.gamma = Subset::full(delta.size());
    s.f = site.injection(delta);
    return {s, xi};
}

CubeMorphism cube_dagger(const Site& site, const Subset& gamma) {
    return {dagger(site, gamma), Subset::empty(gamma.size())};
}

CubeMorphism cube_of_base(const BaseMorphism& f) {
    return {span_of_base(f), Subset::empty(f.dst)};
}

CubeMorphism cube_compose(const Site& site, const CubeMorphism& outer, const CubeMorphism& inner) {
    if (inner.dst() != outer.src()) throw std::invalid_argument("cube_compose: endpoint mismatch");
    // marker: outer.xi joined with the outer span's pushforward of inner.xi;
    // span: the complementary marker projection applied after the composite
    Subset p = span_pushforward(site, outer.span, inner.xi);
    Subset xi_out = join(outer.xi, p);
    Subset keep = neg(p);
    Span lambda;
    lambda.src = lambda.dst = outer.dst();
    lambda.gamma = keep;
    lambda.f = site.injection(keep);
    Span span_out = span_compose(site, lambda, span_compose(site, outer.span, inner.span));
    CubeMorphism out{span_out, xi_out};
    if (!meet(span_image(span_out), xi_out).is_empty())
        throw std::logic_error("cube_compose: marker disjointness violated");
    return out;
}

Subset cube_pushforward(const Site& site, const CubeMorphism& m, const Subset& eta) {
    return join(span_pushforward(site, m.span, eta), m.xi);
}

NormalForm normal_form(const Site& site, const CubeMorphism& m) {
    Site::Factorization fact = site.factorize(m.span.f);
    NormalForm nf;
    nf.src = m.src();
    nf.dst = m.dst();
    nf.gamma = m.span.gamma;
    nf.sigma = fact.surj;
    nf.delta = fact.image;
    nf.xi = m.xi;
    return nf;
}

CubeMorphism reassemble(const Site& site, const NormalForm& nf) {
    Span s;
    s.src = nf.src;
    s.dst = nf.dst;
    s.gamma = nf.gamma;
    s.f = site.compose(site.injection(nf.delta), nf.sigma);
    return {s, nf.xi};
}

CubeClass classify(const Site& site, const CubeMorphism& m) {
    NormalForm nf = normal_form(site, m);
    bool gamma_full = nf.gamma.is_full();
    bool delta_full = nf.delta.is_full() && nf.xi.is_empty();
    bool sigma_map_id = nf.sigma.map == site.identity(nf.sigma.src).map;
    bool sigma_id = sigma_map_id && nf.sigma.twist == 0;
    if (gamma_full && delta_full && sigma_map_id) return CubeClass::Iso;
    if (gamma_full && sigma_id) return CubeClass::Face;
    if (delta_full) return CubeClass::Collapse;
    return CubeClass::Mixed;
}

std::optional<FaceMeet> face_meet(const Site& site, const CubeMorphism& a, const CubeMorphism& b) {
    CubeClass ca = classify(site, a), cb = classify(site, b);
    if ((ca != CubeClass::Face && ca != CubeClass::Iso) ||
        (cb != CubeClass::Face && cb != CubeClass::Iso))
        throw std::invalid_argument("face_meet: inputs must be faces");
    if (a.dst() != b.dst()) throw std::invalid_argument("face_meet: targets differ");
    NormalForm na = normal_form(site, a), nb = normal_form(site, b);
    // the faces intersect exactly when the markers agree off the other face
    if (!(meet(na.xi, neg(nb.delta)) == meet(nb.xi, neg(na.delta)))) return std::nullopt;
    Subset common = meet(na.delta, nb.delta);
    FaceMeet out;
    out.into_first = face(site, compress(na.delta, common), compress(na.delta, meet(nb.xi, na.delta)));
    out.into_second = face(site, compress(nb.delta, common), compress(nb.delta, meet(na.xi, nb.delta)));
    out.composite = face(site, common, join(na.xi, nb.xi));
    return out;
}

CubeMorphism tensor_mor(const Site& site, const CubeMorphism& a, const CubeMorphism& b) {
    if (!site.is_monoidal()) throw std::invalid_argument("tensor: site is not monoidal");
    int m = a.src() + b.src();
    int n = a.dst() + b.dst();
    Span s;
    s.src = m;
    s.dst = n;
    s.gamma = Subset(m, a.span.gamma.bits | (b.span.gamma.bits << a.src()));
    s.f.src = a.span.f.src + b.span.f.src;
    s.f.dst = n;
    s.f.map = a.span.f.map;
    for (uint8_t v : b.span.f.map) s.f.map.push_back(static_cast<uint8_t>(v + a.dst()));
    s.f.twist = site.twist_block_sum(a.span.f.src, a.span.f.twist, b.span.f.src, b.span.f.twist);
    Subset xi(n, a.xi.bits | (b.xi.bits << a.dst()));
    return {s, xi};
}

CubeMorphism enlarge(const Site& site, const CubeMorphism& m) {
    return tensor_mor(site, m, cube_identity(site, 1));
}

CubeMorphism iota0(const Site& site, int n) {
    return face(site, Subset(n + 1, Subset::low_mask(n)), Subset::empty(n + 1));
}

CubeMorphism iota1(const Site& site, int n) {
    return face(site, Subset(n + 1, Subset::low_mask(n)), Subset(n + 1, 1u << n));
}

CubeMorphism iota_dagger(const Site& site, int n) {
    return cube_dagger(site, Subset(n + 1, Subset::low_mask(n)));
}

long long cube_hom_count_formula(const Site& site, int m, int n) {
    long long total = 0;
    for (int k = 0; k <= m; ++k) {
        long long gammas = 1;
        for (int i = 0; i < k; ++i) gammas = gammas * (m - i) / (i + 1);
        long long inner = 0;
        for (int j = 0; j <= n; ++j) {
            long long surj;
            if (site.kind() == SiteKind::Plain) {
                surj = (j == k) ? 1 : 0;
            } else if (k == 0 || j == 0) {
                surj = (k == 0 && j == 0) ? 1 : 0;
            } else {
                surj = 1; // C(k-1, j-1)
                for (int i = 0; i < j - 1; ++i) surj = surj * (k - 1 - i) / (i + 1);
            }
            if (surj == 0) continue;
            long long deltas = 1;
            for (int i = 0; i < j; ++i) deltas = deltas * (n - i) / (i + 1);
            inner += surj * deltas * (1ll << (n - j));
        }
        total += gammas * site.group_order(k) * inner;
    }
    return total;
}

const std::vector<CubeMorphism>& CubeSite::homs(int m, int n) const {
    auto it = homs_.find({m, n});
    if (it != homs_.end()) return it->second;
    std::vector<CubeMorphism> list;
    for (uint32_t g = 0; g < (1u << m); ++g) {
        Subset gamma(m, g);
        for (const BaseMorphism& f : site_.homs(gamma.size(), n)) {
            Span s;
            s.src = m;
            s.dst = n;
            s.gamma = gamma;
            s.f = f;
            Subset im = span_image(s);
            uint32_t codomain = neg(im).bits;
            // enumerate subsets of the complement of the image
            uint32_t x = 0;
            for (;;) {
                list.push_back({s, Subset(n, x)});
                if (x == codomain) break;
                x = (x - codomain) & codomain;
            }
        }
    }
    auto& stored = homs_[{m, n}];
    stored = std::move(list);
    auto& idx = index_[{m, n}];
    for (size_t i = 0; i < stored.size(); ++i) idx.emplace(key_of(stored[i]), static_cast<int>(i));
    return stored;
}

int CubeSite::index_of(const CubeMorphism& m) const {
    homs(m.src(), m.dst());
    const auto& idx = index_.at({m.src(), m.dst()});
    auto it = idx.find(key_of(m));
    if (it == idx.end()) throw std::logic_error("index_of: morphism not in enumerated hom-set");
    return it->second;
}

std::vector<CubeMorphism> CubeSite::generators_into(int n) const {
    std::vector<CubeMorphism> out;
    // codimension-1 faces with both marker choices
    for (int i = 0; i < n; ++i) {
        Subset delta = neg(Subset(n, 1u << i));
        out.push_back(face(site_, delta, Subset::empty(n)));
        out.push_back(face(site_, delta, Subset(n, 1u << i)));
    }
    // elementary daggers n+1 -> n
    for (int i = 0; i < n + 1; ++i)
        out.push_back(cube_dagger(site_, neg(Subset(n + 1, 1u << i))));
    // elementary degeneracies n+1 -> n (twistless monotone surjections that
    // repeat one value)
    if (site_.kind() != SiteKind::Plain) {
        for (int i = 0; i < n; ++i) {
            BaseMorphism f;
            f.src = n + 1;
            f.dst = n;
            for (int j = 0; j <= n; ++j)
                f.map.push_back(static_cast<uint8_t>(j <= i ? j : j - 1));
            out.push_back(cube_of_base(f));
        }
    }
    // adjacent-transposition twists n -> n
    if (site_.has_twists() && !site_.table()) {
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<uint8_t> p(n);
            for (int j = 0; j < n; ++j) p[j] = static_cast<uint8_t>(j);
            std::swap(p[i], p[i + 1]);
            BaseMorphism f = site_.identity(n);
            f.twist = Site::perm_rank(p);
            out.push_back(cube_of_base(f));
        }
    } else if (site_.has_twists()) {
        // table groups: all single twists generate
        for (int t = 1; t < site_.group_order(n); ++t) {
            BaseMorphism f = site_.identity(n);
            f.twist = static_cast<uint16_t>(t);
            out.push_back(cube_of_base(f));
        }
    }
    return out;
}

size_t CubeSite::KeyHash::operator()(const Key& k) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(k.gamma);
    mix(k.xi);
    mix(k.twist);
    mix(static_cast<uint64_t>(k.src));
    for (uint8_t b : k.map) mix(b);
    return h;
}

CubeSite::Key CubeSite::key_of(const CubeMorphism& m) {
    return Key{m.span.gamma.bits, m.xi.bits, m.span.f.twist, m.src(), m.span.f.map};
}

} // namespace cubecat
