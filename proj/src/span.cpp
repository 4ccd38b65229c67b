#include "cubecat/span.hpp"

#include <stdexcept>

namespace cubecat {

Span span_identity(const Site& site, int n) {
    Span s;
    s.src = s.dst = n;
    s.gamma = Subset::full(n);
    s.f = site.identity(n);
    return s;
}

Span dagger(const Site& site, const Subset& gamma) {
    Span s;
    s.src = gamma.deg;
    s.dst = gamma.size();
    s.gamma = gamma;
    s.f = site.identity(gamma.size());
    return s;
}

Span span_of_base(const BaseMorphism& f) {
    Span s;
    s.src = f.src;
    s.dst = f.dst;
    s.gamma = Subset::full(f.src);
    s.f = f;
    return s;
}

bool span_valid(const Site& site, const Span& s) {
    return s.gamma.deg == s.src && s.f.src == s.gamma.size() && s.f.dst == s.dst &&
           site.valid(s.f);
}

Span span_compose(const Site& site, const Span& outer, const Span& inner) {
    if (inner.dst != outer.src) throw std::invalid_argument("span_compose: endpoint mismatch");
    // pull the outer dagger leg gamma2 back along the inner forward leg f1
    Site::Pullback pb = site.pullback(inner.f, outer.gamma);
    Span out;
    out.src = inner.src;
    out.dst = outer.dst;
    out.gamma = expand(inner.gamma, pb.sub);
    out.f = site.compose(outer.f, pb.restricted);
    return out;
}

Subset span_pushforward(const Site& site, const Span& s, const Subset& eta) {
    if (eta.deg != s.src) throw std::invalid_argument("span_pushforward: degree mismatch");
    return site.pushforward(s.f, compress(s.gamma, meet(eta, s.gamma)));
}

Subset span_image(const Span& s) {
    uint32_t bits = 0;
    for (uint8_t v : s.f.map) bits |= 1u << v;
    return Subset(s.dst, bits);
}

} // namespace cubecat
