#include "cubecat/base.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cubecat {

namespace {

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<uint8_t> perm_unrank(int n, long long rank) {
    std::vector<uint8_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<uint8_t> out;
    out.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        long long f = factorial(i);
        int idx = static_cast<int>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return out;
}


std::vector<std::vector<uint8_t>> gen_monotone(int m, int n, bool strict) {
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur.push_back(static_cast<uint8_t>(v));
            self(self, strict ? v + 1 : v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

using MapTable = std::map<std::pair<int, int>, std::vector<std::vector<uint8_t>>>;

const std::vector<std::vector<uint8_t>>& cached_maps(int m, int n, bool strict) {
    static MapTable weak_cache, strict_cache;
    MapTable& cache = strict ? strict_cache : weak_cache;
    auto it = cache.find({m, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), gen_monotone(m, n, strict)).first;
    return it->second;
}

// Fiber sizes of a monotone map, indexed by codomain element.
std::vector<int> fiber_sizes(const std::vector<uint8_t>& f, int n) {
    std::vector<int> c(n, 0);
    for (uint8_t v : f) ++c[v];
    return c;
}

} // namespace

uint16_t Site::perm_rank(const std::vector<uint8_t>& p) {
    int n = static_cast<int>(p.size());
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return static_cast<uint16_t>(rank);
}

uint16_t Site::twist_block_sum(int m1, uint16_t a, int m2, uint16_t b) const {
    if (kind_ != SiteKind::Crossed) {
        if (a != 0 || b != 0) throw std::invalid_argument("nontrivial twist on a twistless site");
        return 0;
    }
    if (table_) throw std::logic_error("table crossed groups carry no monoidal structure");
    std::vector<uint8_t> pa = perm_unrank(m1, a), pb = perm_unrank(m2, b);
    std::vector<uint8_t> out;
    out.reserve(m1 + m2);
    for (uint8_t v : pa) out.push_back(v);
    for (uint8_t v : pb) out.push_back(static_cast<uint8_t>(v + m1));
    return perm_rank(out);
}

Site Site::plain() { return Site(SiteKind::Plain, nullptr); }
Site Site::connections() { return Site(SiteKind::Connections, nullptr); }
Site Site::sigma() { return Site(SiteKind::Crossed, nullptr); }
Site Site::crossed(CrossedTable table) {
    return Site(SiteKind::Crossed, std::make_shared<const CrossedTable>(std::move(table)));
}

std::string Site::selector() const {
    switch (kind_) {
        case SiteKind::Plain: return "plain";
        case SiteKind::Connections: return "connections";
        case SiteKind::Crossed: return table_ ? "crossed:<table>" : "crossed";
    }
    return "?";
}

int Site::group_order(int m) const {
    if (kind_ != SiteKind::Crossed) return 1;
    if (!table_) return static_cast<int>(factorial(m));
    if (m > table_->max_degree) throw std::out_of_range("crossed table degree exceeded");
    return static_cast<int>(table_->mult[m].size());
}

uint16_t Site::group_mult(int m, uint16_t a, uint16_t b) const {
    if (kind_ != SiteKind::Crossed) return 0;
    if (table_) {
        if (m > table_->max_degree) throw std::out_of_range("crossed table degree exceeded");
        return table_->mult[m].at(a).at(b);
    }
    std::vector<uint8_t> pa = perm_unrank(m, a), pb = perm_unrank(m, b), out(m);
    for (int i = 0; i < m; ++i) out[i] = pa[pb[i]];
    return perm_rank(out);
}

uint16_t Site::group_inverse(int m, uint16_t a) const {
    if (kind_ != SiteKind::Crossed) return 0;
    if (table_) {
        int order = group_order(m);
        for (int b = 0; b < order; ++b)
            if (table_->mult[m][a][b] == 0 && table_->mult[m][b][a] == 0)
                return static_cast<uint16_t>(b);
        throw std::invalid_argument("crossed table element has no inverse");
    }
    std::vector<uint8_t> p = perm_unrank(m, a), inv(m);
    for (int i = 0; i < m; ++i) inv[p[i]] = static_cast<uint8_t>(i);
    return perm_rank(inv);
}

std::vector<uint8_t> Site::twist_perm(int m, uint16_t a) const {
    if (kind_ != SiteKind::Crossed || !table_) {
        if (kind_ != SiteKind::Crossed && a != 0)
            throw std::invalid_argument("nontrivial twist on a twistless site");
        return perm_unrank(m, a);
    }
    throw std::logic_error("table crossed groups have no canonical permutation form");
}

const std::vector<std::vector<uint8_t>>& Site::weak_maps(int m, int n) {
    return cached_maps(m, n, false);
}

const std::vector<std::vector<uint8_t>>& Site::strict_maps(int m, int n) {
    return cached_maps(m, n, true);
}

const std::vector<std::vector<uint8_t>>& Site::base_maps(int m, int n) const {
    return kind_ == SiteKind::Plain ? strict_maps(m, n) : weak_maps(m, n);
}

int Site::weak_map_index(const std::vector<uint8_t>& f, int m, int n) {
    const auto& maps = weak_maps(m, n);
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || *it != f) throw std::invalid_argument("map is not weakly monotone");
    return static_cast<int>(it - maps.begin());
}

std::vector<uint8_t> Site::act(uint16_t y, const std::vector<uint8_t>& f, int n) const {
    int m = static_cast<int>(f.size());
    if (kind_ != SiteKind::Crossed) {
        if (y != 0) throw std::invalid_argument("nontrivial twist on a twistless site");
        return f;
    }
    if (table_) {
        if (m > table_->max_degree || n > table_->max_degree)
            throw std::out_of_range("crossed table degree exceeded");
        int fi = weak_map_index(f, m, n);
        uint16_t gi = table_->action[m][n].at(y).at(fi);
        return weak_maps(m, n)[gi];
    }
    // y.f is the monotone map whose fiber over i has the size of f's fiber
    // over y^{-1}(i)
    std::vector<uint8_t> p = perm_unrank(n, y), pinv(n);
    for (int i = 0; i < n; ++i) pinv[p[i]] = static_cast<uint8_t>(i);
    std::vector<int> c = fiber_sizes(f, n);
    std::vector<uint8_t> out;
    out.reserve(m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < c[pinv[i]]; ++k) out.push_back(static_cast<uint8_t>(i));
    return out;
}

uint16_t Site::restrict_twist(const std::vector<uint8_t>& f, int n, uint16_t y) const {
    int m = static_cast<int>(f.size());
    if (kind_ != SiteKind::Crossed) {
        if (y != 0) throw std::invalid_argument("nontrivial twist on a twistless site");
        return 0;
    }
    if (table_) {
        if (m > table_->max_degree || n > table_->max_degree)
            throw std::out_of_range("crossed table degree exceeded");
        int fi = weak_map_index(f, m, n);
        return table_->restriction[m][n].at(fi).at(y);
    }
    // f^*y moves f's fiber over i, in order, onto the block of y.f over y(i)
    std::vector<uint8_t> p = perm_unrank(n, y);
    std::vector<uint8_t> g = act(y, f, n);
    std::vector<int> start(n, 0), c2 = fiber_sizes(g, n);
    for (int i = 1; i < n; ++i) start[i] = start[i - 1] + c2[i - 1];
    std::vector<int> used(n, 0);
    std::vector<uint8_t> tau(m);
    for (int i = 0; i < m; ++i) {
        int block = p[f[i]];
        tau[i] = static_cast<uint8_t>(start[block] + used[block]++);
    }
    return perm_rank(tau);
}

BaseMorphism Site::identity(int n) const {
    BaseMorphism f;
    f.src = f.dst = n;
    f.map.resize(n);
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

BaseMorphism Site::injection(const Subset& delta) const {
    BaseMorphism f;
    f.src = delta.size();
    f.dst = delta.deg;
    for (int p : delta.positions()) f.map.push_back(static_cast<uint8_t>(p));
    return f;
}

bool Site::valid(const BaseMorphism& f) const {
    if (f.src < 0 || f.dst < 0 || static_cast<int>(f.map.size()) != f.src) return false;
    for (uint8_t v : f.map)
        if (v >= f.dst) return false;
    bool strict = kind_ == SiteKind::Plain;
    for (int i = 1; i < f.src; ++i)
        if (strict ? f.map[i - 1] >= f.map[i] : f.map[i - 1] > f.map[i]) return false;
    if (f.twist >= group_order(f.src)) return false;
    if (kind_ != SiteKind::Crossed && f.twist != 0) return false;
    return true;
}

bool Site::is_distinguished(const BaseMorphism& f) const {
    if (f.twist != 0) return false;
    for (int i = 1; i < f.src; ++i)
        if (f.map[i - 1] >= f.map[i]) return false;
    return true;
}

bool Site::is_degeneracy(const BaseMorphism& f) const {
    std::vector<char> hit(f.dst, 0);
    for (uint8_t v : f.map) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<int> Site::underlying(const BaseMorphism& f) const {
    std::vector<uint8_t> p = twist_perm(f.src, f.twist);
    std::vector<int> out(f.src);
    for (int i = 0; i < f.src; ++i) out[i] = f.map[p[i]];
    return out;
}

BaseMorphism Site::compose(const BaseMorphism& outer, const BaseMorphism& inner) const {
    if (inner.dst != outer.src) throw std::invalid_argument("compose: endpoint mismatch");
    BaseMorphism out;
    out.src = inner.src;
    out.dst = outer.dst;
    // (g,y) . (f,x) = (g . (y.f), (f^*y) * x)
    std::vector<uint8_t> yf = act(outer.twist, inner.map, inner.dst);
    out.map.resize(inner.src);
    for (int i = 0; i < inner.src; ++i) out.map[i] = outer.map[yf[i]];
    uint16_t restricted = restrict_twist(inner.map, inner.dst, outer.twist);
    out.twist = group_mult(inner.src, restricted, inner.twist);
    return out;
}

Subset Site::pushforward(const BaseMorphism& f, const Subset& s) const {
    if (s.deg != f.src) throw std::invalid_argument("pushforward: degree mismatch");
    uint32_t member_bits;
    if (f.twist == 0) {
        member_bits = s.bits;
    } else if (!table_) {
        // image of s under the twist permutation
        std::vector<uint8_t> p = twist_perm(f.src, f.twist);
        member_bits = 0;
        for (int i = 0; i < f.src; ++i)
            if (s.contains(i)) member_bits |= 1u << p[i];
    } else {
        // push the injection with image s through the table action
        std::vector<uint8_t> inj;
        for (int q : s.positions()) inj.push_back(static_cast<uint8_t>(q));
        std::vector<uint8_t> moved = act(f.twist, inj, f.src);
        member_bits = 0;
        for (uint8_t v : moved) member_bits |= 1u << v;
    }
    uint32_t out = 0;
    for (int i = 0; i < f.src; ++i)
        if (member_bits & (1u << i)) out |= 1u << f.map[i];
    return Subset(f.dst, out);
}

Site::Pullback Site::pullback(const BaseMorphism& f, const Subset& delta) const {
    if (delta.deg != f.dst) throw std::invalid_argument("pullback: degree mismatch");
    // preimage of delta under the monotone part
    uint32_t fdelta = 0;
    for (int i = 0; i < f.src; ++i)
        if (delta.contains(f.map[i])) fdelta |= 1u << i;
    Subset fd(f.src, fdelta);

    Subset sub = fd;
    if (f.twist != 0) {
        if (!table_) {
            std::vector<uint8_t> p = twist_perm(f.src, f.twist);
            uint32_t bits = 0;
            for (int i = 0; i < f.src; ++i)
                if (fd.contains(p[i])) bits |= 1u << i;
            sub = Subset(f.src, bits);
        } else {
            std::vector<uint8_t> inj;
            for (int q : fd.positions()) inj.push_back(static_cast<uint8_t>(q));
            std::vector<uint8_t> moved = act(group_inverse(f.src, f.twist), inj, f.src);
            uint32_t bits = 0;
            for (uint8_t v : moved) bits |= 1u << v;
            sub = Subset(f.src, bits);
        }
    }

    // restricted morphism: monotone part from the values of f over the
    // preimage, twist restricted along the injection sub
    BaseMorphism restricted;
    restricted.src = sub.size();
    restricted.dst = delta.size();
    std::vector<int> delta_pos = delta.positions();
    for (int q : fd.positions()) {
        int v = f.map[q];
        int j = static_cast<int>(std::lower_bound(delta_pos.begin(), delta_pos.end(), v) -
                                 delta_pos.begin());
        restricted.map.push_back(static_cast<uint8_t>(j));
    }
    if (f.twist != 0) {
        std::vector<uint8_t> inj;
        for (int q : sub.positions()) inj.push_back(static_cast<uint8_t>(q));
        restricted.twist = restrict_twist(inj, f.src, f.twist);
    }
    return {sub, restricted};
}

Site::Factorization Site::factorize(const BaseMorphism& f) const {
    uint32_t image = 0;
    for (uint8_t v : f.map) image |= 1u << v;
    Subset im(f.dst, image);
    std::vector<int> pos = im.positions();
    BaseMorphism surj;
    surj.src = f.src;
    surj.dst = im.size();
    surj.twist = f.twist;
    for (uint8_t v : f.map) {
        int j = static_cast<int>(std::lower_bound(pos.begin(), pos.end(), v) - pos.begin());
        surj.map.push_back(static_cast<uint8_t>(j));
    }
    return {surj, im};
}

Subset Site::max_saturated(const BaseMorphism& f, const Subset& delta) const {
    if (delta.deg != f.src) throw std::invalid_argument("max_saturated: degree mismatch");
    return neg(pullback(f, pushforward(f, neg(delta))).sub);
}

std::vector<BaseMorphism> Site::homs(int m, int n) const {
    std::vector<BaseMorphism> out;
    int order = group_order(m);
    for (const auto& map : base_maps(m, n))
        for (int t = 0; t < order; ++t) {
            BaseMorphism f;
            f.src = m;
            f.dst = n;
            f.map = map;
            f.twist = static_cast<uint16_t>(t);
            out.push_back(std::move(f));
        }
    return out;
}

long long Site::hom_count(int m, int n) const {
    return static_cast<long long>(base_maps(m, n).size()) * group_order(m);
}

CrossedTable build_sigma_table(int max_degree) {
    Site s = Site::sigma();
    CrossedTable t;
    t.max_degree = max_degree;
    t.mult.resize(max_degree + 1);
    t.action.resize(max_degree + 1);
    t.restriction.resize(max_degree + 1);
    for (int m = 0; m <= max_degree; ++m) {
        int om = s.group_order(m);
        t.mult[m].assign(om, std::vector<uint16_t>(om));
        for (int a = 0; a < om; ++a)
            for (int b = 0; b < om; ++b)
                t.mult[m][a][b] = s.group_mult(m, static_cast<uint16_t>(a), static_cast<uint16_t>(b));
        t.action[m].resize(max_degree + 1);
        t.restriction[m].resize(max_degree + 1);
        for (int n = 0; n <= max_degree; ++n) {
            const auto& maps = Site::weak_maps(m, n);
            int on = s.group_order(n);
            t.action[m][n].assign(on, std::vector<uint16_t>(maps.size()));
            t.restriction[m][n].assign(maps.size(), std::vector<uint16_t>(on));
            for (int y = 0; y < on; ++y)
                for (size_t fi = 0; fi < maps.size(); ++fi) {
                    auto moved = s.act(static_cast<uint16_t>(y), maps[fi], n);
                    t.action[m][n][y][fi] =
                        static_cast<uint16_t>(Site::weak_map_index(moved, m, n));
                    t.restriction[m][n][fi][y] =
                        s.restrict_twist(maps[fi], n, static_cast<uint16_t>(y));
                }
        }
    }
    return t;
}

} // namespace cubecat
