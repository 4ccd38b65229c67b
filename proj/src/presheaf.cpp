#include "cubecat/presheaf.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <stdexcept>

#include "cubecat/union_find.hpp"

namespace cubecat {

namespace {

std::string pad_name(const char* prefix, int i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%04d", prefix, i);
    return buf;
}

std::string component_prefix(int k) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "c%02d.", k);
    return buf;
}

// Split epimorphisms are the morphisms with full image and empty marker:
// exactly the degeneracy legs of normal forms.
bool is_split_epi(const CubeMorphism& m) {
    return span_image(m.span).is_full() && m.xi.is_empty();
}

CubeMorphism twist_cube(int n, int tau) {
    BaseMorphism t;
    t.src = n;
    t.dst = n;
    t.map.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) t.map[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    t.twist = static_cast<uint16_t>(tau);
    return cube_of_base(t);
}

CubeMorphism tail_morphism(const Site& site, int p, uint32_t gamma, int tau) {
    Subset g(p, gamma);
    CubeMorphism dag = cube_dagger(site, g);
    if (tau == 0) return dag;
    return cube_compose(site, twist_cube(g.size(), tau), dag);
}

Presheaf empty_presheaf(std::shared_ptr<const CubeSite> site, int D) {
    Presheaf X(std::move(site), D);
    X.seal();
    return X;
}

} // namespace

// ---------------------------------------------------------------------------
// Presheaf
// ---------------------------------------------------------------------------

Presheaf::Presheaf(std::shared_ptr<const CubeSite> site, int max_degree)
    : site_(std::move(site)), degree_(max_degree) {
    if (!site_) throw std::invalid_argument("presheaf requires a site");
    if (max_degree < 0) throw std::invalid_argument("presheaf degree must be nonnegative");
    names_.resize(static_cast<size_t>(degree_) + 1);
    index_.resize(static_cast<size_t>(degree_) + 1);
}

int Presheaf::cell_count(int n) const {
    if (n < 0 || n > degree_) return 0;
    return static_cast<int>(names_[static_cast<size_t>(n)].size());
}

long long Presheaf::total_cells() const {
    long long total = 0;
    for (int n = 0; n <= degree_; ++n) total += cell_count(n);
    return total;
}

const std::string& Presheaf::cell_name(int n, int i) const {
    return names_.at(static_cast<size_t>(n)).at(static_cast<size_t>(i));
}

int Presheaf::cell_index(int n, const std::string& name) const {
    if (n < 0 || n > degree_) return -1;
    const auto& idx = index_[static_cast<size_t>(n)];
    auto it = idx.find(name);
    return it == idx.end() ? -1 : it->second;
}

int Presheaf::act(const CubeMorphism& u, int cell) const {
    return act_indexed(u.src(), u.dst(), site_->index_of(u), cell);
}

int Presheaf::act_indexed(int m, int n, int mor, int cell) const {
    return action_row(m, n, mor).at(static_cast<size_t>(cell));
}

const std::vector<int>& Presheaf::action_row(int m, int n, int mor) const {
    auto it = action_.find({m, n});
    if (it == action_.end()) throw std::logic_error("presheaf action table missing");
    return it->second.at(static_cast<size_t>(mor));
}

int Presheaf::add_cell(int n, std::string name) {
    if (sealed_ || building_actions_)
        throw std::logic_error("cells must be added before actions");
    if (n < 0 || n > degree_) throw std::invalid_argument("cell degree out of range");
    auto& idx = index_[static_cast<size_t>(n)];
    if (idx.count(name)) throw std::invalid_argument("duplicate cell name: " + name);
    int i = static_cast<int>(names_[static_cast<size_t>(n)].size());
    idx.emplace(name, i);
    names_[static_cast<size_t>(n)].push_back(std::move(name));
    return i;
}

std::vector<std::vector<int>>& Presheaf::table(int m, int n) {
    auto it = action_.find({m, n});
    if (it == action_.end()) {
        size_t rows = site_->homs(m, n).size();
        size_t cols = static_cast<size_t>(cell_count(n));
        it = action_.emplace(std::pair<int, int>{m, n},
                             std::vector<std::vector<int>>(rows, std::vector<int>(cols, -1)))
                 .first;
    }
    return it->second;
}

void Presheaf::set_action(int m, int n, int mor, int cell, int value) {
    if (sealed_) throw std::logic_error("presheaf already sealed");
    building_actions_ = true;
    if (value < 0 || value >= cell_count(m))
        throw std::invalid_argument("action value out of range");
    table(m, n).at(static_cast<size_t>(mor)).at(static_cast<size_t>(cell)) = value;
}

void Presheaf::seal() {
    if (sealed_) throw std::logic_error("presheaf already sealed");
    for (int m = 0; m <= degree_; ++m)
        for (int n = 0; n <= degree_; ++n) {
            const auto& t = table(m, n);
            for (const auto& row : t)
                for (int v : row)
                    if (v < 0)
                        throw std::logic_error("presheaf action table incomplete at (" +
                                               std::to_string(m) + "," + std::to_string(n) + ")");
        }
    sealed_ = true;
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

PresheafMap identity_map(const Presheaf& X) {
    PresheafMap f;
    f.cells.resize(static_cast<size_t>(X.max_degree()) + 1);
    for (int n = 0; n <= X.max_degree(); ++n) {
        f.cells[static_cast<size_t>(n)].resize(static_cast<size_t>(X.cell_count(n)));
        for (int i = 0; i < X.cell_count(n); ++i) f.cells[static_cast<size_t>(n)][static_cast<size_t>(i)] = i;
    }
    return f;
}

PresheafMap compose_map(const PresheafMap& g, const PresheafMap& f) {
    if (g.cells.size() != f.cells.size()) throw std::invalid_argument("map degree mismatch");
    PresheafMap h;
    h.cells.resize(f.cells.size());
    for (size_t n = 0; n < f.cells.size(); ++n) {
        h.cells[n].resize(f.cells[n].size());
        for (size_t i = 0; i < f.cells[n].size(); ++i)
            h.cells[n][i] = g.cells[n].at(static_cast<size_t>(f.cells[n][i]));
    }
    return h;
}

bool natural(const Presheaf& X, const Presheaf& Y, const PresheafMap& f, std::string* witness) {
    int D = X.max_degree();
    if (Y.max_degree() != D || static_cast<int>(f.cells.size()) != D + 1) {
        if (witness) *witness = "degree mismatch";
        return false;
    }
    for (int n = 0; n <= D; ++n)
        if (static_cast<int>(f.cells[static_cast<size_t>(n)].size()) != X.cell_count(n)) {
            if (witness) *witness = "component size mismatch at degree " + std::to_string(n);
            return false;
        }
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            int count = static_cast<int>(X.site().homs(m, n).size());
            for (int mor = 0; mor < count; ++mor) {
                const auto& rowX = X.action_row(m, n, mor);
                const auto& rowY = Y.action_row(m, n, mor);
                for (int c = 0; c < X.cell_count(n); ++c) {
                    int lhs = rowY[static_cast<size_t>(f.cells[static_cast<size_t>(n)][static_cast<size_t>(c)])];
                    int rhs = f.cells[static_cast<size_t>(m)][static_cast<size_t>(rowX[static_cast<size_t>(c)])];
                    if (lhs != rhs) {
                        if (witness)
                            *witness = "naturality fails at (" + std::to_string(m) + "," +
                                       std::to_string(n) + ") mor " + std::to_string(mor) +
                                       " cell " + X.cell_name(n, c);
                        return false;
                    }
                }
            }
        }
    return true;
}

bool injective_map(const PresheafMap& f, const Presheaf& Y) {
    for (size_t n = 0; n < f.cells.size(); ++n) {
        std::set<int> seen;
        for (int v : f.cells[n])
            if (!seen.insert(v).second) return false;
    }
    (void)Y;
    return true;
}

bool bijective_map(const PresheafMap& f, const Presheaf& Y) {
    if (!injective_map(f, Y)) return false;
    for (size_t n = 0; n < f.cells.size(); ++n)
        if (static_cast<int>(f.cells[n].size()) != Y.cell_count(static_cast<int>(n))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Representables and Yoneda
// ---------------------------------------------------------------------------

Presheaf representable(std::shared_ptr<const CubeSite> site, int D, int r) {
    if (r < 0) throw std::invalid_argument("representable degree must be nonnegative");
    Presheaf X(site, D);
    for (int n = 0; n <= D; ++n) {
        int count = static_cast<int>(site->homs(n, r).size());
        for (int i = 0; i < count; ++i) X.add_cell(n, pad_name("u", i));
    }
    const Site& S = site->base();
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            const auto& hm = site->homs(m, n);
            const auto& cells = site->homs(n, r);
            for (int mor = 0; mor < static_cast<int>(hm.size()); ++mor)
                for (int c = 0; c < static_cast<int>(cells.size()); ++c)
                    X.set_action(m, n, mor, c,
                                 site->index_of(cube_compose(S, cells[static_cast<size_t>(c)],
                                                             hm[static_cast<size_t>(mor)])));
        }
    X.seal();
    return X;
}

PresheafMap yoneda_map(const std::shared_ptr<const CubeSite>& site, int D, const CubeMorphism& u) {
    const Site& S = site->base();
    PresheafMap f;
    f.cells.resize(static_cast<size_t>(D) + 1);
    for (int p = 0; p <= D; ++p) {
        const auto& cells = site->homs(p, u.src());
        f.cells[static_cast<size_t>(p)].resize(cells.size());
        for (size_t i = 0; i < cells.size(); ++i)
            f.cells[static_cast<size_t>(p)][i] = site->index_of(cube_compose(S, u, cells[i]));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Subpresheaves
// ---------------------------------------------------------------------------

namespace {

// Cuts the subpresheaf of cells satisfying keep (which must be closed under
// the action) out of an ambient presheaf.
SubPresheaf make_sub(const Presheaf& X, const std::function<bool(int, int)>& keep) {
    int D = X.max_degree();
    SubPresheaf out{X, Presheaf(X.site_handle(), D), {}, {}};
    out.member.resize(static_cast<size_t>(D) + 1);
    out.inclusion.cells.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        out.member[static_cast<size_t>(n)].assign(static_cast<size_t>(X.cell_count(n)), -1);
        for (int c = 0; c < X.cell_count(n); ++c)
            if (keep(n, c)) {
                int i = out.presheaf.add_cell(n, X.cell_name(n, c));
                out.member[static_cast<size_t>(n)][static_cast<size_t>(c)] = i;
                out.inclusion.cells[static_cast<size_t>(n)].push_back(c);
            }
    }
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            int count = static_cast<int>(X.site().homs(m, n).size());
            for (int mor = 0; mor < count; ++mor) {
                const auto& row = X.action_row(m, n, mor);
                const auto& inc = out.inclusion.cells[static_cast<size_t>(n)];
                for (size_t sc = 0; sc < inc.size(); ++sc) {
                    int image = row[static_cast<size_t>(inc[sc])];
                    int sub = out.member[static_cast<size_t>(m)][static_cast<size_t>(image)];
                    if (sub < 0) throw std::logic_error("subpresheaf cells not closed under action");
                    out.presheaf.set_action(m, n, mor, static_cast<int>(sc), sub);
                }
            }
        }
    out.presheaf.seal();
    return out;
}

} // namespace

SubPresheaf boundary(std::shared_ptr<const CubeSite> site, int D, int r) {
    Presheaf rep = representable(site, D, r);
    const CubeSite& cs = *site;
    return make_sub(rep, [&cs, r](int n, int c) {
        return !span_image(cs.homs(n, r)[static_cast<size_t>(c)].span).is_full();
    });
}

// ---------------------------------------------------------------------------
// Decomposition and skeleta
// ---------------------------------------------------------------------------

Decomposition nondegenerate_decompose(const Presheaf& X, int n, int cell) {
    const CubeSite& cs = X.site();
    const Site& S = cs.base();
    for (int b = 0; b < n; ++b) {
        const auto& hm = cs.homs(n, b);
        for (int e = 0; e < static_cast<int>(hm.size()); ++e) {
            if (!is_split_epi(hm[static_cast<size_t>(e)])) continue;
            const auto& row = X.action_row(n, b, e);
            for (int x = 0; x < X.cell_count(b); ++x)
                if (row[static_cast<size_t>(x)] == cell)
                    return {hm[static_cast<size_t>(e)], b, x};
        }
    }
    return {cube_identity(S, n), n, cell};
}

bool is_nondegenerate(const Presheaf& X, int n, int cell) {
    return nondegenerate_decompose(X, n, cell).base == n;
}

int base_degree(const Presheaf& X, int n, int cell) {
    return nondegenerate_decompose(X, n, cell).base;
}

SubPresheaf skeleton(const Presheaf& X, int k) {
    std::vector<std::vector<int>> degrees(static_cast<size_t>(X.max_degree()) + 1);
    for (int n = 0; n <= X.max_degree(); ++n) {
        degrees[static_cast<size_t>(n)].resize(static_cast<size_t>(X.cell_count(n)));
        for (int c = 0; c < X.cell_count(n); ++c)
            degrees[static_cast<size_t>(n)][static_cast<size_t>(c)] = base_degree(X, n, c);
    }
    return make_sub(X, [&degrees, k](int n, int c) {
        return degrees[static_cast<size_t>(n)][static_cast<size_t>(c)] <= k;
    });
}

// ---------------------------------------------------------------------------
// Colimits
// ---------------------------------------------------------------------------

Colimit quotient(const Presheaf& X, const std::vector<std::array<int, 3>>& relations) {
    if (!X.sealed()) throw std::invalid_argument("quotient requires a sealed presheaf");
    int D = X.max_degree();
    std::vector<UnionFind> uf;
    uf.reserve(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) uf.emplace_back(static_cast<size_t>(X.cell_count(n)));

    // Congruence closure: every merged pair forces its images under every
    // morphism to merge as well.
    std::deque<std::array<int, 3>> work;
    for (const auto& rel : relations)
        if (uf[static_cast<size_t>(rel[0])].unite(static_cast<size_t>(rel[1]), static_cast<size_t>(rel[2])))
            work.push_back(rel);
    while (!work.empty()) {
        auto [n, a, b] = work.front();
        work.pop_front();
        for (int m = 0; m <= D; ++m) {
            int count = static_cast<int>(X.site().homs(m, n).size());
            for (int mor = 0; mor < count; ++mor) {
                const auto& row = X.action_row(m, n, mor);
                int ia = row[static_cast<size_t>(a)];
                int ib = row[static_cast<size_t>(b)];
                if (uf[static_cast<size_t>(m)].unite(static_cast<size_t>(ia), static_cast<size_t>(ib)))
                    work.push_back({m, ia, ib});
            }
        }
    }

    std::vector<std::vector<int>> class_of(static_cast<size_t>(D) + 1);
    std::vector<std::vector<int>> reps(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        class_of[static_cast<size_t>(n)].assign(static_cast<size_t>(X.cell_count(n)), -1);
        for (int c = 0; c < X.cell_count(n); ++c)
            if (static_cast<int>(uf[static_cast<size_t>(n)].find(static_cast<size_t>(c))) == c) {
                class_of[static_cast<size_t>(n)][static_cast<size_t>(c)] =
                    static_cast<int>(reps[static_cast<size_t>(n)].size());
                reps[static_cast<size_t>(n)].push_back(c);
            }
        for (int c = 0; c < X.cell_count(n); ++c) {
            int root = static_cast<int>(uf[static_cast<size_t>(n)].find(static_cast<size_t>(c)));
            class_of[static_cast<size_t>(n)][static_cast<size_t>(c)] =
                class_of[static_cast<size_t>(n)][static_cast<size_t>(root)];
        }
    }

    Presheaf Q(X.site_handle(), D);
    for (int n = 0; n <= D; ++n)
        for (int r : reps[static_cast<size_t>(n)]) Q.add_cell(n, X.cell_name(n, r));
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            int count = static_cast<int>(X.site().homs(m, n).size());
            for (int mor = 0; mor < count; ++mor) {
                const auto& row = X.action_row(m, n, mor);
                for (size_t k = 0; k < reps[static_cast<size_t>(n)].size(); ++k) {
                    int image = row[static_cast<size_t>(reps[static_cast<size_t>(n)][k])];
                    Q.set_action(m, n, mor, static_cast<int>(k),
                                 class_of[static_cast<size_t>(m)][static_cast<size_t>(image)]);
                }
            }
        }
    Q.seal();
    return {std::move(Q), {PresheafMap{std::move(class_of)}}};
}

Colimit coproduct(const std::vector<const Presheaf*>& parts) {
    if (parts.empty()) throw std::invalid_argument("coproduct requires at least one part");
    const Presheaf& first = *parts.front();
    int D = first.max_degree();
    for (const Presheaf* p : parts) {
        if (p->max_degree() != D) throw std::invalid_argument("coproduct degree mismatch");
        if (p->site_handle() != first.site_handle())
            throw std::invalid_argument("coproduct parts must share a site");
    }
    Presheaf C(first.site_handle(), D);
    std::vector<PresheafMap> legs(parts.size());
    for (size_t k = 0; k < parts.size(); ++k)
        legs[k].cells.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n)
        for (size_t k = 0; k < parts.size(); ++k)
            for (int c = 0; c < parts[k]->cell_count(n); ++c)
                legs[k].cells[static_cast<size_t>(n)].push_back(
                    C.add_cell(n, component_prefix(static_cast<int>(k)) + parts[k]->cell_name(n, c)));
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            int count = static_cast<int>(first.site().homs(m, n).size());
            for (int mor = 0; mor < count; ++mor)
                for (size_t k = 0; k < parts.size(); ++k) {
                    const auto& row = parts[k]->action_row(m, n, mor);
                    for (int c = 0; c < parts[k]->cell_count(n); ++c)
                        C.set_action(m, n, mor,
                                     legs[k].cells[static_cast<size_t>(n)][static_cast<size_t>(c)],
                                     legs[k].cells[static_cast<size_t>(m)][static_cast<size_t>(row[static_cast<size_t>(c)])]);
                }
        }
    C.seal();
    return {std::move(C), std::move(legs)};
}

Colimit pushout(const Presheaf& A, const Presheaf& X, const Presheaf& Y,
                const PresheafMap& f, const PresheafMap& g) {
    Colimit cop = coproduct({&X, &Y});
    std::vector<std::array<int, 3>> rels;
    for (int n = 0; n <= A.max_degree(); ++n)
        for (int a = 0; a < A.cell_count(n); ++a)
            rels.push_back({n,
                            cop.legs[0].cells[static_cast<size_t>(n)][static_cast<size_t>(
                                f.cells[static_cast<size_t>(n)][static_cast<size_t>(a)])],
                            cop.legs[1].cells[static_cast<size_t>(n)][static_cast<size_t>(
                                g.cells[static_cast<size_t>(n)][static_cast<size_t>(a)])]});
    Colimit q = quotient(cop.presheaf, rels);
    PresheafMap legX = compose_map(q.legs[0], cop.legs[0]);
    PresheafMap legY = compose_map(q.legs[0], cop.legs[1]);
    PresheafMap legA = compose_map(legX, f);
    return {std::move(q.presheaf), {std::move(legA), std::move(legX), std::move(legY)}};
}

Colimit coequalizer(const Presheaf& A, const Presheaf& X,
                    const PresheafMap& f, const PresheafMap& g) {
    std::vector<std::array<int, 3>> rels;
    for (int n = 0; n <= A.max_degree(); ++n)
        for (int a = 0; a < A.cell_count(n); ++a)
            rels.push_back({n, f.cells[static_cast<size_t>(n)][static_cast<size_t>(a)],
                            g.cells[static_cast<size_t>(n)][static_cast<size_t>(a)]});
    Colimit q = quotient(X, rels);
    PresheafMap legA = compose_map(q.legs[0], f);
    return {std::move(q.presheaf), {std::move(legA), std::move(q.legs[0])}};
}

Colimit colimit(ColimitKind kind, const std::vector<const Presheaf*>& objects,
                const std::vector<PresheafMap>& maps) {
    switch (kind) {
        case ColimitKind::Coproduct:
            if (!maps.empty()) throw std::invalid_argument("coproduct takes no maps");
            return coproduct(objects);
        case ColimitKind::Pushout:
            if (objects.size() != 3 || maps.size() != 2)
                throw std::invalid_argument("pushout takes objects {A, X, Y} and maps {f, g}");
            return pushout(*objects[0], *objects[1], *objects[2], maps[0], maps[1]);
        case ColimitKind::Coequalizer:
            if (objects.size() != 2 || maps.size() != 2)
                throw std::invalid_argument("coequalizer takes objects {A, X} and maps {f, g}");
            return coequalizer(*objects[0], *objects[1], maps[0], maps[1]);
    }
    throw std::invalid_argument("unknown colimit kind");
}

// ---------------------------------------------------------------------------
// Boundary by coequalizer (the cross-check route)
// ---------------------------------------------------------------------------

BoundaryOracle boundary_coequalizer(std::shared_ptr<const CubeSite> site, int D, int r) {
    const Site& S = site->base();

    // Components of the target: one representable of degree r-1 per pair
    // (delta of codegree 2, marker below its complement).
    struct Component {
        Subset delta;
        Subset xi;
    };
    std::vector<Component> comps;
    if (r >= 1)
        for (uint32_t m = 0; m <= Subset::low_mask(r); ++m) {
            Subset d(r, m);
            if (d.size() != r - 1) continue;
            comps.push_back({d, Subset::empty(r)});
            comps.push_back({d, neg(d)});
        }

    if (comps.empty()) {
        BoundaryOracle out{empty_presheaf(site, D), {}};
        out.into_rep.cells.resize(static_cast<size_t>(D) + 1);
        return out;
    }

    Presheaf part = representable(site, D, r - 1);
    std::vector<const Presheaf*> parts(comps.size(), &part);
    Colimit cop = coproduct(parts);

    auto comp_index = [&](const Subset& d, const Subset& x) {
        for (size_t k = 0; k < comps.size(); ++k)
            if (comps[k].delta == d && comps[k].xi == x) return static_cast<size_t>(k);
        throw std::logic_error("boundary component lookup failed");
    };

    // The parallel pair: one source component per codegree-4 element delta'
    // and marker xi' below its complement; each maps into the two
    // codegree-2 faces above delta' by compressed faces.
    struct Source {
        size_t target[2];
        CubeMorphism leg[2];
    };
    std::vector<Source> sources;
    if (r >= 2)
        for (uint32_t m = 0; m <= Subset::low_mask(r); ++m) {
            Subset dp(r, m);
            if (dp.size() != r - 2) continue;
            auto missing = neg(dp).positions();
            for (uint32_t xm = 0;; xm = (xm - neg(dp).bits) & neg(dp).bits) {
                Subset xp(r, xm);
                Source out{{0, 0}, {cube_identity(S, 0), cube_identity(S, 0)}};
                for (int side = 0; side < 2; ++side) {
                    Subset di(r, dp.bits | (1u << missing[static_cast<size_t>(side)]));
                    Subset eps = compress(di, dp);
                    Subset marker = compress(di, meet(xp, di));
                    out.target[side] = comp_index(di, meet(xp, neg(di)));
                    out.leg[side] = face(S, eps, marker);
                }
                sources.push_back(std::move(out));
                if (xm == neg(dp).bits) break;
            }
        }

    Colimit q{empty_presheaf(site, D), {}};
    if (sources.empty()) {
        q = quotient(cop.presheaf, {});
    } else {
        Presheaf lpart = representable(site, D, r - 2);
        std::vector<const Presheaf*> lparts(sources.size(), &lpart);
        Colimit lcop = coproduct(lparts);
        PresheafMap maps[2];
        for (auto& mp : maps) mp.cells.resize(static_cast<size_t>(D) + 1);
        for (int p = 0; p <= D; ++p) {
            maps[0].cells[static_cast<size_t>(p)].resize(
                static_cast<size_t>(lcop.presheaf.cell_count(p)));
            maps[1].cells[static_cast<size_t>(p)].resize(
                static_cast<size_t>(lcop.presheaf.cell_count(p)));
            const auto& hm = site->homs(p, r - 2);
            for (size_t k = 0; k < sources.size(); ++k)
                for (size_t u = 0; u < hm.size(); ++u) {
                    int pos = lcop.legs[k].cells[static_cast<size_t>(p)][u];
                    for (int side = 0; side < 2; ++side) {
                        int image = site->index_of(
                            cube_compose(S, sources[k].leg[side], hm[u]));
                        maps[side].cells[static_cast<size_t>(p)][static_cast<size_t>(pos)] =
                            cop.legs[sources[k].target[side]].cells[static_cast<size_t>(p)][static_cast<size_t>(image)];
                    }
                }
        }
        Colimit co = coequalizer(lcop.presheaf, cop.presheaf, maps[0], maps[1]);
        q = {std::move(co.presheaf), {std::move(co.legs[1])}};
    }

    // The induced map into the representable: component (delta, xi) includes
    // by postcomposition with delta^xi. It must be constant on classes.
    std::vector<std::vector<int>> into(static_cast<size_t>(D) + 1);
    for (int p = 0; p <= D; ++p)
        into[static_cast<size_t>(p)].assign(static_cast<size_t>(q.presheaf.cell_count(p)), -1);
    for (size_t k = 0; k < comps.size(); ++k) {
        CubeMorphism fc = face(S, comps[k].delta, comps[k].xi);
        for (int p = 0; p <= D; ++p) {
            const auto& hm = site->homs(p, r - 1);
            for (size_t c = 0; c < hm.size(); ++c) {
                int pre = cop.legs[k].cells[static_cast<size_t>(p)][c];
                int cls = q.legs[0].cells[static_cast<size_t>(p)][static_cast<size_t>(pre)];
                int image = site->index_of(cube_compose(S, fc, hm[c]));
                int& slot = into[static_cast<size_t>(p)][static_cast<size_t>(cls)];
                if (slot == -1)
                    slot = image;
                else if (slot != image)
                    throw std::logic_error("boundary coequalizer map not constant on classes");
            }
        }
    }
    return {std::move(q.presheaf), PresheafMap{std::move(into)}};
}

// ---------------------------------------------------------------------------
// Tensor
// ---------------------------------------------------------------------------

Tensor::Tensor(const Presheaf& X, const Presheaf& Y)
    : site_(X.site_handle()), X_(X), Y_(Y), P_(X.site_handle(), X.max_degree()) {
    if (X.site_handle() != Y.site_handle())
        throw std::invalid_argument("tensor factors must share a site");
    if (X.max_degree() != Y.max_degree())
        throw std::invalid_argument("tensor factors must share a degree bound");
    const Site& S = site_->base();
    if (!S.is_monoidal()) throw std::logic_error("tensor requires a monoidal site");
    int D = X.max_degree();

    triples_.resize(static_cast<size_t>(D) + 1);
    triple_index_.resize(static_cast<size_t>(D) + 1);
    node_class_.resize(static_cast<size_t>(D) + 1);
    reps_.resize(static_cast<size_t>(D) + 1);

    for (int p = 0; p <= D; ++p) {
        auto& triples = triples_[static_cast<size_t>(p)];
        long long nodes = 0;
        for (uint32_t mask = 0; mask <= Subset::low_mask(p); ++mask) {
            int g = std::popcount(mask);
            int order = S.group_order(g);
            for (int tau = 0; tau < order; ++tau) {
                CubeMorphism tail = tail_morphism(S, p, mask, tau);
                for (int j1 = 0; j1 <= g; ++j1) {
                    triple_index_[static_cast<size_t>(p)][{mask, tau, j1}] =
                        static_cast<int>(triples.size());
                    triples.push_back({mask, tau, j1, nodes, tail});
                    nodes += static_cast<long long>(X_.cell_count(j1)) * Y_.cell_count(g - j1);
                }
            }
            if (mask == Subset::low_mask(p)) break;
        }

        UnionFind uf(static_cast<size_t>(nodes));
        for (const Triple& t : triples) {
            int g = std::popcount(t.gamma);
            int j1 = t.j1, j2 = g - j1;
            for (int p1 = 0; p1 <= D; ++p1) {
                if (X_.cell_count(p1) == 0) continue;
                const auto& homs1 = site_->homs(j1, p1);
                for (int p2 = 0; p2 <= D; ++p2) {
                    if (Y_.cell_count(p2) == 0) continue;
                    const auto& homs2 = site_->homs(j2, p2);
                    for (size_t ic = 0; ic < homs1.size(); ++ic) {
                        const auto& rowXc = X_.action_row(j1, p1, static_cast<int>(ic));
                        for (size_t id = 0; id < homs2.size(); ++id) {
                            const auto& rowYd = Y_.action_row(j2, p2, static_cast<int>(id));
                            CubeMorphism u = cube_compose(
                                S, tensor_mor(S, homs1[ic], homs2[id]), t.tail);
                            Split sp = split(p1, p2, u);
                            const Triple& tt = triples[static_cast<size_t>(sp.triple)];
                            int tj2 = std::popcount(tt.gamma) - tt.j1;
                            const auto& rowXe =
                                X_.action_row(sp.e1.src(), p1, site_->index_of(sp.e1));
                            const auto& rowYe =
                                Y_.action_row(sp.e2.src(), p2, site_->index_of(sp.e2));
                            long long yc = Y_.cell_count(j2);
                            long long tyc = Y_.cell_count(tj2);
                            for (int x = 0; x < X_.cell_count(p1); ++x)
                                for (int y = 0; y < Y_.cell_count(p2); ++y)
                                    uf.unite(static_cast<size_t>(t.base + rowXc[static_cast<size_t>(x)] * yc +
                                                                 rowYd[static_cast<size_t>(y)]),
                                             static_cast<size_t>(tt.base + rowXe[static_cast<size_t>(x)] * tyc +
                                                                 rowYe[static_cast<size_t>(y)]));
                        }
                    }
                }
            }
        }

        auto& classes = node_class_[static_cast<size_t>(p)];
        classes.assign(static_cast<size_t>(nodes), -1);
        for (long long v = 0; v < nodes; ++v)
            if (static_cast<long long>(uf.find(static_cast<size_t>(v))) == v) {
                int k = static_cast<int>(reps_[static_cast<size_t>(p)].size());
                classes[static_cast<size_t>(v)] = k;
                // decode the node back into its canonical tuple
                size_t ti = triples.size();
                while (ti > 0 && triples[ti - 1].base > v) --ti;
                const Triple& t = triples[ti - 1];
                int j2 = std::popcount(t.gamma) - t.j1;
                long long off = v - t.base;
                long long yc = std::max(1, Y_.cell_count(j2));
                reps_[static_cast<size_t>(p)].push_back(
                    {t.gamma, t.tau, t.j1, static_cast<int>(off / yc), static_cast<int>(off % yc)});
                P_.add_cell(p, pad_name("t", k));
            }
        for (long long v = 0; v < nodes; ++v)
            classes[static_cast<size_t>(v)] = classes[uf.find(static_cast<size_t>(v))];
    }

    // Action tables: precompose the canonical tail and resplit.
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n) {
            const auto& hm = site_->homs(m, n);
            for (size_t mor = 0; mor < hm.size(); ++mor)
                for (int k = 0; k < P_.cell_count(n); ++k) {
                    const TensorCell& rep = reps_[static_cast<size_t>(n)][static_cast<size_t>(k)];
                    int j2 = std::popcount(rep.gamma) - rep.j1;
                    const Triple& t = triples_[static_cast<size_t>(n)][static_cast<size_t>(
                        triple_index(n, rep.gamma, rep.tau, rep.j1))];
                    CubeMorphism v = cube_compose(S, t.tail, hm[mor]);
                    Split sp = split(rep.j1, j2, v);
                    const Triple& tt = triples_[static_cast<size_t>(m)][static_cast<size_t>(sp.triple)];
                    int tj2 = std::popcount(tt.gamma) - tt.j1;
                    long long node = tt.base +
                                     static_cast<long long>(X_.act(sp.e1, rep.x)) * Y_.cell_count(tj2) +
                                     Y_.act(sp.e2, rep.y);
                    P_.set_action(m, n, static_cast<int>(mor), k,
                                  node_class_[static_cast<size_t>(m)][static_cast<size_t>(node)]);
                }
        }
    P_.seal();
}

long long Tensor::node_id(int p, int triple, int x, int y) const {
    const Triple& t = triples_[static_cast<size_t>(p)][static_cast<size_t>(triple)];
    int j2 = std::popcount(t.gamma) - t.j1;
    return t.base + static_cast<long long>(x) * Y_.cell_count(j2) + y;
}

int Tensor::triple_index(int p, uint32_t gamma, int tau, int j1) const {
    const auto& idx = triple_index_[static_cast<size_t>(p)];
    auto it = idx.find({gamma, tau, j1});
    if (it == idx.end()) throw std::logic_error("tensor triple lookup failed");
    return it->second;
}

// Splits a morphism u: p -> p1+p2 along its normal form into the canonical
// tail tau^ gamma-dagger followed by a block tensor e1 (x) e2 of twistless
// morphisms; monotonicity makes the block split at an initial segment.
Tensor::Split Tensor::split(int p1, int p2, const CubeMorphism& u) const {
    const Site& S = site_->base();
    NormalForm nf = normal_form(S, u);
    int g = nf.gamma.size();
    const auto& mapv = nf.sigma.map;
    uint32_t lowmask = Subset::low_mask(p1);
    int k1 = std::popcount(nf.delta.bits & lowmask);
    int g1 = 0;
    while (g1 < g && mapv[static_cast<size_t>(g1)] < k1) ++g1;

    Subset d1(p1, nf.delta.bits & lowmask);
    Subset x1(p1, nf.xi.bits & lowmask);
    Subset d2(p2, nf.delta.bits >> p1);
    Subset x2(p2, nf.xi.bits >> p1);

    BaseMorphism m1;
    m1.src = g1;
    m1.dst = k1;
    m1.map.assign(mapv.begin(), mapv.begin() + g1);
    BaseMorphism m2;
    m2.src = g - g1;
    m2.dst = nf.delta.size() - k1;
    for (int i = g1; i < g; ++i)
        m2.map.push_back(static_cast<uint8_t>(mapv[static_cast<size_t>(i)] - k1));

    Split out;
    out.triple = triple_index(nf.src, nf.gamma.bits, nf.sigma.twist, g1);
    out.e1 = cube_compose(S, face(S, d1, x1), cube_of_base(m1));
    out.e2 = cube_compose(S, face(S, d2, x2), cube_of_base(m2));
    return out;
}

int Tensor::class_of_node(int p, long long node) const {
    return node_class_[static_cast<size_t>(p)].at(static_cast<size_t>(node));
}

int Tensor::cell_of(int p, const TensorCell& t) const {
    int j2 = std::popcount(t.gamma) - t.j1;
    long long node = triples_[static_cast<size_t>(p)][static_cast<size_t>(
                         triple_index(p, t.gamma, t.tau, t.j1))]
                         .base +
                     static_cast<long long>(t.x) * Y_.cell_count(j2) + t.y;
    return class_of_node(p, node);
}

const TensorCell& Tensor::representative(int p, int cell) const {
    return reps_.at(static_cast<size_t>(p)).at(static_cast<size_t>(cell));
}

int Tensor::reduce(int p1, int x, int p2, int y, const CubeMorphism& u) const {
    if (u.dst() != p1 + p2) throw std::invalid_argument("reduce target degree mismatch");
    Split sp = split(p1, p2, u);
    return class_of_node(u.src(), node_id(u.src(), sp.triple, X_.act(sp.e1, x), Y_.act(sp.e2, y)));
}

// ---------------------------------------------------------------------------
// Tensor comparisons
// ---------------------------------------------------------------------------

PresheafMap tensor_map(const Tensor& from, const Tensor& to,
                       const PresheafMap& f, const PresheafMap& g) {
    int D = from.max_degree();
    PresheafMap out;
    out.cells.resize(static_cast<size_t>(D) + 1);
    for (int p = 0; p <= D; ++p) {
        out.cells[static_cast<size_t>(p)].resize(static_cast<size_t>(from.presheaf().cell_count(p)));
        for (int k = 0; k < from.presheaf().cell_count(p); ++k) {
            TensorCell rep = from.representative(p, k);
            int j2 = std::popcount(rep.gamma) - rep.j1;
            rep.x = f.cells[static_cast<size_t>(rep.j1)][static_cast<size_t>(rep.x)];
            rep.y = g.cells[static_cast<size_t>(j2)][static_cast<size_t>(rep.y)];
            out.cells[static_cast<size_t>(p)][static_cast<size_t>(k)] = to.cell_of(p, rep);
        }
    }
    return out;
}

PresheafMap tensor_into_representable(const Tensor& t, const CellToMorphism& fx,
                                      const CellToMorphism& fy) {
    const CubeSite& cs = t.presheaf().site();
    const Site& S = cs.base();
    int D = t.max_degree();
    PresheafMap out;
    out.cells.resize(static_cast<size_t>(D) + 1);
    for (int p = 0; p <= D; ++p) {
        out.cells[static_cast<size_t>(p)].resize(static_cast<size_t>(t.presheaf().cell_count(p)));
        for (int k = 0; k < t.presheaf().cell_count(p); ++k) {
            const TensorCell& rep = t.representative(p, k);
            int j2 = std::popcount(rep.gamma) - rep.j1;
            CubeMorphism mx = fx(rep.j1, rep.x);
            CubeMorphism my = fy(j2, rep.y);
            CubeMorphism tail = tail_morphism(S, p, rep.gamma, rep.tau);
            out.cells[static_cast<size_t>(p)][static_cast<size_t>(k)] =
                cs.index_of(cube_compose(S, tensor_mor(S, mx, my), tail));
        }
    }
    return out;
}

CellToMorphism representable_cells(const std::shared_ptr<const CubeSite>& site, int r) {
    return [site, r](int degree, int cell) { return site->homs(degree, r)[static_cast<size_t>(cell)]; };
}

CellToMorphism subpresheaf_cells(const std::shared_ptr<const CubeSite>& site,
                                 const SubPresheaf& sub, int r) {
    // copy the inclusion table so the returned closure owns its data
    auto inclusion = sub.inclusion.cells;
    return [site, inclusion, r](int degree, int cell) {
        return site->homs(degree, r)[static_cast<size_t>(
            inclusion[static_cast<size_t>(degree)][static_cast<size_t>(cell)])];
    };
}

namespace {

PresheafMap tensor_unit(const Tensor& t, bool collapse_right) {
    const CubeSite& cs = t.presheaf().site();
    const Site& S = cs.base();
    int D = t.max_degree();
    const Presheaf& F = collapse_right ? t.left() : t.right();
    PresheafMap out;
    out.cells.resize(static_cast<size_t>(D) + 1);
    for (int p = 0; p <= D; ++p) {
        out.cells[static_cast<size_t>(p)].resize(static_cast<size_t>(t.presheaf().cell_count(p)));
        for (int k = 0; k < t.presheaf().cell_count(p); ++k) {
            const TensorCell& rep = t.representative(p, k);
            int j2 = std::popcount(rep.gamma) - rep.j1;
            CubeMorphism tail = tail_morphism(S, p, rep.gamma, rep.tau);
            CubeMorphism pi = collapse_right
                                  ? tensor_mor(S, cube_identity(S, rep.j1), cs.homs(j2, 0)[0])
                                  : tensor_mor(S, cs.homs(rep.j1, 0)[0], cube_identity(S, j2));
            int cell = collapse_right ? rep.x : rep.y;
            out.cells[static_cast<size_t>(p)][static_cast<size_t>(k)] =
                F.act(cube_compose(S, pi, tail), cell);
        }
    }
    return out;
}

} // namespace

PresheafMap tensor_unit_right(const Tensor& t) { return tensor_unit(t, true); }
PresheafMap tensor_unit_left(const Tensor& t) { return tensor_unit(t, false); }

// ---------------------------------------------------------------------------
// Cylinder
// ---------------------------------------------------------------------------

Cylinder cylinder(const Presheaf& X) {
    auto site = X.site_handle();
    int D = X.max_degree();
    Presheaf interval = representable(site, D, 1);

    // the two vertices of the interval at degree 0
    const auto& vertices = site->homs(0, 1);
    int v0 = -1, v1 = -1;
    for (size_t i = 0; i < vertices.size(); ++i)
        (vertices[i].xi.is_empty() ? v0 : v1) = static_cast<int>(i);
    if (v0 < 0 || v1 < 0) throw std::logic_error("interval vertices not found");

    Tensor T(X, interval);
    PresheafMap i0, i1;
    i0.cells.resize(static_cast<size_t>(D) + 1);
    i1.cells.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        i0.cells[static_cast<size_t>(n)].resize(static_cast<size_t>(X.cell_count(n)));
        i1.cells[static_cast<size_t>(n)].resize(static_cast<size_t>(X.cell_count(n)));
        for (int x = 0; x < X.cell_count(n); ++x) {
            TensorCell c{Subset::full(n).bits, 0, n, x, v0};
            i0.cells[static_cast<size_t>(n)][static_cast<size_t>(x)] = T.cell_of(n, c);
            c.y = v1;
            i1.cells[static_cast<size_t>(n)][static_cast<size_t>(x)] = T.cell_of(n, c);
        }
    }
    PresheafMap retr = tensor_unit_right(T);
    return {std::move(T), std::move(i0), std::move(i1), std::move(retr)};
}

bool is_homotopy(const Cylinder& cyl, const PresheafMap& h,
                 const PresheafMap& f0, const PresheafMap& f1) {
    return compose_map(h, cyl.iota0) == f0 && compose_map(h, cyl.iota1) == f1;
}

// ---------------------------------------------------------------------------
// Law suite
// ---------------------------------------------------------------------------

namespace {

struct LawContext {
    std::shared_ptr<const CubeSite> site;
    int D;
    // composition index tables comp[(m,n,q)][u][v] = index of hom(n,q)[v] . hom(m,n)[u]
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> comp;

    const std::vector<std::vector<int>>& composition(int m, int n, int q) {
        auto key = std::make_tuple(m, n, q);
        auto it = comp.find(key);
        if (it != comp.end()) return it->second;
        const Site& S = site->base();
        const auto& hmn = site->homs(m, n);
        const auto& hnq = site->homs(n, q);
        std::vector<std::vector<int>> t(hmn.size(), std::vector<int>(hnq.size()));
        for (size_t u = 0; u < hmn.size(); ++u)
            for (size_t v = 0; v < hnq.size(); ++v)
                t[u][v] = site->index_of(cube_compose(S, hnq[v], hmn[u]));
        return comp.emplace(key, std::move(t)).first->second;
    }
};

bool check_functorial(LawContext& ctx, const Presheaf& X, long long& checks, std::string& witness) {
    int D = ctx.D;
    const Site& S = ctx.site->base();
    // identities act as identities
    for (int n = 0; n <= D; ++n) {
        int id = ctx.site->index_of(cube_identity(S, n));
        const auto& row = X.action_row(n, n, id);
        for (int c = 0; c < X.cell_count(n); ++c) {
            ++checks;
            if (row[static_cast<size_t>(c)] != c) {
                witness = "identity action fails at degree " + std::to_string(n) + " cell " +
                          X.cell_name(n, c);
                return false;
            }
        }
    }
    // composition: X(v . u) = X(u) . X(v) for u: m -> n, v: n -> q
    for (int m = 0; m <= D; ++m)
        for (int n = 0; n <= D; ++n)
            for (int q = 0; q <= D; ++q) {
                const auto& table = ctx.composition(m, n, q);
                for (size_t u = 0; u < table.size(); ++u) {
                    const auto& rowU = X.action_row(m, n, static_cast<int>(u));
                    for (size_t v = 0; v < table[u].size(); ++v) {
                        const auto& rowV = X.action_row(n, q, static_cast<int>(v));
                        const auto& rowVU = X.action_row(m, q, table[u][v]);
                        for (int c = 0; c < X.cell_count(q); ++c) {
                            ++checks;
                            if (rowU[static_cast<size_t>(rowV[static_cast<size_t>(c)])] !=
                                rowVU[static_cast<size_t>(c)]) {
                                witness = "functoriality fails at (" + std::to_string(m) + "," +
                                          std::to_string(n) + "," + std::to_string(q) + ")";
                                return false;
                            }
                        }
                    }
                }
            }
    return true;
}

} // namespace

Report verify_presheaf_laws(const Site& site, int D) {
    Report report{"presheaf-laws", site.selector(), D, {}};
    auto cs = std::make_shared<const CubeSite>(site);
    const Site& S = cs->base();
    LawContext ctx{cs, D, {}};
    int top = std::min(D, 3);

    std::vector<Presheaf> reps;
    for (int r = 0; r <= top; ++r) reps.push_back(representable(cs, D, r));
    std::vector<SubPresheaf> bds;
    for (int r = 0; r <= top; ++r) bds.push_back(boundary(cs, D, r));

    // --- action functoriality over a panel of objects ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (const auto& X : reps) ok = ok && check_functorial(ctx, X, checks, witness);
        for (const auto& B : bds) ok = ok && check_functorial(ctx, B.presheaf, checks, witness);
        if (D >= 2) {
            Tensor t11(reps[1], reps[1]);
            ok = ok && check_functorial(ctx, t11.presheaf(), checks, witness);
        }
        report.add("action-functoriality", ok, checks, witness);
    }

    // --- Yoneda: the action on the identity cell recovers the morphism ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 0; ok && r <= top; ++r) {
            int id = cs->index_of(cube_identity(S, r));
            for (int p = 0; ok && p <= D; ++p) {
                const auto& hm = cs->homs(p, r);
                for (size_t u = 0; u < hm.size(); ++u) {
                    ++checks;
                    if (reps[static_cast<size_t>(r)].act_indexed(p, r, static_cast<int>(u), id) !=
                        static_cast<int>(u)) {
                        witness = "yoneda fails at r=" + std::to_string(r) + " p=" + std::to_string(p);
                        ok = false;
                        break;
                    }
                }
            }
        }
        report.add("yoneda-identity", ok, checks, witness);
    }

    // --- boundary: EZ filter vs coequalizer, cellwise ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 0; ok && r <= top; ++r) {
            BoundaryOracle oracle = boundary_coequalizer(cs, D, r);
            const SubPresheaf& filt = bds[static_cast<size_t>(r)];
            for (int p = 0; ok && p <= D; ++p) {
                ++checks;
                if (oracle.presheaf.cell_count(p) != filt.presheaf.cell_count(p)) {
                    witness = "cell count mismatch at r=" + std::to_string(r) + " p=" + std::to_string(p) +
                              ": coequalizer " + std::to_string(oracle.presheaf.cell_count(p)) +
                              " vs filter " + std::to_string(filt.presheaf.cell_count(p));
                    ok = false;
                    break;
                }
                std::set<int> image;
                for (int c = 0; c < oracle.presheaf.cell_count(p); ++c)
                    image.insert(oracle.into_rep.cells[static_cast<size_t>(p)][static_cast<size_t>(c)]);
                ++checks;
                if (static_cast<int>(image.size()) != oracle.presheaf.cell_count(p)) {
                    witness = "coequalizer map not injective at r=" + std::to_string(r);
                    ok = false;
                    break;
                }
                std::set<int> members(filt.inclusion.cells[static_cast<size_t>(p)].begin(),
                                      filt.inclusion.cells[static_cast<size_t>(p)].end());
                ++checks;
                if (image != members) {
                    witness = "images differ at r=" + std::to_string(r) + " p=" + std::to_string(p);
                    ok = false;
                }
            }
        }
        report.add("boundary-two-routes", ok, checks, witness);
    }

    // --- boundary shape: inclusion natural; degrees 0 and 1 look right ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 0; ok && r <= top; ++r) {
            ++checks;
            if (!natural(bds[static_cast<size_t>(r)].presheaf, reps[static_cast<size_t>(r)],
                         bds[static_cast<size_t>(r)].inclusion, &witness)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (int p = 0; p <= D; ++p) {
                ++checks;
                if (bds[0].presheaf.cell_count(p) != 0) {
                    witness = "boundary(0) not empty";
                    ok = false;
                    break;
                }
                if (top >= 1) {
                    ++checks;
                    if (bds[1].presheaf.cell_count(p) != 2) {
                        witness = "boundary(1) should be two points, degree " + std::to_string(p);
                        ok = false;
                        break;
                    }
                }
            }
        }
        report.add("boundary-inclusion", ok, checks, witness);
    }

    // --- skeleton laws: chain, empty base, degeneracy orthogonality ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 0; ok && r <= top; ++r) {
            const Presheaf& X = reps[static_cast<size_t>(r)];
            SubPresheaf prev = skeleton(X, -1);
            ++checks;
            if (prev.presheaf.total_cells() != 0) {
                witness = "skeleton below degree 0 not empty";
                ok = false;
                break;
            }
            for (int k = 0; ok && k <= D; ++k) {
                SubPresheaf cur = skeleton(X, k);
                for (int n = 0; n <= D; ++n) {
                    ++checks;
                    if (cur.presheaf.cell_count(n) < prev.presheaf.cell_count(n)) {
                        witness = "skeleton chain not monotone";
                        ok = false;
                        break;
                    }
                }
                if (k >= r) {
                    ++checks;
                    if (cur.presheaf.total_cells() != X.total_cells()) {
                        witness = "skeleton at degree r is not the whole representable";
                        ok = false;
                    }
                }
                prev = std::move(cur);
            }
        }
        if (ok && site.kind() == SiteKind::Plain && top >= 1) {
            SubPresheaf sk0 = skeleton(reps[1], 0);
            for (int p = 0; p <= D; ++p) {
                ++checks;
                if (sk0.presheaf.cell_count(p) != 2) {
                    witness = "plain interval 0-skeleton should have two cells per degree";
                    ok = false;
                    break;
                }
            }
        }
        // right orthogonality: split epimorphisms preserve the base degree
        for (int r = 0; ok && r <= top; ++r) {
            const Presheaf& X = reps[static_cast<size_t>(r)];
            for (int n = 0; ok && n <= D; ++n)
                for (int b = 0; ok && b < n; ++b) {
                    const auto& hm = cs->homs(n, b);
                    for (size_t e = 0; ok && e < hm.size(); ++e) {
                        if (!is_split_epi(hm[e])) continue;
                        const auto& row = X.action_row(n, b, static_cast<int>(e));
                        for (int c = 0; c < X.cell_count(b); ++c) {
                            ++checks;
                            if (base_degree(X, n, row[static_cast<size_t>(c)]) != base_degree(X, b, c)) {
                                witness = "split epi changed the base degree";
                                ok = false;
                                break;
                            }
                        }
                    }
                }
        }
        report.add("skeleton-laws", ok, checks, witness);
    }

    // --- non-degenerate decomposition laws ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        std::vector<const Presheaf*> panel;
        for (const auto& X : reps) panel.push_back(&X);
        for (const auto& B : bds) panel.push_back(&B.presheaf);
        for (const Presheaf* Xp : panel) {
            const Presheaf& X = *Xp;
            for (int n = 0; ok && n <= D; ++n)
                for (int c = 0; ok && c < X.cell_count(n); ++c) {
                    Decomposition d = nondegenerate_decompose(X, n, c);
                    ++checks;
                    if (X.act(d.sigma, d.core) != c) {
                        witness = "decomposition does not recompose";
                        ok = false;
                        break;
                    }
                    ++checks;
                    if (!is_split_epi(d.sigma)) {
                        witness = "decomposition witness is not a split epi";
                        ok = false;
                        break;
                    }
                    ++checks;
                    if (!is_nondegenerate(X, d.base, d.core)) {
                        witness = "decomposition core is degenerate";
                        ok = false;
                        break;
                    }
                }
            // cores meet degeneracies only up to automorphism twists
            for (int b = 0; ok && b <= D; ++b)
                for (int n = b + 1; ok && n <= D; ++n) {
                    const auto& hm = cs->homs(n, b);
                    for (size_t e = 0; ok && e < hm.size(); ++e) {
                        if (!is_split_epi(hm[e])) continue;
                        const auto& row = X.action_row(n, b, static_cast<int>(e));
                        for (int c = 0; ok && c < X.cell_count(b); ++c) {
                            Decomposition d1 = nondegenerate_decompose(X, b, c);
                            Decomposition d2 = nondegenerate_decompose(X, n, row[static_cast<size_t>(c)]);
                            ++checks;
                            if (d1.base != d2.base) {
                                witness = "degenerate image has a different core degree";
                                ok = false;
                                break;
                            }
                            bool related = false;
                            for (int tau = 0; tau < S.group_order(d1.base) && !related; ++tau)
                                related = X.act(twist_cube(d1.base, tau), d1.core) == d2.core;
                            ++checks;
                            if (!related) {
                                witness = "cores differ beyond an automorphism twist";
                                ok = false;
                                break;
                            }
                        }
                    }
                }
        }
        report.add("decomposition-laws", ok, checks, witness);
    }

    // --- skeleton attachment squares for representables ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 0; ok && r <= top; ++r) {
            const Presheaf& X = reps[static_cast<size_t>(r)];
            for (int n = 0; ok && n <= r; ++n) {
                SubPresheaf skn = skeleton(X, n);
                SubPresheaf sklow = skeleton(X, n - 1);
                PresheafMap lowinc; // sk_{n-1} -> sk_n
                lowinc.cells.resize(static_cast<size_t>(D) + 1);
                for (int p = 0; p <= D; ++p)
                    for (int c : sklow.inclusion.cells[static_cast<size_t>(p)])
                        lowinc.cells[static_cast<size_t>(p)].push_back(
                            skn.member[static_cast<size_t>(p)][static_cast<size_t>(c)]);

                // orbits of non-degenerate n-cells under precomposition twists
                std::vector<int> nondeg;
                for (int c = 0; c < X.cell_count(n); ++c)
                    if (is_nondegenerate(X, n, c)) nondeg.push_back(c);
                std::vector<int> cell_pos(static_cast<size_t>(X.cell_count(n)), -1);
                for (size_t i = 0; i < nondeg.size(); ++i)
                    cell_pos[static_cast<size_t>(nondeg[i])] = static_cast<int>(i);
                UnionFind orb(nondeg.size());
                for (size_t i = 0; i < nondeg.size(); ++i)
                    for (int tau = 1; tau < S.group_order(n); ++tau) {
                        int im = X.act(twist_cube(n, tau), nondeg[i]);
                        orb.unite(i, static_cast<size_t>(cell_pos[static_cast<size_t>(im)]));
                    }
                std::vector<int> orbit_reps;
                for (size_t i = 0; i < nondeg.size(); ++i)
                    if (orb.find(i) == i) orbit_reps.push_back(nondeg[i]);

                // attachment data per orbit
                std::vector<Presheaf> cellsA, cellsB;
                std::vector<PresheafMap> attachA, attachB, leftBA;
                for (int x : orbit_reps) {
                    std::vector<int> stab;
                    for (int tau = 0; tau < S.group_order(n); ++tau)
                        if (X.act(twist_cube(n, tau), x) == x) stab.push_back(tau);

                    std::vector<std::array<int, 3>> relsA, relsB;
                    const SubPresheaf& bd = bds[static_cast<size_t>(n)];
                    for (int tau : stab) {
                        if (tau == 0) continue;
                        CubeMorphism tw = twist_cube(n, tau);
                        for (int p = 0; p <= D; ++p) {
                            const auto& hm = cs->homs(p, n);
                            for (size_t u = 0; u < hm.size(); ++u) {
                                int post = cs->index_of(cube_compose(S, tw, hm[u]));
                                relsA.push_back({p, static_cast<int>(u), post});
                                int sb = bd.member[static_cast<size_t>(p)][u];
                                if (sb >= 0)
                                    relsB.push_back(
                                        {p, sb, bd.member[static_cast<size_t>(p)][static_cast<size_t>(post)]});
                            }
                        }
                    }
                    Colimit qa = quotient(reps[static_cast<size_t>(n)], relsA);
                    Colimit qb = quotient(bds[static_cast<size_t>(n)].presheaf, relsB);

                    // left leg: boundary classes into representable classes
                    PresheafMap ba;
                    ba.cells.resize(static_cast<size_t>(D) + 1);
                    std::vector<std::vector<int>> set_ba(static_cast<size_t>(D) + 1);
                    for (int p = 0; p <= D; ++p)
                        set_ba[static_cast<size_t>(p)].assign(
                            static_cast<size_t>(qb.presheaf.cell_count(p)), -1);
                    bool well = true;
                    for (int p = 0; p <= D; ++p) {
                        const SubPresheaf& bd0 = bds[static_cast<size_t>(n)];
                        for (int sb = 0; sb < bd0.presheaf.cell_count(p); ++sb) {
                            int cls = qb.legs[0].cells[static_cast<size_t>(p)][static_cast<size_t>(sb)];
                            int amb = bd0.inclusion.cells[static_cast<size_t>(p)][static_cast<size_t>(sb)];
                            int target = qa.legs[0].cells[static_cast<size_t>(p)][static_cast<size_t>(amb)];
                            int& slot = set_ba[static_cast<size_t>(p)][static_cast<size_t>(cls)];
                            if (slot == -1)
                                slot = target;
                            else if (slot != target)
                                well = false;
                        }
                    }
                    ++checks;
                    if (!well) {
                        witness = "boundary orbit map not constant on classes";
                        ok = false;
                        break;
                    }
                    for (int p = 0; p <= D; ++p) ba.cells[static_cast<size_t>(p)] = set_ba[static_cast<size_t>(p)];

                    // attach maps: classes act on the chosen cell
                    auto build_attach = [&](const Colimit& q, const SubPresheaf& target,
                                            bool from_boundary, PresheafMap& outmap) {
                        std::vector<std::vector<int>> vals(static_cast<size_t>(D) + 1);
                        for (int p = 0; p <= D; ++p)
                            vals[static_cast<size_t>(p)].assign(
                                static_cast<size_t>(q.presheaf.cell_count(p)), -1);
                        bool fine = true;
                        for (int p = 0; p <= D; ++p) {
                            int total = from_boundary ? bds[static_cast<size_t>(n)].presheaf.cell_count(p)
                                                      : reps[static_cast<size_t>(n)].cell_count(p);
                            for (int c = 0; c < total; ++c) {
                                int amb = from_boundary
                                              ? bds[static_cast<size_t>(n)].inclusion.cells[static_cast<size_t>(p)][static_cast<size_t>(c)]
                                              : c;
                                int image = X.act_indexed(p, n, amb, x);
                                int member = target.member[static_cast<size_t>(p)][static_cast<size_t>(image)];
                                if (member < 0) {
                                    fine = false;
                                    break;
                                }
                                int cls = q.legs[0].cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                                int& slot = vals[static_cast<size_t>(p)][static_cast<size_t>(cls)];
                                if (slot == -1)
                                    slot = member;
                                else if (slot != member)
                                    fine = false;
                            }
                        }
                        outmap.cells = std::move(vals);
                        return fine;
                    };
                    PresheafMap am, bm;
                    bool fine = build_attach(qa, skn, false, am) && build_attach(qb, sklow, true, bm);
                    ++checks;
                    if (!fine) {
                        witness = "attachment map ill-defined at r=" + std::to_string(r) +
                                  " n=" + std::to_string(n);
                        ok = false;
                        break;
                    }
                    cellsA.push_back(std::move(qa.presheaf));
                    cellsB.push_back(std::move(qb.presheaf));
                    attachA.push_back(std::move(am));
                    attachB.push_back(std::move(bm));
                    leftBA.push_back(std::move(ba));
                }
                if (!ok) break;

                // assemble the coproducts and the square
                Presheaf CA = empty_presheaf(cs, D), CB = empty_presheaf(cs, D);
                PresheafMap attachTotalA, attachTotalB, leftTotal;
                attachTotalA.cells.resize(static_cast<size_t>(D) + 1);
                attachTotalB.cells.resize(static_cast<size_t>(D) + 1);
                leftTotal.cells.resize(static_cast<size_t>(D) + 1);
                std::vector<PresheafMap> injA, injB;
                if (!cellsA.empty()) {
                    std::vector<const Presheaf*> pa, pb;
                    for (const auto& c : cellsA) pa.push_back(&c);
                    for (const auto& c : cellsB) pb.push_back(&c);
                    Colimit ca = coproduct(pa);
                    Colimit cb = coproduct(pb);
                    injA = ca.legs;
                    injB = cb.legs;
                    for (int p = 0; p <= D; ++p) {
                        attachTotalA.cells[static_cast<size_t>(p)].resize(
                            static_cast<size_t>(ca.presheaf.cell_count(p)));
                        attachTotalB.cells[static_cast<size_t>(p)].resize(
                            static_cast<size_t>(cb.presheaf.cell_count(p)));
                        leftTotal.cells[static_cast<size_t>(p)].resize(
                            static_cast<size_t>(cb.presheaf.cell_count(p)));
                        for (size_t k = 0; k < cellsA.size(); ++k) {
                            for (int c = 0; c < cellsA[k].cell_count(p); ++c)
                                attachTotalA.cells[static_cast<size_t>(p)][static_cast<size_t>(
                                    injA[k].cells[static_cast<size_t>(p)][static_cast<size_t>(c)])] =
                                    attachA[k].cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                            for (int c = 0; c < cellsB[k].cell_count(p); ++c) {
                                int pos = injB[k].cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                                attachTotalB.cells[static_cast<size_t>(p)][static_cast<size_t>(pos)] =
                                    attachB[k].cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                                leftTotal.cells[static_cast<size_t>(p)][static_cast<size_t>(pos)] =
                                    injA[k].cells[static_cast<size_t>(p)][static_cast<size_t>(
                                        leftBA[k].cells[static_cast<size_t>(p)][static_cast<size_t>(c)])];
                            }
                        }
                    }
                    CA = std::move(ca.presheaf);
                    CB = std::move(cb.presheaf);
                } else {
                    for (int p = 0; p <= D; ++p) {
                        attachTotalA.cells[static_cast<size_t>(p)].clear();
                        attachTotalB.cells[static_cast<size_t>(p)].clear();
                        leftTotal.cells[static_cast<size_t>(p)].clear();
                    }
                }

                // square commutes
                ++checks;
                if (compose_map(lowinc, attachTotalB) != compose_map(attachTotalA, leftTotal)) {
                    witness = "attachment square does not commute at r=" + std::to_string(r) +
                              " n=" + std::to_string(n);
                    ok = false;
                    break;
                }

                // pushout half: the induced comparison is an isomorphism
                Colimit P = pushout(CB, sklow.presheaf, CA, attachTotalB, leftTotal);
                std::vector<std::vector<int>> phi(static_cast<size_t>(D) + 1);
                for (int p = 0; p <= D; ++p)
                    phi[static_cast<size_t>(p)].assign(
                        static_cast<size_t>(P.presheaf.cell_count(p)), -1);
                bool well = true;
                for (int p = 0; p <= D; ++p) {
                    for (int c = 0; c < sklow.presheaf.cell_count(p); ++c) {
                        int cls = P.legs[1].cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                        int val = lowinc.cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                        int& slot = phi[static_cast<size_t>(p)][static_cast<size_t>(cls)];
                        if (slot == -1)
                            slot = val;
                        else if (slot != val)
                            well = false;
                    }
                    for (int c = 0; c < CA.cell_count(p); ++c) {
                        int cls = P.legs[2].cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                        int val = attachTotalA.cells[static_cast<size_t>(p)][static_cast<size_t>(c)];
                        int& slot = phi[static_cast<size_t>(p)][static_cast<size_t>(cls)];
                        if (slot == -1)
                            slot = val;
                        else if (slot != val)
                            well = false;
                    }
                    for (int v : phi[static_cast<size_t>(p)])
                        if (v == -1) well = false;
                }
                PresheafMap cmp{std::move(phi)};
                ++checks;
                if (!well || !bijective_map(cmp, skn.presheaf) ||
                    !natural(P.presheaf, skn.presheaf, cmp, &witness)) {
                    if (witness.empty())
                        witness = "pushout comparison not an isomorphism at r=" + std::to_string(r) +
                                  " n=" + std::to_string(n);
                    ok = false;
                    break;
                }

                // pullback half: CB(p) is exactly the fiber product of the legs
                for (int p = 0; ok && p <= D; ++p) {
                    std::set<std::pair<int, int>> fiber;
                    for (int s = 0; s < sklow.presheaf.cell_count(p); ++s)
                        for (int a = 0; a < CA.cell_count(p); ++a)
                            if (lowinc.cells[static_cast<size_t>(p)][static_cast<size_t>(s)] ==
                                attachTotalA.cells[static_cast<size_t>(p)][static_cast<size_t>(a)])
                                fiber.insert({s, a});
                    std::set<std::pair<int, int>> through;
                    for (int b = 0; b < CB.cell_count(p); ++b) {
                        auto pr = std::make_pair(
                            attachTotalB.cells[static_cast<size_t>(p)][static_cast<size_t>(b)],
                            leftTotal.cells[static_cast<size_t>(p)][static_cast<size_t>(b)]);
                        if (!through.insert(pr).second) {
                            witness = "attachment square pullback degenerate at r=" + std::to_string(r);
                            ok = false;
                            break;
                        }
                    }
                    ++checks;
                    if (ok && fiber != through) {
                        witness = "attachment square is not a pullback at r=" + std::to_string(r) +
                                  " n=" + std::to_string(n) + " p=" + std::to_string(p);
                        ok = false;
                    }
                }
                if (!ok) break;
            }
        }
        report.add("skeleton-attachment", ok, checks, witness);
    }

    // --- tensor units ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        std::vector<const Presheaf*> panel = {&reps[0]};
        if (top >= 1) panel.push_back(&reps[1]);
        if (top >= 2) panel.push_back(&bds[2].presheaf);
        for (const Presheaf* Xp : panel) {
            Tensor tr(*Xp, reps[0]);
            PresheafMap ur = tensor_unit_right(tr);
            ++checks;
            if (!bijective_map(ur, *Xp) || !natural(tr.presheaf(), *Xp, ur, &witness)) {
                if (witness.empty()) witness = "right unit comparison fails";
                ok = false;
                break;
            }
            Tensor tl(reps[0], *Xp);
            PresheafMap ul = tensor_unit_left(tl);
            ++checks;
            if (!bijective_map(ul, *Xp) || !natural(tl.presheaf(), *Xp, ul, &witness)) {
                if (witness.empty()) witness = "left unit comparison fails";
                ok = false;
                break;
            }
        }
        report.add("tensor-unit", ok, checks, witness);
    }

    // --- tensor of representables is representable ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int a = 0; ok && a <= top; ++a)
            for (int b = 0; ok && a + b <= top; ++b) {
                Tensor t(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]);
                PresheafMap mu = tensor_into_representable(t, representable_cells(cs, a),
                                                           representable_cells(cs, b));
                ++checks;
                if (!bijective_map(mu, reps[static_cast<size_t>(a + b)]) ||
                    !natural(t.presheaf(), reps[static_cast<size_t>(a + b)], mu, &witness)) {
                    if (witness.empty())
                        witness = "tensor comparison fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")";
                    ok = false;
                }
            }
        report.add("tensor-representable", ok, checks, witness);
    }

    // --- tensor associativity through iterated comparisons ---
    if (top >= 3) {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        Tensor t11(reps[1], reps[1]);
        PresheafMap mu11 = tensor_into_representable(t11, representable_cells(cs, 1),
                                                     representable_cells(cs, 1));
        auto via = [&](const PresheafMap& inner, int innerdeg) {
            return [inner, innerdeg, cs](int degree, int cell) {
                return cs->homs(degree, innerdeg)[static_cast<size_t>(
                    inner.cells[static_cast<size_t>(degree)][static_cast<size_t>(cell)])];
            };
        };
        Tensor leftAssoc(t11.presheaf(), reps[1]);
        PresheafMap muL = tensor_into_representable(leftAssoc, via(mu11, 2), representable_cells(cs, 1));
        ++checks;
        if (!bijective_map(muL, reps[3]) || !natural(leftAssoc.presheaf(), reps[3], muL, &witness)) {
            if (witness.empty()) witness = "left association comparison fails";
            ok = false;
        }
        if (ok) {
            Tensor rightAssoc(reps[1], t11.presheaf());
            PresheafMap muR = tensor_into_representable(rightAssoc, representable_cells(cs, 1), via(mu11, 2));
            ++checks;
            if (!bijective_map(muR, reps[3]) || !natural(rightAssoc.presheaf(), reps[3], muR, &witness)) {
                if (witness.empty()) witness = "right association comparison fails";
                ok = false;
            }
        }
        report.add("tensor-associativity", ok, checks, witness);
    }

    // --- cylinders: retraction identities and the constant homotopy ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        std::vector<const Presheaf*> panel = {&reps[0]};
        if (top >= 1) panel.push_back(&reps[1]);
        if (top >= 2) {
            panel.push_back(&reps[2]);
            panel.push_back(&bds[2].presheaf);
        }
        for (const Presheaf* Xp : panel) {
            Cylinder cyl = cylinder(*Xp);
            PresheafMap id = identity_map(*Xp);
            ++checks;
            if (compose_map(cyl.retraction, cyl.iota0) != id ||
                compose_map(cyl.retraction, cyl.iota1) != id) {
                witness = "cylinder retraction is not a retraction";
                ok = false;
                break;
            }
            ++checks;
            if (!natural(*Xp, cyl.presheaf(), cyl.iota0, &witness) ||
                !natural(*Xp, cyl.presheaf(), cyl.iota1, &witness) ||
                !natural(cyl.presheaf(), *Xp, cyl.retraction, &witness)) {
                ok = false;
                break;
            }
            ++checks;
            if (!is_homotopy(cyl, cyl.retraction, id, id)) {
                witness = "constant homotopy rejected";
                ok = false;
                break;
            }
        }
        // cylinder of the terminal presheaf is the interval
        if (ok && top >= 1) {
            Cylinder cyl0 = cylinder(reps[0]);
            PresheafMap mu = tensor_into_representable(cyl0.tensor, representable_cells(cs, 0),
                                                       representable_cells(cs, 1));
            ++checks;
            if (!bijective_map(mu, reps[1]) || !natural(cyl0.presheaf(), reps[1], mu, &witness)) {
                if (witness.empty()) witness = "terminal cylinder is not the interval";
                ok = false;
            }
        }
        report.add("cylinder", ok, checks, witness);
    }

    return report;
}

} // namespace cubecat
