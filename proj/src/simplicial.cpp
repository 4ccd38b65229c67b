#include "cubecat/simplicial.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "cubecat/union_find.hpp"

namespace cubecat {

namespace {

long long power(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// chains of length k+1 in 2^n are encoded base k+2 by switch positions:
// digit c is the first chain index containing coordinate c (k+1 when absent)

long long push_chain(const std::vector<uint32_t>& push, int src, int dst,
                     long long chain, int k) {
    const int W = k + 2;
    int digit[32];
    long long tmp = chain;
    for (int c = 0; c < src; ++c) {
        digit[c] = static_cast<int>(tmp % W);
        tmp /= W;
    }
    int cnt[32] = {};
    for (int j = 0; j <= k; ++j) {
        uint32_t mask = 0;
        for (int c = 0; c < src; ++c)
            if (digit[c] <= j) mask |= 1u << c;
        uint32_t t = push[mask];
        for (int c = 0; c < dst; ++c)
            if (t & (1u << c)) ++cnt[c];
    }
    long long out = 0;
    for (int c = dst; c-- > 0;) out = out * W + (k + 1 - cnt[c]);
    return out;
}

long long chain_face(long long chain, int n, int k, int i) {
    const int W = k + 2;
    long long out = 0, scale = 1;
    for (int c = 0; c < n; ++c) {
        int d = static_cast<int>(chain % W);
        chain /= W;
        out += scale * (d - (d > i ? 1 : 0));
        scale *= W - 1;
    }
    return out;
}

long long chain_degeneracy(long long chain, int n, int k, int i) {
    const int W = k + 2;
    long long out = 0, scale = 1;
    for (int c = 0; c < n; ++c) {
        int d = static_cast<int>(chain % W);
        chain /= W;
        out += scale * (d + (d > i ? 1 : 0));
        scale *= W + 1;
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Simplicial identities
// ---------------------------------------------------------------------------

bool check_simplicial_identities(const SimplicialSet& S, std::string* witness) {
    auto fail = [&](int k, int i, int j, const char* what) {
        if (witness)
            *witness = std::string(what) + " fails at dim " + std::to_string(k) + " (i=" +
                       std::to_string(i) + ", j=" + std::to_string(j) + ")";
        return false;
    };
    // d_i d_j = d_{j-1} d_i for i < j
    for (int k = 2; k <= S.top; ++k)
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
                for (int s = 0; s < S.count(k); ++s)
                    if (S.face(k - 1, i, S.face(k, j, s)) != S.face(k - 1, j - 1, S.face(k, i, s)))
                        return fail(k, i, j, "d_i d_j");
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int k = 0; k + 2 <= S.top; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
                for (int s = 0; s < S.count(k); ++s)
                    if (S.degeneracy(k + 1, i, S.degeneracy(k, j, s)) !=
                        S.degeneracy(k + 1, j + 1, S.degeneracy(k, i, s)))
                        return fail(k, i, j, "s_i s_j");
    // d_i s_j relations
    for (int k = 0; k + 1 <= S.top; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= k + 1; ++i)
                for (int s = 0; s < S.count(k); ++s) {
                    int lhs = S.face(k + 1, i, S.degeneracy(k, j, s));
                    int rhs;
                    if (i == j || i == j + 1)
                        rhs = s;
                    else if (i < j)
                        rhs = S.degeneracy(k - 1, j - 1, S.face(k, i, s));
                    else
                        rhs = S.degeneracy(k - 1, j, S.face(k, i - 1, s));
                    if (lhs != rhs) return fail(k, i, j, "d_i s_j");
                }
    return true;
}

// ---------------------------------------------------------------------------
// Nerve of the Boolean lattice
// ---------------------------------------------------------------------------

SimplicialSet nerve_boolean(int n, int K) {
    if (n < 0 || K < 0) throw std::invalid_argument("nerve_boolean needs n, K >= 0");
    SimplicialSet S;
    S.top = K;
    S.counts.resize(static_cast<size_t>(K) + 1);
    S.faces.resize(static_cast<size_t>(K) + 1);
    S.degeneracies.resize(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        long long total = power(k + 2, n);
        if (total > INT_MAX) throw std::invalid_argument("nerve truncation too large");
        S.counts[static_cast<size_t>(k)] = static_cast<int>(total);
    }
    for (int k = 1; k <= K; ++k) {
        S.faces[static_cast<size_t>(k)].assign(static_cast<size_t>(k) + 1, {});
        for (int i = 0; i <= k; ++i) {
            auto& t = S.faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
            t.resize(static_cast<size_t>(S.count(k)));
            for (int s = 0; s < S.count(k); ++s)
                t[static_cast<size_t>(s)] = static_cast<int>(chain_face(s, n, k, i));
        }
    }
    for (int k = 0; k < K; ++k) {
        S.degeneracies[static_cast<size_t>(k)].assign(static_cast<size_t>(k) + 1, {});
        for (int i = 0; i <= k; ++i) {
            auto& t = S.degeneracies[static_cast<size_t>(k)][static_cast<size_t>(i)];
            t.resize(static_cast<size_t>(S.count(k)));
            for (int s = 0; s < S.count(k); ++s)
                t[static_cast<size_t>(s)] = static_cast<int>(chain_degeneracy(s, n, k, i));
        }
    }
    return S;
}

SimplicialSet product(const SimplicialSet& A, const SimplicialSet& B) {
    if (A.top != B.top) throw std::invalid_argument("product factors must share a truncation");
    SimplicialSet S;
    S.top = A.top;
    S.counts.resize(static_cast<size_t>(S.top) + 1);
    S.faces.resize(static_cast<size_t>(S.top) + 1);
    S.degeneracies.resize(static_cast<size_t>(S.top) + 1);
    for (int k = 0; k <= S.top; ++k) {
        long long total = static_cast<long long>(A.count(k)) * B.count(k);
        if (total > INT_MAX) throw std::invalid_argument("product truncation too large");
        S.counts[static_cast<size_t>(k)] = static_cast<int>(total);
    }
    for (int k = 1; k <= S.top; ++k) {
        S.faces[static_cast<size_t>(k)].assign(static_cast<size_t>(k) + 1, {});
        for (int i = 0; i <= k; ++i) {
            auto& t = S.faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
            t.resize(static_cast<size_t>(S.count(k)));
            for (int a = 0; a < A.count(k); ++a)
                for (int b = 0; b < B.count(k); ++b)
                    t[static_cast<size_t>(a) * B.count(k) + b] =
                        A.face(k, i, a) * B.count(k - 1) + B.face(k, i, b);
        }
    }
    for (int k = 0; k < S.top; ++k) {
        S.degeneracies[static_cast<size_t>(k)].assign(static_cast<size_t>(k) + 1, {});
        for (int i = 0; i <= k; ++i) {
            auto& t = S.degeneracies[static_cast<size_t>(k)][static_cast<size_t>(i)];
            t.resize(static_cast<size_t>(S.count(k)));
            for (int a = 0; a < A.count(k); ++a)
                for (int b = 0; b < B.count(k); ++b)
                    t[static_cast<size_t>(a) * B.count(k) + b] =
                        A.degeneracy(k, i, a) * B.count(k + 1) + B.degeneracy(k, i, b);
        }
    }
    return S;
}

std::vector<std::vector<char>> degenerate_table(const SimplicialSet& S) {
    std::vector<std::vector<char>> out(static_cast<size_t>(S.top) + 1);
    for (int k = 0; k <= S.top; ++k)
        out[static_cast<size_t>(k)].assign(static_cast<size_t>(S.count(k)), 0);
    for (int k = 0; k < S.top; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s = 0; s < S.count(k); ++s)
                out[static_cast<size_t>(k) + 1][static_cast<size_t>(S.degeneracy(k, i, s))] = 1;
    return out;
}

std::vector<int> nondegenerate_counts(const SimplicialSet& S) {
    auto table = degenerate_table(S);
    std::vector<int> out(static_cast<size_t>(S.top) + 1, 0);
    for (int k = 0; k <= S.top; ++k)
        for (char d : table[static_cast<size_t>(k)])
            if (!d) ++out[static_cast<size_t>(k)];
    return out;
}

long long euler_characteristic(const SimplicialSet& S) {
    auto nd = nondegenerate_counts(S);
    long long chi = 0;
    for (int k = 0; k <= S.top; ++k) chi += (k % 2 == 0 ? 1 : -1) * nd[static_cast<size_t>(k)];
    return chi;
}

// ---------------------------------------------------------------------------
// Realization
// ---------------------------------------------------------------------------

long long Realization::chain_count(int k, int r) const { return power(k + 2, r); }

int Realization::simplex_of(int k, int r, int cell, long long chain) const {
    long long node = offsets[static_cast<size_t>(k)][static_cast<size_t>(r)] +
                     cell * chain_count(k, r) + chain;
    return simplex_of_node[static_cast<size_t>(k)].at(static_cast<size_t>(node));
}

Realization realize(const Presheaf& X, int K) {
    if (K < 0) throw std::invalid_argument("realization needs K >= 0");
    int D = X.max_degree();
    if (K > D + 1) throw std::invalid_argument("realization truncation exceeded");
    const CubeSite& cs = X.site();
    const Site& S = cs.base();

    // generating morphisms with their actions and pushforward tables
    struct Gen {
        int src = 0, dst = 0;
        std::vector<int> action;    // X(u): X(dst) -> X(src) as a row
        std::vector<uint32_t> push; // u_*: subsets of [src] -> subsets of [dst]
    };
    std::vector<Gen> gens;
    for (int r = 0; r <= D; ++r)
        for (const CubeMorphism& u : cs.generators_into(r)) {
            if (u.src() > D) continue;
            Gen g;
            g.src = u.src();
            g.dst = r;
            g.action = X.action_row(g.src, r, cs.index_of(u));
            g.push.resize(1u << g.src);
            for (uint32_t m = 0; m < (1u << g.src); ++m)
                g.push[m] = cube_pushforward(S, u, Subset(g.src, m)).bits;
            gens.push_back(std::move(g));
        }

    Realization R;
    R.max_degree = D;
    R.space.top = K;
    R.space.counts.resize(static_cast<size_t>(K) + 1);
    R.space.faces.resize(static_cast<size_t>(K) + 1);
    R.space.degeneracies.resize(static_cast<size_t>(K) + 1);
    R.offsets.resize(static_cast<size_t>(K) + 1);
    R.simplex_of_node.resize(static_cast<size_t>(K) + 1);
    // least node of each class, for face/degeneracy construction
    std::vector<std::vector<long long>> class_node(static_cast<size_t>(K) + 1);

    for (int k = 0; k <= K; ++k) {
        auto& off = R.offsets[static_cast<size_t>(k)];
        off.assign(static_cast<size_t>(D) + 2, 0);
        for (int r = 0; r <= D; ++r)
            off[static_cast<size_t>(r) + 1] =
                off[static_cast<size_t>(r)] + X.cell_count(r) * power(k + 2, r);
        long long nodes = off[static_cast<size_t>(D) + 1];

        UnionFind uf(static_cast<size_t>(nodes));
        for (const Gen& g : gens) {
            long long wsrc = power(k + 2, g.src);
            long long wdst = power(k + 2, g.dst);
            for (long long c = 0; c < wsrc; ++c) {
                long long pc = push_chain(g.push, g.src, g.dst, c, k);
                for (int x = 0; x < X.cell_count(g.dst); ++x)
                    uf.unite(static_cast<size_t>(off[static_cast<size_t>(g.src)] +
                                                 g.action[static_cast<size_t>(x)] * wsrc + c),
                             static_cast<size_t>(off[static_cast<size_t>(g.dst)] + x * wdst + pc));
            }
        }

        auto& cls = R.simplex_of_node[static_cast<size_t>(k)];
        cls.assign(static_cast<size_t>(nodes), -1);
        for (long long v = 0; v < nodes; ++v)
            if (static_cast<long long>(uf.find(static_cast<size_t>(v))) == v) {
                cls[static_cast<size_t>(v)] = static_cast<int>(class_node[static_cast<size_t>(k)].size());
                class_node[static_cast<size_t>(k)].push_back(v);
            }
        for (long long v = 0; v < nodes; ++v)
            cls[static_cast<size_t>(v)] = cls[uf.find(static_cast<size_t>(v))];
        long long total = static_cast<long long>(class_node[static_cast<size_t>(k)].size());
        if (total > INT_MAX) throw std::invalid_argument("realization too large");
        R.space.counts[static_cast<size_t>(k)] = static_cast<int>(total);
    }

    // decode a node at dimension k into (r, cell, chain)
    auto decode = [&R, D](int k, long long node, int& r, int& cell, long long& chain) {
        const auto& off = R.offsets[static_cast<size_t>(k)];
        r = 0;
        while (r < D && node >= off[static_cast<size_t>(r) + 1]) ++r;
        long long w = power(k + 2, r);
        long long rel = node - off[static_cast<size_t>(r)];
        cell = static_cast<int>(rel / w);
        chain = rel % w;
    };

    // face and degeneracy tables on classes, verified on every node
    for (int k = 1; k <= K; ++k) {
        auto& tables = R.space.faces[static_cast<size_t>(k)];
        tables.assign(static_cast<size_t>(k) + 1, {});
        for (int i = 0; i <= k; ++i) {
            auto& t = tables[static_cast<size_t>(i)];
            t.assign(static_cast<size_t>(R.space.count(k)), -1);
            long long nodes = R.offsets[static_cast<size_t>(k)][static_cast<size_t>(D) + 1];
            for (long long v = 0; v < nodes; ++v) {
                int r, cell;
                long long chain;
                decode(k, v, r, cell, chain);
                int target = R.simplex_of(k - 1, r, cell, chain_face(chain, r, k, i));
                int& slot = t[static_cast<size_t>(
                    R.simplex_of_node[static_cast<size_t>(k)][static_cast<size_t>(v)])];
                if (slot == -1)
                    slot = target;
                else if (slot != target)
                    throw std::logic_error("realization face map not constant on classes");
            }
        }
    }
    for (int k = 0; k < K; ++k) {
        auto& tables = R.space.degeneracies[static_cast<size_t>(k)];
        tables.assign(static_cast<size_t>(k) + 1, {});
        for (int i = 0; i <= k; ++i) {
            auto& t = tables[static_cast<size_t>(i)];
            t.assign(static_cast<size_t>(R.space.count(k)), -1);
            long long nodes = R.offsets[static_cast<size_t>(k)][static_cast<size_t>(D) + 1];
            for (long long v = 0; v < nodes; ++v) {
                int r, cell;
                long long chain;
                decode(k, v, r, cell, chain);
                int target = R.simplex_of(k + 1, r, cell, chain_degeneracy(chain, r, k, i));
                int& slot = t[static_cast<size_t>(
                    R.simplex_of_node[static_cast<size_t>(k)][static_cast<size_t>(v)])];
                if (slot == -1)
                    slot = target;
                else if (slot != target)
                    throw std::logic_error("realization degeneracy map not constant on classes");
            }
        }
    }
    return R;
}

SimplicialMap realize_map(const Realization& from, const Realization& to, const PresheafMap& f) {
    if (from.space.top != to.space.top || from.max_degree != to.max_degree)
        throw std::invalid_argument("realization map bounds mismatch");
    int K = from.space.top, D = from.max_degree;
    SimplicialMap out;
    out.simplices.resize(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        auto& t = out.simplices[static_cast<size_t>(k)];
        t.assign(static_cast<size_t>(from.space.count(k)), -1);
        const auto& off = from.offsets[static_cast<size_t>(k)];
        for (int r = 0; r <= D; ++r) {
            long long w = from.chain_count(k, r);
            long long count = off[static_cast<size_t>(r) + 1] - off[static_cast<size_t>(r)];
            for (long long rel = 0; rel < count; ++rel) {
                long long v = off[static_cast<size_t>(r)] + rel;
                int cell = static_cast<int>(rel / w);
                long long chain = rel % w;
                int target = to.simplex_of(
                    k, r, f.cells[static_cast<size_t>(r)][static_cast<size_t>(cell)], chain);
                int& slot = t[static_cast<size_t>(
                    from.simplex_of_node[static_cast<size_t>(k)][static_cast<size_t>(v)])];
                if (slot == -1)
                    slot = target;
                else if (slot != target)
                    throw std::logic_error("realized map not constant on classes");
            }
        }
    }
    return out;
}

bool simplicial_map_natural(const SimplicialSet& A, const SimplicialSet& B,
                            const SimplicialMap& f, std::string* witness) {
    if (A.top != B.top || static_cast<int>(f.simplices.size()) != A.top + 1) {
        if (witness) *witness = "truncation mismatch";
        return false;
    }
    for (int k = 0; k <= A.top; ++k)
        if (static_cast<int>(f.simplices[static_cast<size_t>(k)].size()) != A.count(k)) {
            if (witness) *witness = "component size mismatch at dim " + std::to_string(k);
            return false;
        }
    for (int k = 1; k <= A.top; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s = 0; s < A.count(k); ++s)
                if (B.face(k, i, f.simplices[static_cast<size_t>(k)][static_cast<size_t>(s)]) !=
                    f.simplices[static_cast<size_t>(k) - 1][static_cast<size_t>(A.face(k, i, s))]) {
                    if (witness)
                        *witness = "face naturality fails at dim " + std::to_string(k) + " i=" +
                                   std::to_string(i);
                    return false;
                }
    for (int k = 0; k < A.top; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s = 0; s < A.count(k); ++s)
                if (B.degeneracy(k, i, f.simplices[static_cast<size_t>(k)][static_cast<size_t>(s)]) !=
                    f.simplices[static_cast<size_t>(k) + 1]
                               [static_cast<size_t>(A.degeneracy(k, i, s))]) {
                    if (witness)
                        *witness = "degeneracy naturality fails at dim " + std::to_string(k) +
                                   " i=" + std::to_string(i);
                    return false;
                }
    return true;
}

bool simplicial_map_injective(const SimplicialMap& f) {
    for (const auto& level : f.simplices) {
        std::set<int> seen;
        for (int v : level)
            if (!seen.insert(v).second) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Law suite
// ---------------------------------------------------------------------------

Report verify_topology(const Site& site, int D) {
    Report report{"topology", site.selector(), D, {}};
    auto cs = std::make_shared<const CubeSite>(site);
    const Site& S = cs->base();
    int top = std::min(D, 3);
    int K = top + 1;

    // --- nerves: counts, identities, Euler characteristic, products ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        std::vector<SimplicialSet> nerves;
        for (int n = 0; n <= 3; ++n) nerves.push_back(nerve_boolean(n, 4));
        for (int n = 0; ok && n <= 3; ++n) {
            for (int k = 0; k <= 4; ++k) {
                ++checks;
                if (nerves[static_cast<size_t>(n)].count(k) != power(k + 2, n)) {
                    witness = "nerve count wrong at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    ok = false;
                    break;
                }
            }
            ++checks;
            if (ok && !check_simplicial_identities(nerves[static_cast<size_t>(n)], &witness)) ok = false;
            ++checks;
            if (ok && euler_characteristic(nerves[static_cast<size_t>(n)]) != 1) {
                witness = "nerve Euler characteristic differs from 1 at n=" + std::to_string(n);
                ok = false;
            }
        }
        if (ok) {
            SimplicialSet p = product(nerves[1], nerves[1]);
            ++checks;
            if (!check_simplicial_identities(p, &witness)) ok = false;
            for (int k = 0; ok && k <= 4; ++k) {
                ++checks;
                if (p.count(k) != nerves[2].count(k)) {
                    witness = "product of intervals has wrong counts";
                    ok = false;
                }
            }
        }
        report.add("nerve-boolean", ok, checks, witness);
    }

    // --- pushforward functoriality, the backbone of the realization ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int n = 0; ok && n <= D; ++n) {
            CubeMorphism id = cube_identity(S, n);
            for (uint32_t e = 0; e < (1u << n); ++e) {
                ++checks;
                if (cube_pushforward(S, id, Subset(n, e)).bits != e) {
                    witness = "identity pushforward is not the identity";
                    ok = false;
                    break;
                }
            }
        }
        for (int m = 0; ok && m <= D; ++m)
            for (int n = 0; ok && n <= D; ++n)
                for (int q = 0; ok && q <= D; ++q) {
                    const auto& inner = cs->homs(m, n);
                    const auto& outer = cs->homs(n, q);
                    for (const auto& u : inner) {
                        for (const auto& v : outer) {
                            CubeMorphism vu = cube_compose(S, v, u);
                            for (uint32_t e = 0; e < (1u << m); ++e) {
                                ++checks;
                                Subset eta(m, e);
                                if (cube_pushforward(S, vu, eta).bits !=
                                    cube_pushforward(S, v, cube_pushforward(S, u, eta)).bits) {
                                    witness = "pushforward not functorial at (" + std::to_string(m) +
                                              "," + std::to_string(n) + "," + std::to_string(q) + ")";
                                    ok = false;
                                    break;
                                }
                            }
                            if (!ok) break;
                        }
                        if (!ok) break;
                    }
                }
        report.add("pushforward-functorial", ok, checks, witness);
    }

    // --- realize(representable) against the nerve, as an isomorphism ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 0; ok && r <= top; ++r) {
            Presheaf rep = representable(cs, D, r);
            Realization R = realize(rep, K);
            SimplicialSet N = nerve_boolean(r, K);
            ++checks;
            if (!check_simplicial_identities(R.space, &witness)) {
                ok = false;
                break;
            }
            // the comparison: a node (r', u, chain) maps to u_* chain in 2^r
            SimplicialMap iso;
            iso.simplices.resize(static_cast<size_t>(K) + 1);
            for (int k = 0; ok && k <= K; ++k) {
                auto& t = iso.simplices[static_cast<size_t>(k)];
                t.assign(static_cast<size_t>(R.space.count(k)), -1);
                for (int rp = 0; rp <= D; ++rp) {
                    const auto& hm = cs->homs(rp, r);
                    std::vector<std::vector<uint32_t>> push(hm.size());
                    for (size_t u = 0; u < hm.size(); ++u) {
                        push[u].resize(1u << rp);
                        for (uint32_t msk = 0; msk < (1u << rp); ++msk)
                            push[u][msk] = cube_pushforward(S, hm[u], Subset(rp, msk)).bits;
                    }
                    long long w = R.chain_count(k, rp);
                    for (size_t u = 0; u < hm.size(); ++u)
                        for (long long chain = 0; chain < w; ++chain) {
                            int cls = R.simplex_of(k, rp, static_cast<int>(u), chain);
                            int target =
                                static_cast<int>(push_chain(push[u], rp, r, chain, k));
                            int& slot = t[static_cast<size_t>(cls)];
                            if (slot == -1)
                                slot = target;
                            else if (slot != target) {
                                witness = "nerve comparison not constant on classes at r=" +
                                          std::to_string(r);
                                ok = false;
                            }
                        }
                }
            }
            ++checks;
            if (ok) {
                bool bij = true;
                for (int k = 0; k <= K; ++k) {
                    std::set<int> seen(iso.simplices[static_cast<size_t>(k)].begin(),
                                       iso.simplices[static_cast<size_t>(k)].end());
                    if (static_cast<int>(seen.size()) != R.space.count(k) ||
                        R.space.count(k) != N.count(k))
                        bij = false;
                }
                if (!bij || !simplicial_map_natural(R.space, N, iso, &witness)) {
                    if (witness.empty()) witness = "realization of representable is not the nerve";
                    ok = false;
                }
            }
            ++checks;
            if (ok && euler_characteristic(R.space) != 1) {
                witness = "realized representable has Euler characteristic != 1";
                ok = false;
            }
        }
        report.add("realize-representable", ok, checks, witness);
    }

    // --- boundary realizations: counts, identities, spheres' Euler numbers ---
    {
        long long checks = 0;
        std::string witness;
        bool ok = true;
        for (int r = 1; ok && r <= top; ++r) {
            SubPresheaf bd = boundary(cs, D, r);
            Realization R = realize(bd.presheaf, K);
            for (int k = 0; k <= K; ++k) {
                ++checks;
                if (R.space.count(k) != power(k + 2, r) - power(k, r)) {
                    witness = "boundary realization count wrong at r=" + std::to_string(r) +
                              " k=" + std::to_string(k);
                    ok = false;
                    break;
                }
            }
            ++checks;
            if (ok && !check_simplicial_identities(R.space, &witness)) ok = false;
            ++checks;
            long long chi = (r % 2 == 1) ? 2 : 0;
            if (ok && euler_characteristic(R.space) != chi) {
                witness = "boundary realization has wrong Euler characteristic at r=" +
                          std::to_string(r);
                ok = false;
            }
            // monomorphisms realize to dimensionwise injections
            if (ok) {
                Realization ambient = realize(bd.ambient, K);
                SimplicialMap inc = realize_map(R, ambient, bd.inclusion);
                ++checks;
                if (!simplicial_map_injective(inc) ||
                    !simplicial_map_natural(R.space, ambient.space, inc, &witness)) {
                    if (witness.empty()) witness = "realized inclusion not injective";
                    ok = false;
                }
            }
        }
        report.add("realize-boundary", ok, checks, witness);
    }

    return report;
}

} // namespace cubecat
