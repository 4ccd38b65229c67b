#pragma once

#include <string>
#include <vector>

#include "cubecat/presheaf.hpp"
#include "cubecat/report.hpp"

namespace cubecat {

// A simplicial set truncated at dimension K: simplex counts for dimensions
// 0..K and total face/degeneracy index tables between adjacent dimensions.
struct SimplicialSet {
    int top = 0;             // K
    std::vector<int> counts; // counts[k] for k = 0..K
    // faces[k][i][s] = d_i(s) for 1 <= k <= K, 0 <= i <= k (faces[0] empty)
    std::vector<std::vector<std::vector<int>>> faces;
    // degeneracies[k][i][s] = s_i(s) for 0 <= k < K, 0 <= i <= k
    std::vector<std::vector<std::vector<int>>> degeneracies;

    int count(int k) const {
        return (k < 0 || k > top) ? 0 : counts[static_cast<size_t>(k)];
    }
    int face(int k, int i, int s) const {
        return faces[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(s)];
    }
    int degeneracy(int k, int i, int s) const {
        return degeneracies[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(s)];
    }
};

// The d_i d_j, d_i s_j, s_i s_j identities on every enumerated index.
bool check_simplicial_identities(const SimplicialSet& S, std::string* witness = nullptr);

// Nerve of the Boolean lattice 2^n truncated at K: a k-simplex is a weakly
// increasing chain S_0 <= ... <= S_k of subsets of [n], encoded by switch
// positions (the first chain index where each coordinate is present), so the
// count is (k+2)^n and faces/degeneracies act digitwise.
SimplicialSet nerve_boolean(int n, int K);

// Dimensionwise product; the simplex (a, b) has index a * B.count(k) + b.
SimplicialSet product(const SimplicialSet& A, const SimplicialSet& B);

// degenerate[k][s] = 1 when s lies in the image of some degeneracy.
std::vector<std::vector<char>> degenerate_table(const SimplicialSet& S);
std::vector<int> nondegenerate_counts(const SimplicialSet& S);
// Alternating sum of non-degenerate simplex counts across all recorded
// dimensions; stable once the non-degenerate simplices run out.
long long euler_characteristic(const SimplicialSet& S);

// Simplicial realization of a degree-truncated presheaf: dimensionwise the
// quotient of the nodes (r <= D, cell x of X(r), chain in 2^r) by the coend
// relations (m, X(u)x, c) ~ (r, x, u_* c) for generating morphisms u: m -> r,
// with u_* the entrywise marker pushforward. Chains at dimension k are
// encoded base k+2 as in nerve_boolean.
struct Realization {
    SimplicialSet space;
    int max_degree = 0;
    // node numbering per dimension: offsets[k][r] + cell * (k+2)^r + chain
    std::vector<std::vector<long long>> offsets;
    std::vector<std::vector<int>> simplex_of_node;

    long long chain_count(int k, int r) const; // (k+2)^r
    int simplex_of(int k, int r, int cell, long long chain) const;
};
Realization realize(const Presheaf& X, int K);

// The simplicial map induced by a presheaf map on realizations; throws when
// the images are not constant on realization classes.
struct SimplicialMap {
    std::vector<std::vector<int>> simplices; // per dimension
};
SimplicialMap realize_map(const Realization& from, const Realization& to, const PresheafMap& f);
bool simplicial_map_natural(const SimplicialSet& A, const SimplicialSet& B,
                            const SimplicialMap& f, std::string* witness = nullptr);
bool simplicial_map_injective(const SimplicialMap& f);

// Law suite: nerve counts and identities, realization of representables
// against nerves, boundary realization counts, monomorphism preservation,
// Euler characteristics, pushforward functoriality.
Report verify_topology(const Site& site, int D);

} // namespace cubecat
