#pragma once

#include <string>
#include <vector>

#include "cubecat/simplicial.hpp"

namespace cubecat {

using IntMatrix = std::vector<std::vector<long long>>;

// Normalized integral chain complex of a truncated simplicial set: one free
// module per dimension on the non-degenerate simplices, with boundary maps
// that drop degenerate faces.
struct ChainComplex {
    std::vector<int> ranks;          // ranks[k], k = 0..top
    std::vector<IntMatrix> boundary; // boundary[k]: ranks[k-1] x ranks[k]; boundary[0] empty
};

// Builds the complex in dimensions 0..top; requires top <= S.top.
ChainComplex normalized_chains(const SimplicialSet& S, int top);
bool check_chain_complex(const ChainComplex& C, std::string* witness = nullptr);

// Smith normal form with a transformation certificate: U * M * V is the
// diagonal of the invariants (padded by zeros), d1 | d2 | ..., all positive.
struct SmithResult {
    std::vector<long long> invariants;
    IntMatrix U, V;
};
SmithResult smith_normal_form(const IntMatrix& M);
// Replays the certificate: U * M * V == diag(invariants) and both
// transformations have determinant +-1.
bool check_smith_certificate(const IntMatrix& M, const SmithResult& result);

struct HomologyGroup {
    int dim = 0;
    long long betti = 0;
    std::vector<long long> torsion; // coefficients > 1, divisibility-ordered

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Integral homology of the normalized chains in dimensions 0..top; every
// Smith form used is certificate-checked. Requires top < S.top so that the
// incoming boundary at the top dimension is available.
std::vector<HomologyGroup> homology(const SimplicialSet& S, int top);

} // namespace cubecat
