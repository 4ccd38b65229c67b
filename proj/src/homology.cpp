#include "cubecat/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cubecat {

namespace {

int rows_of(const IntMatrix& M) { return static_cast<int>(M.size()); }
int cols_of(const IntMatrix& M) { return M.empty() ? 0 : static_cast<int>(M[0].size()); }

void require_rectangular(const IntMatrix& M) {
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != cols_of(M))
            throw std::invalid_argument("matrix is not rectangular");
}

IntMatrix identity_matrix(int n) {
    IntMatrix I(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return I;
}

// |det| == 1 test by fraction-free (Bareiss) elimination in 128-bit
bool unimodular(const IntMatrix& M) {
    int n = rows_of(M);
    if (cols_of(M) != n) return false;
    if (n == 0) return true;
    std::vector<std::vector<__int128>> a(static_cast<size_t>(n),
                                         std::vector<__int128>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            M[static_cast<size_t>(i)][static_cast<size_t>(j)];
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return false;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                         a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                    prev;
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    __int128 det = sign * a[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
    return det == 1 || det == -1;
}

} // namespace

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

SmithResult smith_normal_form(const IntMatrix& M) {
    require_rectangular(M);
    const int rows = rows_of(M), cols = cols_of(M);
    IntMatrix A = M;
    SmithResult out;
    out.U = identity_matrix(rows);
    out.V = identity_matrix(cols);

    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        std::swap(A[static_cast<size_t>(a)], A[static_cast<size_t>(b)]);
        std::swap(out.U[static_cast<size_t>(a)], out.U[static_cast<size_t>(b)]);
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (auto& row : A) std::swap(row[static_cast<size_t>(a)], row[static_cast<size_t>(b)]);
        for (auto& row : out.V) std::swap(row[static_cast<size_t>(a)], row[static_cast<size_t>(b)]);
    };
    // row[dst] += q * row[src], likewise U
    auto row_add = [&](int dst, int src, long long q) {
        for (int j = 0; j < cols; ++j)
            A[static_cast<size_t>(dst)][static_cast<size_t>(j)] +=
                q * A[static_cast<size_t>(src)][static_cast<size_t>(j)];
        for (int j = 0; j < rows; ++j)
            out.U[static_cast<size_t>(dst)][static_cast<size_t>(j)] +=
                q * out.U[static_cast<size_t>(src)][static_cast<size_t>(j)];
    };
    // col[dst] += q * col[src], likewise V
    auto col_add = [&](int dst, int src, long long q) {
        for (int i = 0; i < rows; ++i)
            A[static_cast<size_t>(i)][static_cast<size_t>(dst)] +=
                q * A[static_cast<size_t>(i)][static_cast<size_t>(src)];
        for (int i = 0; i < cols; ++i)
            out.V[static_cast<size_t>(i)][static_cast<size_t>(dst)] +=
                q * out.V[static_cast<size_t>(i)][static_cast<size_t>(src)];
    };

    int t = 0;
    while (true) {
        // smallest-magnitude pivot keeps intermediate entries tame
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                long long v = std::llabs(A[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < rows; ++i)
                if (A[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
                    long long q = A[static_cast<size_t>(i)][static_cast<size_t>(t)] /
                                  A[static_cast<size_t>(t)][static_cast<size_t>(t)];
                    row_add(i, t, -q);
                    if (A[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
                        row_swap(t, i); // strictly smaller remainder becomes the pivot
                        settled = false;
                    }
                }
            for (int j = t + 1; j < cols; ++j)
                if (A[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
                    long long q = A[static_cast<size_t>(t)][static_cast<size_t>(j)] /
                                  A[static_cast<size_t>(t)][static_cast<size_t>(t)];
                    col_add(j, t, -q);
                    if (A[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
                        col_swap(t, j);
                        settled = false;
                    }
                }
            if (settled) {
                // enforce the divisibility chain before moving on
                for (int i = t + 1; i < rows && settled; ++i)
                    for (int j = t + 1; j < cols; ++j)
                        if (A[static_cast<size_t>(i)][static_cast<size_t>(j)] %
                                A[static_cast<size_t>(t)][static_cast<size_t>(t)] !=
                            0) {
                            row_add(t, i, 1);
                            settled = false;
                            break;
                        }
            }
        }
        if (A[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) {
            for (int j = 0; j < cols; ++j) A[static_cast<size_t>(t)][static_cast<size_t>(j)] *= -1;
            for (int j = 0; j < rows; ++j) out.U[static_cast<size_t>(t)][static_cast<size_t>(j)] *= -1;
        }
        ++t;
    }
    for (int i = 0; i < t; ++i)
        out.invariants.push_back(A[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    return out;
}

bool check_smith_certificate(const IntMatrix& M, const SmithResult& result) {
    require_rectangular(M);
    const int rows = rows_of(M), cols = cols_of(M);
    if (rows_of(result.U) != rows || cols_of(result.U) != rows) return false;
    if (rows_of(result.V) != cols || cols_of(result.V) != cols) return false;
    if (static_cast<int>(result.invariants.size()) > std::min(rows, cols)) return false;
    for (size_t i = 0; i < result.invariants.size(); ++i) {
        if (result.invariants[i] <= 0) return false;
        if (i > 0 && result.invariants[i] % result.invariants[i - 1] != 0) return false;
    }
    // replay U * M * V in 128-bit
    std::vector<std::vector<__int128>> UM(static_cast<size_t>(rows),
                                          std::vector<__int128>(static_cast<size_t>(cols), 0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < rows; ++k) {
            if (result.U[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
            __int128 u = result.U[static_cast<size_t>(i)][static_cast<size_t>(k)];
            for (int j = 0; j < cols; ++j)
                UM[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    u * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            __int128 v = 0;
            for (int k = 0; k < cols; ++k)
                v += UM[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     static_cast<__int128>(result.V[static_cast<size_t>(k)][static_cast<size_t>(j)]);
            __int128 expect = 0;
            if (i == j && i < static_cast<int>(result.invariants.size()))
                expect = result.invariants[static_cast<size_t>(i)];
            if (v != expect) return false;
        }
    return unimodular(result.U) && unimodular(result.V);
}

// ---------------------------------------------------------------------------
// Normalized chains and homology
// ---------------------------------------------------------------------------

ChainComplex normalized_chains(const SimplicialSet& S, int top) {
    if (top < 0 || top > S.top) throw std::invalid_argument("dimension exceeds truncation");
    auto degen = degenerate_table(S);

    ChainComplex C;
    C.ranks.resize(static_cast<size_t>(top) + 1);
    C.boundary.resize(static_cast<size_t>(top) + 1);
    std::vector<std::vector<int>> index(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        index[static_cast<size_t>(k)].assign(static_cast<size_t>(S.count(k)), -1);
        int next = 0;
        for (int s = 0; s < S.count(k); ++s)
            if (!degen[static_cast<size_t>(k)][static_cast<size_t>(s)])
                index[static_cast<size_t>(k)][static_cast<size_t>(s)] = next++;
        C.ranks[static_cast<size_t>(k)] = next;
    }
    for (int k = 1; k <= top; ++k) {
        IntMatrix& B = C.boundary[static_cast<size_t>(k)];
        B.assign(static_cast<size_t>(C.ranks[static_cast<size_t>(k) - 1]),
                 std::vector<long long>(static_cast<size_t>(C.ranks[static_cast<size_t>(k)]), 0));
        for (int s = 0; s < S.count(k); ++s) {
            int col = index[static_cast<size_t>(k)][static_cast<size_t>(s)];
            if (col < 0) continue;
            for (int i = 0; i <= k; ++i) {
                int f = S.face(k, i, s);
                int row = index[static_cast<size_t>(k) - 1][static_cast<size_t>(f)];
                if (row < 0) continue; // degenerate face vanishes in the quotient
                B[static_cast<size_t>(row)][static_cast<size_t>(col)] += (i % 2 == 0) ? 1 : -1;
            }
        }
    }
    return C;
}

bool check_chain_complex(const ChainComplex& C, std::string* witness) {
    int top = static_cast<int>(C.ranks.size()) - 1;
    for (int k = 1; k <= top; ++k) {
        const IntMatrix& B = C.boundary[static_cast<size_t>(k)];
        if (rows_of(B) != C.ranks[static_cast<size_t>(k) - 1] ||
            (C.ranks[static_cast<size_t>(k) - 1] > 0 && cols_of(B) != C.ranks[static_cast<size_t>(k)])) {
            if (witness) *witness = "boundary matrix shape mismatch at k=" + std::to_string(k);
            return false;
        }
    }
    for (int k = 2; k <= top; ++k) {
        const IntMatrix& B1 = C.boundary[static_cast<size_t>(k) - 1];
        const IntMatrix& B2 = C.boundary[static_cast<size_t>(k)];
        for (int i = 0; i < rows_of(B1); ++i)
            for (int j = 0; j < cols_of(B2); ++j) {
                long long v = 0;
                for (int m = 0; m < cols_of(B1); ++m)
                    v += B1[static_cast<size_t>(i)][static_cast<size_t>(m)] *
                         B2[static_cast<size_t>(m)][static_cast<size_t>(j)];
                if (v != 0) {
                    if (witness)
                        *witness = "boundary of boundary nonzero at k=" + std::to_string(k);
                    return false;
                }
            }
    }
    return true;
}

std::vector<HomologyGroup> homology(const SimplicialSet& S, int top) {
    if (top < 0) throw std::invalid_argument("homology needs top >= 0");
    if (top >= S.top) throw std::invalid_argument("dimension exceeds truncation");
    ChainComplex C = normalized_chains(S, top + 1);
    std::string witness;
    if (!check_chain_complex(C, &witness)) throw std::logic_error("chain complex broken: " + witness);

    std::vector<SmithResult> smith(static_cast<size_t>(top) + 2);
    for (int k = 1; k <= top + 1; ++k) {
        smith[static_cast<size_t>(k)] = smith_normal_form(C.boundary[static_cast<size_t>(k)]);
        if (!check_smith_certificate(C.boundary[static_cast<size_t>(k)], smith[static_cast<size_t>(k)]))
            throw std::logic_error("Smith certificate rejected at k=" + std::to_string(k));
    }

    std::vector<HomologyGroup> out;
    for (int k = 0; k <= top; ++k) {
        long long rank_in = (k == 0) ? 0
                                     : static_cast<long long>(
                                           smith[static_cast<size_t>(k)].invariants.size());
        const auto& next = smith[static_cast<size_t>(k) + 1].invariants;
        HomologyGroup g;
        g.dim = k;
        g.betti = C.ranks[static_cast<size_t>(k)] - rank_in - static_cast<long long>(next.size());
        for (long long d : next)
            if (d > 1) g.torsion.push_back(d);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace cubecat
