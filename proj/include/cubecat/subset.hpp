#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubecat {

// An element of the Boolean lattice 2^deg. Doubles as the distinguished
// injection |bits| -> deg whose image lists the members in increasing order;
// all injections of the shipped sites are determined by their image.
struct Subset {
    int deg = 0;
    uint32_t bits = 0;

    Subset() = default;
    Subset(int degree, uint32_t mask) : deg(degree), bits(mask) {
        if (degree < 0 || degree > 31) throw std::invalid_argument("subset degree out of range");
        assert((mask & ~low_mask(degree)) == 0);
    }

    static uint32_t low_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }
    static Subset empty(int degree) { return Subset(degree, 0); }
    static Subset full(int degree) { return Subset(degree, low_mask(degree)); }

    int size() const { return std::popcount(bits); }
    bool is_full() const { return bits == low_mask(deg); }
    bool is_empty() const { return bits == 0; }
    bool contains(int i) const { return (bits >> i) & 1u; }

    std::vector<int> positions() const {
        std::vector<int> out;
        for (int i = 0; i < deg; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    static Subset from_positions(int degree, const std::vector<int>& pos) {
        uint32_t m = 0;
        for (int p : pos) {
            if (p < 0 || p >= degree) throw std::invalid_argument("subset position out of range");
            m |= 1u << p;
        }
        return Subset(degree, m);
    }

    friend bool operator==(const Subset&, const Subset&) = default;
};

inline void check_same_degree(const Subset& a, const Subset& b) {
    if (a.deg != b.deg) throw std::invalid_argument("subset degree mismatch");
}

inline Subset meet(const Subset& a, const Subset& b) {
    check_same_degree(a, b);
    return Subset(a.deg, a.bits & b.bits);
}

inline Subset join(const Subset& a, const Subset& b) {
    check_same_degree(a, b);
    return Subset(a.deg, a.bits | b.bits);
}

inline Subset neg(const Subset& a) { return Subset(a.deg, ~a.bits & Subset::low_mask(a.deg)); }

inline bool leq(const Subset& a, const Subset& b) {
    check_same_degree(a, b);
    return (a.bits & b.bits) == a.bits;
}

// Views s (a subset of gamma's ambient degree, required to lie below gamma)
// as a subset of {0,...,|gamma|-1} by renumbering gamma's members in order:
// the pullback of s along the injection gamma.
inline Subset compress(const Subset& gamma, const Subset& s) {
    check_same_degree(gamma, s);
    assert(leq(s, gamma));
    uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < gamma.deg; ++i)
        if (gamma.contains(i)) {
            if (s.contains(i)) out |= 1u << j;
            ++j;
        }
    return Subset(gamma.size(), out);
}

// Pushes s (a subset of {0,...,|gamma|-1}) forward along the injection gamma
// into gamma's ambient degree.
inline Subset expand(const Subset& gamma, const Subset& s) {
    if (s.deg != gamma.size()) throw std::invalid_argument("expand: degree mismatch");
    uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < gamma.deg; ++i)
        if (gamma.contains(i)) {
            if (s.contains(j)) out |= 1u << i;
            ++j;
        }
    return Subset(gamma.deg, out);
}

inline std::string to_string(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (int p : s.positions()) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    out += "}/";
    out += std::to_string(s.deg);
    return out;
}

} // namespace cubecat
