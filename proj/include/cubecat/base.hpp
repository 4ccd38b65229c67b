#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubecat/subset.hpp"

namespace cubecat {

enum class SiteKind { Plain, Connections, Crossed };

// A morphism of the base site: a monotone map (strictly monotone for the
// plain site) together with a twist, an element of the crossed group at the
// source arity. The twist acts first: the underlying function is
// i -> map[twist(i)]. Sites without a crossed group keep twist = 0.
struct BaseMorphism {
    int src = 0;
    int dst = 0;
    std::vector<uint8_t> map;
    uint16_t twist = 0;

    friend bool operator==(const BaseMorphism&, const BaseMorphism&) = default;
};

// Finite crossed-group data loaded from a table: per-arity multiplication
// tables plus the action on monotone maps and the restriction along them,
// all as index tables. Element 0 must be the identity of every arity group.
struct CrossedTable {
    int max_degree = 0;
    // mult[m][a][b] = index of the product a*b in G(m)
    std::vector<std::vector<std::vector<uint16_t>>> mult;
    // action[m][n][y][f] = index of y.f among monotone maps m -> n, y in G(n)
    std::vector<std::vector<std::vector<std::vector<uint16_t>>>> action;
    // restriction[m][n][f][y] = index of f^*y in G(m), y in G(n)
    std::vector<std::vector<std::vector<std::vector<uint16_t>>>> restriction;
};

struct SiteConfig {
    SiteKind kind = SiteKind::Plain;
    int max_degree = 3;
    std::string crossed_table_path; // empty for the built-in Sigma group
};

// The concrete thin-powered base category: objects are natural numbers,
// distinguished injections are strictly monotone maps with trivial twist
// (identified with Subsets), and the degeneracy class consists of the
// morphisms with full image.
class Site {
public:
    static Site plain();
    static Site connections();
    static Site sigma();                      // crossed Sigma over monotone maps
    static Site crossed(CrossedTable table);  // user table, validated by verify suite

    SiteKind kind() const { return kind_; }
    bool has_twists() const { return kind_ == SiteKind::Crossed; }
    bool is_builtin_sigma() const { return kind_ == SiteKind::Crossed && !table_; }
    // Monoidal structure (degreewise concatenation) is available exactly for
    // the shipped sites; a generic crossed table carries no block-sum data.
    bool is_monoidal() const { return kind_ != SiteKind::Crossed || !table_; }
    const CrossedTable* table() const { return table_.get(); }
    std::string selector() const;

    // crossed group data
    int group_order(int m) const;
    uint16_t group_mult(int m, uint16_t a, uint16_t b) const;
    uint16_t group_inverse(int m, uint16_t a) const;
    // one-line form of a Sigma twist (valid for twistless sites and Sigma)
    std::vector<uint8_t> twist_perm(int m, uint16_t a) const;
    static uint16_t perm_rank(const std::vector<uint8_t>& p);
    // block sum of twists under the monoidal structure m1 + m2
    uint16_t twist_block_sum(int m1, uint16_t a, int m2, uint16_t b) const;

    // enumeration of monotone maps, shared across sites
    static const std::vector<std::vector<uint8_t>>& weak_maps(int m, int n);
    static const std::vector<std::vector<uint8_t>>& strict_maps(int m, int n);
    const std::vector<std::vector<uint8_t>>& base_maps(int m, int n) const;
    static int weak_map_index(const std::vector<uint8_t>& f, int m, int n);

    // crossed structure: the action y.f of y in G(n) on f: m -> n, and the
    // restriction f^*y in G(m)
    std::vector<uint8_t> act(uint16_t y, const std::vector<uint8_t>& f, int n) const;
    uint16_t restrict_twist(const std::vector<uint8_t>& f, int n, uint16_t y) const;

    // morphism algebra
    BaseMorphism identity(int n) const;
    BaseMorphism injection(const Subset& delta) const; // |delta| -> delta.deg
    bool valid(const BaseMorphism& f) const;
    bool is_distinguished(const BaseMorphism& f) const;
    bool is_degeneracy(const BaseMorphism& f) const; // full image, any twist
    std::vector<int> underlying(const BaseMorphism& f) const;

    BaseMorphism compose(const BaseMorphism& outer, const BaseMorphism& inner) const;

    Subset pushforward(const BaseMorphism& f, const Subset& s) const;

    // Pullback of the distinguished injection delta (a subset of f.dst)
    // along f: returns f^*delta together with the restricted morphism
    // |f^*delta| -> |delta| making the square commute.
    struct Pullback {
        Subset sub;
        BaseMorphism restricted;
    };
    Pullback pullback(const BaseMorphism& f, const Subset& delta) const;

    // f = injection(image) . surj, with the twist carried by surj
    struct Factorization {
        BaseMorphism surj;
        Subset image;
    };
    Factorization factorize(const BaseMorphism& f) const;

    Subset max_saturated(const BaseMorphism& f, const Subset& delta) const;

    std::vector<BaseMorphism> homs(int m, int n) const;
    long long hom_count(int m, int n) const;

private:
    Site(SiteKind kind, std::shared_ptr<const CrossedTable> table)
        : kind_(kind), table_(std::move(table)) {}

    SiteKind kind_;
    std::shared_ptr<const CrossedTable> table_;
};

// Builds the Sigma crossed-group table up to the given degree, in the exact
// format the crossed:<path> loader consumes. Used to exercise the table code
// path against the built-in block-move implementation.
CrossedTable build_sigma_table(int max_degree);

} // namespace cubecat
