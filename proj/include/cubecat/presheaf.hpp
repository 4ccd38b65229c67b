#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cubecat/cube.hpp"
#include "cubecat/report.hpp"

namespace cubecat {

// A degree-truncated presheaf on the cubicalization: named cells in degrees
// 0..D and a total action table for every hom-set between degrees <= D.
// Construction is two-phase: add all cells, then fill actions, then seal().
class Presheaf {
public:
    Presheaf(std::shared_ptr<const CubeSite> site, int max_degree);

    const CubeSite& site() const { return *site_; }
    const std::shared_ptr<const CubeSite>& site_handle() const { return site_; }
    int max_degree() const { return degree_; }

    int cell_count(int n) const;
    long long total_cells() const;
    const std::string& cell_name(int n, int i) const;
    int cell_index(int n, const std::string& name) const; // -1 when absent

    // X(u): X(n) -> X(m) for u: m -> n with m, n <= D.
    int act(const CubeMorphism& u, int cell) const;
    int act_indexed(int m, int n, int mor, int cell) const;
    // Action of one morphism on every cell of X(n): a row of the table.
    const std::vector<int>& action_row(int m, int n, int mor) const;

    // Builder interface. Cells must all be added before any action is set.
    int add_cell(int n, std::string name);
    void set_action(int m, int n, int mor, int cell, int value);
    void seal(); // validates that every action entry was filled
    bool sealed() const { return sealed_; }

private:
    std::vector<std::vector<int>>& table(int m, int n);

    std::shared_ptr<const CubeSite> site_;
    int degree_ = 0;
    bool sealed_ = false;
    bool building_actions_ = false;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::map<std::string, int>> index_;
    // action_[{m,n}][mor][cell] with mor indexed as in site().homs(m, n)
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> action_;
};

// A degreewise map of presheaves: cells[n][x] is the image of cell x at
// degree n. Naturality is a property, checked separately.
struct PresheafMap {
    std::vector<std::vector<int>> cells;
    friend bool operator==(const PresheafMap&, const PresheafMap&) = default;
};

PresheafMap identity_map(const Presheaf& X);
PresheafMap compose_map(const PresheafMap& g, const PresheafMap& f); // g after f
bool natural(const Presheaf& X, const Presheaf& Y, const PresheafMap& f,
             std::string* witness = nullptr);
bool injective_map(const PresheafMap& f, const Presheaf& Y);
bool bijective_map(const PresheafMap& f, const Presheaf& Y);

// The representable presheaf of r truncated at degree D; the cells at degree
// n are exactly site.homs(n, r) in enumeration order, named u%04d.
Presheaf representable(std::shared_ptr<const CubeSite> site, int D, int r);
// The Yoneda action of a morphism u: a -> b, as a map rep(a) -> rep(b).
PresheafMap yoneda_map(const std::shared_ptr<const CubeSite>& site, int D,
                       const CubeMorphism& u);

// A subpresheaf cut out of an ambient presheaf: its own Presheaf value, the
// inclusion, and per-degree membership (ambient cell -> sub cell or -1).
struct SubPresheaf {
    Presheaf ambient;
    Presheaf presheaf;
    PresheafMap inclusion;
    std::vector<std::vector<int>> member;
};

// Boundary of the representable r: the cells of rep(r) whose normal form has
// a non-full distinguished injection (the EZ cell filter).
SubPresheaf boundary(std::shared_ptr<const CubeSite> site, int D, int r);

// Independent construction of the boundary as the coequalizer of the
// codegree-4 / codegree-2 face diagram; kept as a cross-check of boundary().
struct BoundaryOracle {
    Presheaf presheaf;
    PresheafMap into_rep; // cellwise injection into representable(r, D)
};
BoundaryOracle boundary_coequalizer(std::shared_ptr<const CubeSite> site, int D, int r);

// Least degree b such that the cell factors through an object of degree b,
// together with the witnessing split epimorphism and core cell.
struct Decomposition {
    CubeMorphism sigma; // n -> base, full image, empty marker
    int base = 0;
    int core = 0;
};
Decomposition nondegenerate_decompose(const Presheaf& X, int n, int cell);
bool is_nondegenerate(const Presheaf& X, int n, int cell);
int base_degree(const Presheaf& X, int n, int cell);

// Subpresheaf of cells of base degree <= k (empty presheaf for k < 0).
SubPresheaf skeleton(const Presheaf& X, int k);

enum class ColimitKind { Coproduct, Pushout, Coequalizer };

// A colimit presheaf together with its cocone legs, one per diagram object.
// Coproduct: any number of objects, no maps. Pushout: objects {A, X, Y} with
// maps {f: A -> X, g: A -> Y}; legs are {A, X, Y} -> P. Coequalizer: objects
// {A, X} with maps {f, g: A -> X}; legs are {A, X} -> Q.
struct Colimit {
    Presheaf presheaf;
    std::vector<PresheafMap> legs;
};
Colimit colimit(ColimitKind kind, const std::vector<const Presheaf*>& objects,
                const std::vector<PresheafMap>& maps);

Colimit coproduct(const std::vector<const Presheaf*>& parts);
Colimit pushout(const Presheaf& A, const Presheaf& X, const Presheaf& Y,
                const PresheafMap& f, const PresheafMap& g);
Colimit coequalizer(const Presheaf& A, const Presheaf& X,
                    const PresheafMap& f, const PresheafMap& g);
// Quotient of X by generating cell identifications {degree, cell, cell},
// closed under the morphism action; class representatives are the least
// members, so output ordering and naming are deterministic.
Colimit quotient(const Presheaf& X, const std::vector<std::array<int, 3>>& relations);

// The convolution tensor X (x) Y. An element over p is a triple
// (x, y, u: p -> p1+p2) modulo the coend relations; every class has a unique
// least canonical representative (gamma <= p, tau in G(|gamma|), j1, x, y)
// standing for the triple (x, y, tau^ gamma-dagger). Hom-sets up to degree
// 2D are enumerated internally.
struct TensorCell {
    uint32_t gamma = 0;
    int tau = 0;
    int j1 = 0;
    int x = 0;
    int y = 0;
    friend auto operator<=>(const TensorCell&, const TensorCell&) = default;
};

class Tensor {
public:
    Tensor(const Presheaf& X, const Presheaf& Y);

    const Presheaf& presheaf() const { return P_; }
    const Presheaf& left() const { return X_; }
    const Presheaf& right() const { return Y_; }
    int max_degree() const { return P_.max_degree(); }

    // Cell of the class of a canonical tuple at degree p.
    int cell_of(int p, const TensorCell& t) const;
    const TensorCell& representative(int p, int cell) const;
    // Cell of the class of (x in X(p1), y in Y(p2), u: p -> p1+p2).
    int reduce(int p1, int x, int p2, int y, const CubeMorphism& u) const;

private:
    struct Triple {
        uint32_t gamma = 0;
        int tau = 0;
        int j1 = 0;
        long long base = 0; // node id of (gamma, tau, j1, 0, 0)
        CubeMorphism tail;  // tau^ gamma-dagger : p -> |gamma|
    };
    struct Split {
        int triple = 0; // target triple index at the source degree
        CubeMorphism e1; // g1 -> p1
        CubeMorphism e2; // g2 -> p2
    };

    long long node_id(int p, int triple, int x, int y) const;
    int triple_index(int p, uint32_t gamma, int tau, int j1) const;
    Split split(int p1, int p2, const CubeMorphism& u) const;
    int class_of_node(int p, long long node) const;

    std::shared_ptr<const CubeSite> site_;
    Presheaf X_, Y_, P_;
    std::vector<std::vector<Triple>> triples_;
    std::vector<std::map<std::tuple<uint32_t, int, int>, int>> triple_index_;
    std::vector<std::vector<int>> node_class_; // node id -> cell, per degree
    std::vector<std::vector<TensorCell>> reps_;
};

// Functorial action: the map X (x) Y -> X' (x) Y' induced by f: X -> X' and
// g: Y -> Y' on canonical representatives.
PresheafMap tensor_map(const Tensor& from, const Tensor& to,
                       const PresheafMap& f, const PresheafMap& g);

// Comparison into a representable: when every cell of each factor names a
// morphism into a and b respectively, the class of (x, y, tail) maps to
// (mx (x) my) . tail in homs(p, a+b) = rep(a+b)(p) cell order.
using CellToMorphism = std::function<CubeMorphism(int degree, int cell)>;
PresheafMap tensor_into_representable(const Tensor& t, const CellToMorphism& fx,
                                      const CellToMorphism& fy);
CellToMorphism representable_cells(const std::shared_ptr<const CubeSite>& site, int r);
CellToMorphism subpresheaf_cells(const std::shared_ptr<const CubeSite>& site,
                                 const SubPresheaf& sub, int r);

// Unit comparisons: X (x) rep(0) -> X and rep(0) (x) X -> X.
PresheafMap tensor_unit_right(const Tensor& t);
PresheafMap tensor_unit_left(const Tensor& t);

// The cylinder Cyl X = X (x) rep(1) with its end inclusions and the
// projection induced by collapsing the interval.
struct Cylinder {
    Tensor tensor;
    PresheafMap iota0;
    PresheafMap iota1;
    PresheafMap retraction;

    const Presheaf& presheaf() const { return tensor.presheaf(); }
};
Cylinder cylinder(const Presheaf& X);
// h: Cyl X -> Y is a homotopy from f0 to f1 when h . iota^k = f_k cellwise.
bool is_homotopy(const Cylinder& cyl, const PresheafMap& h,
                 const PresheafMap& f0, const PresheafMap& f1);

// Law suite over presheaves built from the given site: action functoriality,
// Yoneda identities, boundary route agreement, skeleton attachment squares,
// decomposition laws, tensor unit/associativity, cylinder retractions.
Report verify_presheaf_laws(const Site& site, int D);

} // namespace cubecat
