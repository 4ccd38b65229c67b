#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cubecat/span.hpp"

namespace cubecat {

// A morphism of the cubicalization: a span part plus the marker subset xi,
// disjoint from the image of the forward leg. Uniqueness of the (gamma, f)
// representation makes equality componentwise.
struct CubeMorphism {
    Span span;
    Subset xi; // subset of dst

    int src() const { return span.src; }
    int dst() const { return span.dst; }
    friend bool operator==(const CubeMorphism&, const CubeMorphism&) = default;
};

// The unique four-part factorization: a dagger, a degeneracy (twist included),
// a distinguished injection, and the marker.
struct NormalForm {
    int src = 0;
    int dst = 0;
    Subset gamma;       // subset of src
    BaseMorphism sigma; // |gamma| -> |delta|, full image, carries the twist
    Subset delta;       // subset of dst
    Subset xi;          // subset of dst, disjoint from delta

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class CubeClass { Iso, Face, Collapse, Mixed };

CubeMorphism cube_identity(const Site& site, int n);
bool cube_valid(const Site& site, const CubeMorphism& m);

// A face delta^xi: the injection delta with marker xi (disjoint from delta).
CubeMorphism face(const Site& site, const Subset& delta, const Subset& xi);
// The dagger of an injection, viewed in the cubicalization.
CubeMorphism cube_dagger(const Site& site, const Subset& gamma);
// A base morphism viewed in the cubicalization (empty marker).
CubeMorphism cube_of_base(const BaseMorphism& f);

CubeMorphism cube_compose(const Site& site, const CubeMorphism& outer, const CubeMorphism& inner);

Subset cube_pushforward(const Site& site, const CubeMorphism& m, const Subset& eta);

NormalForm normal_form(const Site& site, const CubeMorphism& m);
CubeMorphism reassemble(const Site& site, const NormalForm& nf);

CubeClass classify(const Site& site, const CubeMorphism& m);

// The intersection square of two faces with a common target: the two legs
// and the composite face, or nothing when the faces do not intersect.
struct FaceMeet {
    CubeMorphism into_first;  // leg into the domain of the first face
    CubeMorphism into_second; // leg into the domain of the second face
    CubeMorphism composite;   // the intersection as a face of the target
};
std::optional<FaceMeet> face_meet(const Site& site, const CubeMorphism& a, const CubeMorphism& b);

// Degreewise concatenation on all components (monoidal sites only).
CubeMorphism tensor_mor(const Site& site, const CubeMorphism& a, const CubeMorphism& b);

// The enlargement c(m) = m tensor id_1, and the interval structure maps
// n => n+1 => n: the two end inclusions and the projection dagger.
CubeMorphism enlarge(const Site& site, const CubeMorphism& m);
CubeMorphism iota0(const Site& site, int n);
CubeMorphism iota1(const Site& site, int n);
CubeMorphism iota_dagger(const Site& site, int n);

// Hom-set cardinality predicted by counting normal-form tuples.
long long cube_hom_count_formula(const Site& site, int m, int n);

// Shared handle for enumerated cubicalization hom-sets with index lookup.
// Caches per (src, dst) pair are built lazily; composition stays on demand.
class CubeSite {
public:
    explicit CubeSite(Site site) : site_(std::move(site)) {}

    const Site& base() const { return site_; }

    const std::vector<CubeMorphism>& homs(int m, int n) const;
    int index_of(const CubeMorphism& m) const; // throws if unknown
    long long hom_count(int m, int n) const { return static_cast<long long>(homs(m, n).size()); }

    // Generating morphisms with target degree n: codimension-1 faces with
    // both markers, elementary daggers, elementary degeneracies, and (for
    // crossed sites) adjacent-transposition twists. Every morphism of the
    // cubicalization is a composite of these.
    std::vector<CubeMorphism> generators_into(int n) const;

private:
    struct Key {
        uint32_t gamma;
        uint32_t xi;
        uint16_t twist;
        int src;
        std::vector<uint8_t> map;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const;
    };
    static Key key_of(const CubeMorphism& m);

    Site site_;
    mutable std::map<std::pair<int, int>, std::vector<CubeMorphism>> homs_;
    mutable std::map<std::pair<int, int>, std::unordered_map<Key, int, KeyHash>> index_;
};

} // namespace cubecat
