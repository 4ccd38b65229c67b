#pragma once

#include "cubecat/base.hpp"
#include "cubecat/subset.hpp"

namespace cubecat {

// A morphism src -> dst of the span category over the base site: the
// distinguished injection gamma reversed (the dagger leg), followed by the
// base morphism f from |gamma|. The representation (gamma, f) is unique, so
// equality is componentwise.
struct Span {
    int src = 0;
    int dst = 0;
    Subset gamma;    // subset of src
    BaseMorphism f;  // |gamma| -> dst

    friend bool operator==(const Span&, const Span&) = default;
};

Span span_identity(const Site& site, int n);

// gamma reversed: a morphism gamma.deg -> |gamma| with identity forward leg
Span dagger(const Site& site, const Subset& gamma);

// a base morphism viewed as a span with full dagger leg
Span span_of_base(const BaseMorphism& f);

bool span_valid(const Site& site, const Span& s);

// Composition by pulling the outer dagger leg back along the inner forward
// leg; associativity follows from the strict uniqueness of these pullbacks.
Span span_compose(const Site& site, const Span& outer, const Span& inner);

// The action on the subobject lattices: f_* gamma^* (eta).
Subset span_pushforward(const Site& site, const Span& s, const Subset& eta);

// Image of the span as a subset of dst (the image of its forward leg).
Subset span_image(const Span& s);

} // namespace cubecat
