#pragma once

#include "cubecat/cube.hpp"
#include "cubecat/report.hpp"

namespace cubecat {

// Exhaustive sweeps over all morphisms up to degree D. Failures are data:
// each report line records pass/fail plus the first counterexample.

// The thin-powered structure: distinguished injections are monomorphisms,
// closed under composition, and give strictly unique factorizations;
// pullbacks along them exist and are greatest elements; pushforward and
// pullback form a Galois connection; stability, Booleanness, coherence and
// the maximum-saturated-subobject construction; the crossed-group laws on
// crossed sites.
Report verify_site_axioms(const Site& site, int D);

// The span calculus: dagger sections, the interchange identities on
// pullback squares of injections, the degeneracy/dagger pushout square via
// the max-saturated construction, the monomorphism criterion, associativity
// and the functoriality of the poset representation.
Report verify_span_identities(const Site& site, int D);

// The cubicalization: hom counts against the normal-form closed form,
// normal-form bijectivity, identity and associativity laws, the crossed
// module conditions for (lattice, complement-marker) on the span category,
// the marker-projection calculus, the split-epi/mono factorization, and
// naturality of the interval structure maps.
Report verify_cube_axioms(const Site& site, int D);

} // namespace cubecat
