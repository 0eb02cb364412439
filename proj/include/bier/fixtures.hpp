#pragma once

#include "bier/complex.hpp"

namespace bier::fixtures {

// The five complexes on [3], indexed by the vertex count of their Bier sphere.
SimplicialComplex gamma3();  // boundary of a triangle
SimplicialComplex gamma4();  // path 2-1-3
SimplicialComplex g4();      // edge {1,2} with ghost vertex 3
SimplicialComplex gamma5();  // edge {1,2} and point 3
SimplicialComplex gamma6();  // three points

/// The weak-suspension-but-not-suspension family, defined by its minimal
/// non-faces [m-2], {2..m-1}, {2,m}, ..., {m-1,m}. Requires m >= 5.
SimplicialComplex km(int m);
/// k-skeleton of Δ_[m].
SimplicialComplex skeleton(int m, int k);
/// Δ_[k] with ghost vertices k+1..m.
SimplicialComplex simplex(int m, int k);
/// n-cycle Z_n on [n].
SimplicialComplex cycle(int n);

}  // namespace bier::fixtures
