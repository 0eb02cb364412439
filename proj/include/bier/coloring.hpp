#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bier/bier_sphere.hpp"
#include "bier/graph.hpp"

namespace bier::coloring {

/// Proper vertex coloring; `color_of[v]` in 0..num_colors-1 for every
/// vertex v of the graph and -1 elsewhere.
struct Coloring {
  std::vector<int> color_of;
  int num_colors = 0;
};

/// Surjective onto 0..num_colors-1 and no edge is monochromatic.
bool is_proper(const Graph& g, const Coloring& c);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number by DSATUR branch and bound. Throws NoVertices on
/// an empty graph. Ties are broken by label, so witnesses are reproducible.
ChromaticResult chromatic_number(const Graph& g);
ChromaticResult chromatic_number(const SimplicialComplex& k);

/// χ of the 1-skeleton, 0 when there are no vertices.
int chi_or_zero(const SimplicialComplex& k);

struct BierBounds {
  int lower = 0;
  int upper = 0;
  Coloring upper_witness;  // i, i' ↦ same color, on Bier(K)
};

/// (max(m-1, χ(K), χ(K^∨)), m).
BierBounds chi_bier_bounds(const SimplicialComplex& k);

/// Vertices adjacent in sk¹ to every other vertex.
VertexSet weak_cone_apexes(const SimplicialComplex& k);
/// Vertices lying in every facet.
VertexSet cone_apexes(const SimplicialComplex& k);

enum class SuspensionKind { kNotWeakSuspension, kWeakSuspensionOnly, kSuspension };
const char* to_string(SuspensionKind kind);

struct SuspensionStructure {
  SuspensionKind kind = SuspensionKind::kNotWeakSuspension;
  /// Every {a,b} with link(a) = V \ {a,b} = link(b) in sk¹, a < b.
  std::vector<std::pair<int, int>> pairs;
  /// The subset of `pairs` along which the complex is an actual suspension.
  std::vector<std::pair<int, int>> suspension_pairs;
};

/// True when K = ∂Δ_{a,b} * R; R is written to `rest` if non-null.
bool is_suspension_over(const SimplicialComplex& k, int a, int b, SimplicialComplex* rest = nullptr);

SuspensionStructure suspension_structure(const SimplicialComplex& k);
SuspensionStructure suspension_structure(const BierSphere& b);

struct MinColorableResult {
  bool min_colorable = false;
  /// Build steps from a seed, e.g. {"gamma6", "cone", "dual"}; the result is
  /// isomorphic to K. Empty when not min-colorable.
  std::vector<std::string> trace;
};

/// Decides whether K is (up to isomorphism) in the closure of
/// {Γ4, G4, Γ6} under cone and Alexander dual. Requires 3 <= m <= 8.
MinColorableResult min_colorable_classifier(const SimplicialComplex& k);

enum class MinChromaticType { kNone, kCube, kCubeTimesHexagon };
const char* to_string(MinChromaticType type);

struct MinChromaticRecognition {
  MinChromaticType type = MinChromaticType::kNone;
  /// Stripped suspension pairs as labels (i, i + m).
  std::vector<std::pair<int, int>> stripped;
  int residue_vertices = 0;
  int residue_dimension = 0;
};

/// Strips suspension pairs {i,i'} until none is left. A residue that is
/// {∅}, two points or a 4-cycle gives the cube type; a 6-cycle gives
/// cube × hexagon.
MinChromaticRecognition recognize_min_chromatic_type(const BierSphere& b);

}  // namespace bier::coloring
