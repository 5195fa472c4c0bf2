#pragma once

#include <vector>

#include "multicross/diagram.hpp"
#include "multicross/orientation.hpp"

namespace multicross {

// Constructors for standard diagram families.

// Connected uniform diagram of odd order 2k+1 with n crossings arranged in a
// cycle: consecutive crossings share one edge (slot 0 to slot m), all other
// slots close up in small adjacent loops. Levels are the identity
// permutation unless given.
MulticrossingDiagram necklace(int k, int n, std::vector<int> levels = {});

// One crossing of odd order m whose 2m ends are joined in adjacent pairs
// (slots 0-1, 2-3, ...): a single-component flower. levels.size() fixes m.
MulticrossingDiagram petal(std::vector<int> levels);

// One order-3 crossing closed by three nested loops (slots 0-5, 1-4, 2-3).
MulticrossingDiagram nested_loops3(std::vector<int> levels = {1, 2, 3});

struct OrientedDiagram {
  MulticrossingDiagram diagram;
  Orientation orientation;  // the link orientation the construction carries
};

// Closure of a braid word on `width` strands; letter +i / -i crosses
// positions i, i+1 with positive / negative sign. Every position must be
// used by some letter. Strands are oriented along the braid.
OrientedDiagram braid_closure(int width, const std::vector<int>& word);

// Standard (2,q) torus diagram: closure of q positive half-twists.
OrientedDiagram torus2(int q);

// Grid (arc) presentation: column c carries markers X at row xs[c] and O at
// row os[c]; rows likewise hold one of each. Vertical segments run X -> O
// and pass over, horizontal segments run O -> X.
OrientedDiagram grid_diagram(const std::vector<int>& xs, const std::vector<int>& os);

}  // namespace multicross
