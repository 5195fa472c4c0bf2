#pragma once

#include <vector>

#include "multicross/diagram.hpp"
#include "multicross/orientation.hpp"

namespace multicross {

// Decomposition of one (2k+1)-crossing into k(2k+1) ordinary 2-crossings.
//
// The tangle lives in a disk whose boundary carries 2(2k+1) ports; port i
// corresponds to slot (anchor_slot + i) mod 2(2k+1) of the original
// crossing. Local strands are numbered 1..2k+1 counterclockwise starting
// from the strand whose "top" end is port 0; strand j runs from port j-1 to
// port j-1+(2k+1) and crosses every other strand exactly once.

struct TangleEnd {
  bool at_port = false;
  int port = -1;  // when at_port
  int node = -1;  // when !at_port
  int slot = -1;
};

struct TangleNode {
  int strand_a = 0, strand_b = 0;  // local strand labels, a < b
  int over_strand = 0;             // the one with the larger original level
  std::array<int, 4> arc_at_slot{};
  std::array<int, 2> strand_at_parity{};  // strand at slots (0,2) and (1,3)
};

struct TangleArc {
  int strand = 0;
  TangleEnd from, to;  // in top-to-bottom travel order along the strand
};

struct DecompositionTangle {
  int k = 0;
  int crossing = -1;   // index in the host diagram
  int anchor_slot = 0;
  FaceColor target = FaceColor::white;

  std::vector<int> port_to_slot;                 // size 2(2k+1)
  std::vector<TangleNode> nodes;                 // ordered by (strand_a, strand_b)
  std::vector<TangleArc> arcs;
  std::vector<std::vector<int>> arcs_of_strand;  // per strand, travel order (2k+1 arcs)
  std::vector<int> port_arc;                     // stub arc at each port
  std::vector<bool> strand_enters_first;        // strand directed from port j-1 inward
  std::vector<int> strand_level;                 // original height per strand

  struct Sub {
    int a = 0, b = 0, over = 0;
  };
  std::vector<Sub> sub_crossings() const;
};

// Replaces one odd crossing by a planar tangle of 2-crossings arranged so
// that orientation-respecting smoothing of the tangle closes up exactly k*k
// circles, each tracing a face of the given target color. Requires the host
// diagram to be oriented and colored; Errc::even_order on an even crossing.
DecompositionTangle decompose_crossing(const OrientedColoredDiagram& d, int crossing, FaceColor target);

enum class Target { white, black, majority };

struct DecomposedDiagram {
  MulticrossingDiagram diagram;  // uniform order 2
  Orientation orientation;       // inherited edgewise
  Coloring coloring;             // consistent with the original across the refinement
  FaceColor target = FaceColor::white;
  int k = 0;
  int original_crossings = 0;
  int original_white = 0;
  int original_black = 0;
};

// Decomposes every crossing of a uniform odd diagram. With Target::majority
// the color with at least kn+1 faces is used (white on a tie).
DecomposedDiagram decompose_diagram(const OrientedColoredDiagram& d, Target target);

}  // namespace multicross
