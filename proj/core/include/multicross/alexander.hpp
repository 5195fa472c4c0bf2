#pragma once

#include "multicross/diagram.hpp"
#include "multicross/laurent.hpp"
#include "multicross/orientation.hpp"

namespace multicross {

// Alexander polynomial of an oriented 2-crossing diagram, computed from the
// arc presentation matrix: one row per crossing, one column per arc (arcs
// are the strand pieces between consecutive underpasses), delete one row
// and one column, take the exact determinant (fraction-free Bareiss
// elimination over integer polynomials), and normalize units.
//
// The diagram must be connected with uniform order 2 and a consistent strand
// orientation. Crossing-free unknot diagrams give the constant 1.
LaurentPolynomial alexander(const MulticrossingDiagram& d, const Orientation& o);

// max exponent - min exponent; 0 for the zero polynomial.
int span(const LaurentPolynomial& p);

}  // namespace multicross
