#pragma once

// Shared hand-checked fixture networks used across the test suites.

#include <string>
#include <vector>

#include "asymclust/network.hpp"
#include "asymclust/ultrametric.hpp"

namespace fixtures {

using asymclust::Network;
using asymclust::SquareMatrix;
using asymclust::Ultrametric;

// The golden worked example: a cheap directed cycle a->b->c->a with
// expensive reverse links. Reciprocal clustering merges at 2 then 3;
// nonreciprocal merges everything at 1; unilateral at 0.5.
//   a->b 0.5   b->a 2
//   b->c 0.5   c->b 3
//   c->a 1     a->c 4
inline Network golden_net() {
  return Network::validate({"a", "b", "c"}, SquareMatrix::from_rows({
                                                {0.0, 0.5, 4.0},
                                                {2.0, 0.0, 0.5},
                                                {1.0, 3.0, 0.0},
                                            }));
}

// Influence-bound example: the cheapest loop is the clockwise cycle
// with maximum link 1, so min_loop_cost = 1 while separation = 0.5.
//   a->b 0.5   b->a 2
//   b->c 1     c->b 3
//   c->a 1     a->c 3
inline Network influence_net() {
  return Network::validate({"a", "b", "c"}, SquareMatrix::from_rows({
                                                {0.0, 0.5, 3.0},
                                                {2.0, 0.0, 1.0},
                                                {1.0, 3.0, 0.0},
                                            }));
}

// Four-point nested ultrametric: u(a,b)=2, u(c,d)=4, all cross pairs 6.
inline Ultrametric four_point_ultrametric() {
  return Ultrametric::validate({"a", "b", "c", "d"}, SquareMatrix::from_rows({
                                                         {0.0, 2.0, 6.0, 6.0},
                                                         {2.0, 0.0, 6.0, 6.0},
                                                         {6.0, 6.0, 0.0, 4.0},
                                                         {6.0, 6.0, 4.0, 0.0},
                                                     }));
}

// Source side of the dissimilarity-reducing map example.
inline Network map_source() {
  return Network::validate({"x1", "x2", "x3"}, SquareMatrix::from_rows({
                                                   {0.0, 1.0, 3.0},
                                                   {2.0, 0.0, 2.0},
                                                   {2.0, 3.0, 0.0},
                                               }));
}

// Target side: everything 1/2 one way around, 1 the other way; the
// node-wise map from map_source never increases a dissimilarity.
inline Network map_target() {
  return Network::validate({"y1", "y2", "y3"}, SquareMatrix::from_rows({
                                                   {0.0, 0.5, 1.0},
                                                   {1.0, 0.0, 0.5},
                                                   {0.5, 1.0, 0.0},
                                               }));
}

}  // namespace fixtures
