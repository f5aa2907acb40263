#pragma once

// Worked examples shared by several test files.

#include <vector>

#include "abelian/hypermatrix.hpp"

namespace fixtures {

using abelian::Index;
using abelian::OrbitHypermatrix;
using abelian::Shape;

// Binary 3 x 3 x 5 hypermatrix with d* = 16 and single involved pair (1,2).
inline const std::vector<Index> kCubeDefiningReps = {
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {1, 2, 1},
    {1, 2, 2}, {1, 1, 0}, {0, 1, 1}, {1, 0, 2}, {0, 1, 2}};

// Same shape; mad = 6 with successors B1 = D + Q(1,1,2) and B2 = D + Q(1,1,1).
inline const std::vector<Index> kMadCubeDefiningReps = {
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {1, 2, 1},
    {1, 2, 2}, {1, 0, 1}, {0, 1, 1}, {1, 0, 2}, {0, 1, 2}};

// Binary 3 x 9 matrix with mad = 3 reached after one reduction step.
inline const std::vector<Index> kMadMatrixDefiningReps = {{1, 0}, {0, 1}, {1, 3}, {1, 6}};

inline OrbitHypermatrix cube() {
  return OrbitHypermatrix::from_orbit_reps(Shape(2, {3, 3, 5}), 1, kCubeDefiningReps);
}

inline OrbitHypermatrix mad_cube() {
  return OrbitHypermatrix::from_orbit_reps(Shape(2, {3, 3, 5}), 1, kMadCubeDefiningReps);
}

inline OrbitHypermatrix mad_matrix() {
  return OrbitHypermatrix::from_orbit_reps(Shape(2, {3, 9}), 1, kMadMatrixDefiningReps);
}

// (2,0,0,1) over Z_4 with q = 3; closed once t = 2 since 9 = 1 mod 4.
inline OrbitHypermatrix ternary_vector() {
  abelian::Bitset support(4);
  support.set(0);
  support.set(3);
  return OrbitHypermatrix::from_support(Shape(3, {4}), 2, support);
}

// Binary 3 x 5 matrix; t = 4 makes every subset closed (16 = 1 mod 15).
inline OrbitHypermatrix small_matrix() {
  const Shape shape(2, {3, 5});
  abelian::Bitset support(shape.size());
  for (const Index& i : std::vector<Index>{{0, 0}, {1, 0}, {1, 1}, {1, 4}, {2, 0}, {2, 1}, {2, 4}}) {
    support.set(shape.linear(i));
  }
  return OrbitHypermatrix::from_support(shape, 4, support);
}

}  // namespace fixtures
