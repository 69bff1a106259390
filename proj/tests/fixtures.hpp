#pragma once

#include <string>

#include "lielab/algebra.hpp"
#include "lielab/lie_io.hpp"

namespace fixtures {

inline lielab::LieAlgebra g54() {
  return lielab::parse_lie("dim 5\nname g5_4\n1 2 3 1\n1 3 4 1\n2 3 5 1\n");
}

inline lielab::LieAlgebra heis1() { return lielab::parse_lie("dim 3\n1 2 3 1\n"); }

// sl(2) with x1=e, x2=h, x3=f: [e,h]=-2e, [e,f]=h, [h,f]=-2f.
inline lielab::LieAlgebra sl2() { return lielab::parse_lie("dim 3\n1 2 1 -2\n1 3 2 1\n2 3 3 -2\n"); }

inline lielab::LieAlgebra diamond() { return lielab::parse_lie("dim 4\n1 2 3 1\n1 3 2 -1\n2 3 4 1\n"); }

// Sparse vector helper: {{position, value}, ...} with 0-based positions.
inline lielab::SparseVector sv(std::initializer_list<std::pair<unsigned, int>> entries) {
  lielab::SparseVector v;
  for (auto [i, c] : entries) v.push_back({i, c});
  lielab::normalize(v);
  return v;
}

}  // namespace fixtures
