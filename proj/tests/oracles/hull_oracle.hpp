#pragma once

#include <set>
#include <vector>

#include <gmpxx.h>

namespace hm::oracle {

/// Point in sum-zero coordinates of R^{n+1}.
using HullPoint = std::vector<mpq_class>;

struct HullFace {
  int dim = 0;
  std::set<std::size_t> vertices;
  bool operator<(const HullFace& o) const { return dim != o.dim ? dim < o.dim : vertices < o.vertices; }
  bool operator==(const HullFace& o) const { return dim == o.dim && vertices == o.vertices; }
};

struct Hull {
  std::vector<HullPoint> vertices;  // sorted
  std::set<HullFace> faces;         // proper nonempty faces, vertices included
};

/// Voronoi cell of the origin in the A_n root lattice, from the half-spaces of all lattice
/// vectors of word norm at most 2, by exhaustive vertex enumeration over exact rationals.
Hull voronoi_cell(int n);

}  // namespace hm::oracle
