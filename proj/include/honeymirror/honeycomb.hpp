#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "honeymirror/lattice.hpp"

namespace hm {

/// Cyclically ordered list of permutohedra (lattice points).
using CyclicSet = std::vector<LatticeVector>;

/// Equality up to rotation.
bool cyclic_equal(const CyclicSet& a, const CyclicSet& b);

/// A face of the honeycomb: a base permutohedron and a cyclic ordered partition
/// (B_0, ..., B_m) of [n+1], rotated so that B_0 contains the anchor element n.
/// Incident permutohedra are P_0 = base and P_k = P_{k-1} + lambda_{B_k}.
class HoneycombFace {
 public:
  HoneycombFace() = default;
  /// Builds a face from any rotation: `start` is P_0 for the given block order.
  HoneycombFace(const LatticeVector& start, const std::vector<Subset>& blocks);

  /// Recovers the face from its incident permutohedra in cyclic order.
  static HoneycombFace from_cycle(const CyclicSet& perms);

  int n() const { return base_.n(); }
  int codim() const { return static_cast<int>(blocks_.size()) - 1; }
  int dim() const { return n() - codim(); }
  const LatticeVector& base() const { return base_; }
  const std::vector<Subset>& blocks() const { return blocks_; }

  /// Incident permutohedra P_0, ..., P_m in cyclic order.
  CyclicSet incident() const;
  /// Position of p in incident(), or -1.
  int position_of(const LatticeVector& p) const;

  bool operator==(const HoneycombFace& o) const { return base_ == o.base_ && blocks_ == o.blocks_; }
  bool operator!=(const HoneycombFace& o) const { return !(*this == o); }
  bool operator<(const HoneycombFace& o) const;

  std::string str() const;

 private:
  LatticeVector base_;
  std::vector<Subset> blocks_;
};

CyclicSet cyclic_order_at(const HoneycombFace& face);

/// The facet shared by `base` and `base + lambda_I`.
HoneycombFace facet_for_subset(Subset I, const LatticeVector& base);

HoneycombFace act(const WeylElement& g, const HoneycombFace& face);

/// Faces obtained by merging one cyclically adjacent pair of blocks.
std::vector<HoneycombFace> up_covers(const HoneycombFace& face);
/// Faces obtained by splitting one block into two ordered nonempty parts.
std::vector<HoneycombFace> down_covers(const HoneycombFace& face);
/// All faces strictly above: every subset of the incident permutohedra with at
/// least two elements other than the full set, in cyclic order.
std::vector<HoneycombFace> cofaces(const HoneycombFace& face);
/// All faces of the closure of `face` of the given dimension (including itself).
std::vector<HoneycombFace> subfaces(const HoneycombFace& face, int dim);
/// Incident permutohedra of `from` missing from `to`, as positions in `from`.
/// Requires `to` to be a coface of `from`.
std::vector<int> removed_positions(const HoneycombFace& from, const HoneycombFace& to);
bool is_coface(const HoneycombFace& lower, const HoneycombFace& upper);

/// Census of the faces of one permutohedron.
struct PermutohedronCensus {
  int n = 0;
  /// counts[d] = number of faces of dimension d (d = 0..n-1).
  std::vector<long long> counts_by_dim;
  /// Face types: sorted block-size multiset -> count. The face with blocks of
  /// sizes b_0..b_m is the product of permutohedra of dimensions b_k - 1.
  std::map<std::vector<int>, long long> types;
  /// Faces of the permutohedron at the origin.
  std::vector<HoneycombFace> faces;
  /// Number of vertices of each face.
  std::vector<long long> vertex_counts;
};

PermutohedronCensus build_permutohedron(int n);

/// Faces of the honeycomb all of whose incident permutohedra lie in a lattice ball.
class FacePoset {
 public:
  static FacePoset window(int n, int radius);
  static FacePoset window(const LatticeVector& center, int radius);

  int n() const { return center_.n(); }
  int radius() const { return radius_; }
  const LatticeVector& center() const { return center_; }
  bool contains_point(const LatticeVector& p) const { return (p - center_).norm() <= radius_; }
  bool contains(const HoneycombFace& f) const;

  const std::vector<HoneycombFace>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  std::optional<std::size_t> index_of(const HoneycombFace& f) const;
  /// Cover relations alpha -> beta (dim alpha + 1 = dim beta) by face index.
  const std::vector<std::vector<std::size_t>>& up() const { return up_; }
  const std::vector<std::vector<std::size_t>>& down() const { return down_; }
  std::size_t cover_count() const;
  /// All incident permutohedra at distance at most radius - 1 from the center.
  bool interior(std::size_t i) const;

 private:
  LatticeVector center_;
  int radius_ = 0;
  std::vector<HoneycombFace> faces_;
  std::map<HoneycombFace, std::size_t> index_;
  std::vector<std::vector<std::size_t>> up_, down_;
};

/// Finite poset given by its strict order relation.
struct AbstractPoset {
  std::size_t size = 0;
  std::vector<std::vector<bool>> less;  // less[i][j]: i < j
};

AbstractPoset link_poset(const HoneycombFace& face, const FacePoset& poset);
/// Face poset of the (m-2)-skeleton of the m-simplex: subsets of size 1..m-1.
AbstractPoset skeleton_poset(int m);
bool posets_isomorphic(const AbstractPoset& a, const AbstractPoset& b);
bool is_arboreal_link(const HoneycombFace& face, const FacePoset& poset);

/// Point equidistant from the incident permutohedra of a vertex.
RationalPoint vertex_position(const HoneycombFace& vertex);
/// Barycenter of the vertices of the face.
RationalPoint realize_face_center(const HoneycombFace& face);

/// Orthonormal coordinates (n numbers) of a point, for mesh export.
std::vector<double> embed_orthonormal(const RationalPoint& p);

}  // namespace hm
