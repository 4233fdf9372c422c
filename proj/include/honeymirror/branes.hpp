#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "honeymirror/honeycomb.hpp"
#include "honeymirror/localcat.hpp"

namespace hm {

/// A set of permutohedra: either P + N<J> for a proper subset J, or a finite set.
class PermutohedronSet {
 public:
  static PermutohedronSet shape(const LatticeVector& base, Subset directions);
  static PermutohedronSet finite(std::vector<LatticeVector> cells);

  int n() const { return base_.n(); }
  bool is_finite() const { return finite_; }
  const LatticeVector& base() const { return base_; }
  Subset directions() const { return directions_; }
  const std::vector<LatticeVector>& cells() const { return cells_; }

  bool contains(const LatticeVector& p) const;
  PermutohedronSet acted(const WeylElement& g) const;
  std::string describe() const;
  bool operator==(const PermutohedronSet& o) const;

 private:
  bool finite_ = false;
  LatticeVector base_;
  Subset directions_ = 0;
  std::vector<LatticeVector> cells_;  // sorted, for finite sets
};

/// Rank-one brane along the boundary of a permutohedron set, possibly shifted.
class RankOneBrane {
 public:
  RankOneBrane(PermutohedronSet cells, int parity = 0);

  const PermutohedronSet& cells() const { return cells_; }
  int parity() const { return parity_; }
  int n() const { return cells_.n(); }

  /// Local object at a face: the interval of incident permutohedra in the set,
  /// or nullopt when the face is off the boundary. Throws if the set is not
  /// cyclically connected at the face.
  std::optional<IntervalObject> at(const HoneycombFace& face) const;

  RankOneBrane shifted(int p = 1) const { return RankOneBrane(cells_, parity_ + p); }
  RankOneBrane twisted(const LatticeVector& lambda) const;
  std::string describe() const;

 private:
  PermutohedronSet cells_;
  int parity_ = 0;
};

/// B_{P,J}.
RankOneBrane brane(const LatticeVector& base, Subset directions, int parity = 0);

/// Skyscraper along a maximal facet, corepresenting the stalk read from `side`.
RankOneBrane skyscraper(const HoneycombFace& facet, const LatticeVector& side);
/// delta_{F_a, P}: skyscraper along the facet between P and P + lambda_a, read from P.
RankOneBrane skyscraper_at(const LatticeVector& base, int a);

RankOneBrane weyl_act_brane(const WeylElement& g, const RankOneBrane& b);

struct BraneFailure {
  HoneycombFace witness;
};

/// Checks cyclic connectedness at every window face touching the set.
std::variant<RankOneBrane, BraneFailure> build_rank_one(const PermutohedronSet& cells, const FacePoset& window);

struct StalkDims {
  int even = 0;
  int odd = 0;
  int total() const { return even + odd; }
  bool operator==(const StalkDims& o) const = default;
};

StalkDims stalk(const RankOneBrane& g, const HoneycombFace& facet, const LatticeVector& side);

class MarginError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The region-quiver method does not apply to this source.
class MethodNotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class HomMethod { PosetTotalComplex, RegionQuiver };
std::string to_string(HomMethod m);

struct GlobalHomResult {
  std::string source;
  std::string target;
  StalkDims dims;
  HomMethod method = HomMethod::PosetTotalComplex;
  LatticeVector window_center;
  int window_radius = 0;
  std::size_t support_faces = 0;
  std::vector<std::size_t> chain_counts;  // per chain length, method (a)
  std::size_t quiver_vertices = 0;        // method (b)
  std::size_t quiver_arrows = 0;
  std::size_t quiver_relations = 0;
  bool validated = true;  // source is a skyscraper or has finite support
};

/// Hom between rank-one branes over a window centered at `center`. The result
/// is recomputed with radius + 1 and MarginError is thrown if it changes.
GlobalHomResult global_hom(const RankOneBrane& source, const RankOneBrane& target, const LatticeVector& center,
                           int radius, HomMethod method = HomMethod::PosetTotalComplex, bool check_margin = true);

/// Hom computed on one fixed window, without the margin check.
GlobalHomResult global_hom_window(const RankOneBrane& source, const RankOneBrane& target, const FacePoset& window,
                                  HomMethod method);

/// The map x_i: B_{P,J}<lambda_i> -> B_{P,J}, recorded stalkwise on window facets.
struct XMap {
  int i = 0;
  RankOneBrane source;
  RankOneBrane target;
  std::vector<HoneycombFace> facets;
  std::vector<int> ranks;  // rank of the stalk map at each facet
};

XMap x_map(int i, const RankOneBrane& b, const FacePoset& window);

/// Verifies stalkwise that cone(x_i) has the stalks of B_{P,J minus i} on every window facet.
bool cone_check(int i, const LatticeVector& base, Subset directions, const FacePoset& window);

/// Stalkwise check that x_i x_k and x_k x_i agree as maps B<lambda_i + lambda_k> -> B.
bool commuting_square_check(int i, int k, const LatticeVector& base, Subset directions, const FacePoset& window);

/// Shared window cache, keyed by center and radius.
const FacePoset& cached_window(const LatticeVector& center, int radius);

}  // namespace hm
