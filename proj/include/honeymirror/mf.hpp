#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "honeymirror/polynomial.hpp"

namespace hm {

/// Records that an MF is O^a<twist>[shift], enabling the monomial engine.
struct StructureTag {
  int a = 0;
  LatticeVector twist;
  int shift = 0;
};

/// Equivariant matrix factorization of z_0 ... z_n. Basis elements carry a
/// parity and a weight; d[t][s] is the entry from basis s to basis t, and an
/// entry z^u satisfies weight(u) = weight(s) - weight(t).
class EquivariantMF {
 public:
  EquivariantMF(int n, std::vector<int> parity, std::vector<LatticeVector> weight, PolyMatrix d);

  int n() const { return n_; }
  std::size_t size() const { return parity_.size(); }
  const std::vector<int>& parity() const { return parity_; }
  const std::vector<LatticeVector>& weights() const { return weight_; }
  const PolyMatrix& d() const { return d_; }
  std::pair<std::size_t, std::size_t> ranks() const;
  /// Blocks of d between the even and odd parts: d0 maps even to odd, d1 odd to even.
  PolyMatrix d0() const;
  PolyMatrix d1() const;

  const std::optional<StructureTag>& tag() const { return tag_; }
  void set_tag(std::optional<StructureTag> t) { tag_ = std::move(t); }

  /// Throws if d is not odd, not equivariant, or d^2 != W id.
  void validate() const;

 private:
  int n_;
  std::vector<int> parity_;
  std::vector<LatticeVector> weight_;
  PolyMatrix d_;
  std::optional<StructureTag> tag_;
};

/// O^a: even generator of weight 0, odd generator of weight lambda_a, d0 = W/z_a, d1 = z_a.
EquivariantMF structure_mf(int n, int a);
/// Koszul factorization on the variables outside I: d = sum z_c e_c + (W / z_{c_1}) i_{c_1},
/// with e_c of weight -lambda_c.
EquivariantMF koszul_mf(int n, Subset I);

EquivariantMF twist(const EquivariantMF& m, const LatticeVector& lambda);
/// Swaps parities and negates the differential.
EquivariantMF shift(const EquivariantMF& m);
/// Permutes variables and weights by the linear part of g and twists by its translation.
EquivariantMF act(const WeylElement& g, const EquivariantMF& m);
EquivariantMF direct_sum(const EquivariantMF& a, const EquivariantMF& b);

struct MFMorphism {
  EquivariantMF source;
  EquivariantMF target;
  int parity = 0;
  PolyMatrix m;  // [target basis][source basis]
};

MFMorphism zero_morphism(const EquivariantMF& source, const EquivariantMF& target, int parity);
MFMorphism identity(const EquivariantMF& m);
/// Checks parity and weight compatibility of every entry.
void validate_morphism(const MFMorphism& f);
/// d_N f - (-1)^|f| f d_M.
MFMorphism hom_differential(const MFMorphism& f);
bool is_closed(const MFMorphism& f);
MFMorphism compose(const MFMorphism& g, const MFMorphism& f);
MFMorphism add(const MFMorphism& f, const MFMorphism& g, const Rational& scale = 1);
/// The same matrices viewed as a morphism of twisted (or permuted) objects.
MFMorphism twist(const MFMorphism& f, const LatticeVector& lambda);
MFMorphism act(const WeylElement& g, const MFMorphism& f);
/// Cone of a closed even morphism: M[1] + N with differential [[-d_M, 0], [f, d_N]].
EquivariantMF cone(const MFMorphism& f);

/// f_ij: O^i -> O^j<lambda_i>, odd, with entries 1 and -W/(z_i z_j).
MFMorphism f_map(int n, int i, int j);

enum class HomEngine { Auto, Monomial, Truncation };

struct HomDims {
  int even = 0;
  int odd = 0;
  int total() const { return even + odd; }
  bool operator==(const HomDims& o) const = default;
};

class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cohomology of the weight-zero part of Hom(M, N<weight>).
HomDims hom_cohomology(const EquivariantMF& m, const EquivariantMF& n, const LatticeVector& weight,
                       HomEngine engine = HomEngine::Auto, int degree_cap = 64);
HomDims hom_cohomology(const EquivariantMF& m, const EquivariantMF& n, HomEngine engine = HomEngine::Auto,
                       int degree_cap = 64);
/// Closed-form dimensions for O^a<lambda>[p] -> O^b<mu>[q].
HomDims monomial_hom(int n, int a, const LatticeVector& lambda, int p, int b, const LatticeVector& mu, int q);
/// Whether a closed morphism is a boundary, decided exactly on its R-degree levels.
bool is_boundary_class(const MFMorphism& f);

struct HomotopyCertificate {
  MFMorphism h;
  int degree = 0;  // degree bound at which it was found
};

struct SearchResult {
  std::optional<HomotopyCertificate> certificate;
  int last_degree = 0;
};

/// Finds h with dh + hd = g (for odd h: d_N h + h d_M = g). Degree bound starts at
/// n + 2 and doubles up to the cap. Certificates are verified exactly.
SearchResult nullhomotopy_search(const MFMorphism& g, int degree_cap = 64);
SearchResult is_contractible(const EquivariantMF& m, int degree_cap = 64);
/// Exact check of a certificate.
bool verify_certificate(const MFMorphism& g, const HomotopyCertificate& c);

/// The twisted complex O^{i_0} -> O^{i_1}<lambda_{i_0}> -> ... joined by the f maps,
/// with higher corrections from nullhomotopies of consecutive compositions.
struct AcyclicityReport {
  std::vector<int> order;
  bool compositions_null = false;
  bool contractible = false;
  bool inconclusive = false;
  int max_degree = 0;
};

AcyclicityReport check_acyclicity(int n, const std::vector<int>& order, int degree_cap = 64);
/// Builds the totalized twisted complex; throws Inconclusive if a correction cannot be found.
EquivariantMF acyclic_totalization(int n, const std::vector<int>& order, int degree_cap = 64);

}  // namespace hm
