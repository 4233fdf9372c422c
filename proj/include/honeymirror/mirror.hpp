#pragma once

#include <string>
#include <vector>

#include "honeymirror/branes.hpp"
#include "honeymirror/mf.hpp"

namespace hm {

enum class Verdict { Match, Mismatch, Inconclusive };
std::string to_string(Verdict v);
/// Combines verdicts: any inconclusive wins over mismatch, which wins over match.
Verdict combine(Verdict a, Verdict b);

/// One (a, b, weight) cell of the generator table.
struct GeneratorCell {
  int a = 0;
  int b = 0;
  LatticeVector weight;
  StalkDims aside;  // Hom(delta_{F_a,P}, delta_{F_b,P}<weight>)
  HomDims bside;    // Hom(O^a, O^b<weight>)
  HomDims bside_alt;  // the same with the weight negated, reported for the twist-convention question
  bool match = false;
};

struct EquivarianceCheck {
  std::string generator;
  bool aside_invariant = false;
  bool bside_invariant = false;
};

struct MirrorReport {
  int n = 0;
  int twist_radius = 0;
  int window_radius = 0;
  LatticeVector base;
  std::vector<GeneratorCell> cells;
  std::vector<EquivarianceCheck> equivariance;
  std::vector<std::string> conventions;
  Verdict verdict = Verdict::Inconclusive;
  double seconds = 0;  // not serialized
};

/// The generator dictionary O^a<lambda> <-> delta_{F_a,P}<lambda>, compared on every pair
/// and every twist within `twist_radius`. With `equivariance`, the table is recomputed
/// after acting on both sides by each generator of the affine Weyl group.
MirrorReport check_generators(int n, int twist_radius, int window_radius = 2, bool equivariance = true);

/// Mirror object of B_{P,I}: K_I[|I^c|]<lambda_{I^c} + P>.
EquivariantMF brane_mirror(int n, const LatticeVector& base, Subset I);

struct KoszulCell {
  Subset I = 0;
  int a = 0;
  LatticeVector weight;
  StalkDims aside;  // Hom(delta_{F_a,weight}, B_{0,I})
  HomDims bside;    // Hom(O^a<weight>, K_I mirror)
  bool match = false;
};

struct EndCell {
  Subset I = 0;
  LatticeVector weight;
  StalkDims aside;  // Hom(B_{weight,empty}, B_{0,I})
  HomDims bside;
  bool match = false;
};

struct ConeCheck {
  LatticeVector base;
  Subset directions = 0;
  int i = 0;
  bool pass = false;
};

struct RelationsReport {
  int n = 0;
  int window_radius = 0;
  int twist_radius = 0;
  int degree_cap = 64;
  std::vector<AcyclicityReport> acyclicity;
  std::vector<ConeCheck> cones;
  std::vector<KoszulCell> koszul;
  std::vector<EndCell> ends;
  Verdict acyclicity_verdict = Verdict::Inconclusive;
  Verdict cone_verdict = Verdict::Inconclusive;
  Verdict koszul_verdict = Verdict::Inconclusive;
  Verdict verdict = Verdict::Inconclusive;
};

/// B-side acyclicity for every ordering.
std::vector<AcyclicityReport> acyclicity_sweep(int n, int degree_cap = 64);
/// A-side cone relations for every (P, J, i) with P within window_radius - 1 of the
/// origin, J proper and nonempty, i in J.
std::vector<ConeCheck> cone_sweep(int n, int window_radius);

RelationsReport check_relations(int n, int window_radius = 2, int twist_radius = 1, int degree_cap = 64);

/// Applies f to 0..count-1 on worker threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F f);

}  // namespace hm

#include "honeymirror/detail/parallel.hpp"
