#pragma once

#include <string>
#include <vector>

#include "honeymirror/branes.hpp"
#include "honeymirror/mf.hpp"

namespace hm {

struct ArborealSummary {
  int n = 0;
  int radius = 0;
  std::size_t faces = 0;
  std::size_t interior_faces = 0;
  std::vector<std::size_t> interior_by_codim;  // index = codim
  std::vector<std::string> link_failures;
  std::size_t interior_vertices = 0;
  std::vector<std::string> degree_failures;  // interior vertices without exactly n+1 edges
  bool pass() const { return link_failures.empty() && degree_failures.empty(); }
};

/// Link posets and vertex degrees over the interior of a window.
ArborealSummary arboreal_sweep(int n, int radius);

struct CyclicSummary {
  int n = 0;
  int radius = 0;
  std::size_t action_checks = 0;
  std::size_t cover_checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Cyclic orders commute with the Weyl generators, and every cover relation restricts
/// cyclic orders by an order-preserving injection.
CyclicSummary cyclic_sweep(int n, int radius);

struct CorepCase {
  std::string skyscraper;
  std::string facet;
  LatticeVector side;
  std::string target;
  StalkDims expected;          // stalk(G, F, side)
  StalkDims poset;             // global_hom, poset total complex
  std::optional<StalkDims> quiver;  // global_hom, region quiver, when applicable
  bool match = false;
};

struct CorepSummary {
  int n = 0;
  int radius = 0;
  std::vector<CorepCase> cases;
  std::size_t mismatches = 0;
  std::size_t quiver_cases = 0;
  std::size_t quiver_mismatches = 0;
  bool pass() const { return !cases.empty() && mismatches == 0 && quiver_mismatches == 0; }
};

/// Skyscrapers on every maximal facet (between P and P +- lambda_a) with a side within radius - 1 of the origin, read from
/// either side, against B_{P,J} (both parities) for P within `family_radius`.
CorepSummary corepresentability_sweep(int n, int radius, int family_radius);

struct EngineCell {
  int a = 0;
  int b = 0;
  LatticeVector weight;
  HomDims monomial;
  HomDims truncation;
};

struct EngineSummary {
  int n = 0;
  int twist_radius = 0;
  std::vector<EngineCell> cells;
  bool engines_agree = false;
  bool dims_binary = false;
  bool identity_classes = false;  // End(O^a) at weight 0 is (1,0)
  bool f_classes = false;         // each f_ij is closed, not a boundary, and spans a (0,1) Hom
  bool pass() const { return engines_agree && dims_binary && identity_classes && f_classes; }
};

EngineSummary engine_sweep(int n, int twist_radius, int degree_cap = 64);

}  // namespace hm
