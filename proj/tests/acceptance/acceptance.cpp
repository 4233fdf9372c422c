// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "honeymirror/mirror.hpp"
#include "honeymirror/report.hpp"
#include "honeymirror/sweeps.hpp"
#include "hull_oracle.hpp"
#include "localcat_oracle.hpp"

using namespace hm;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

Outcome census() {
  std::string detail;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const PermutohedronCensus c = build_permutohedron(n);
    ok = ok && c.counts_by_dim.front() == factorial(n + 1);
    if (n >= 2) ok = ok && c.counts_by_dim.back() == (n == 2 ? 6 : 14);
    if (n == 3) {
      ok = ok && c.types.at({1, 3}) == 8 && c.types.at({2, 2}) == 6;
    }
    // Face-for-face comparison with the Voronoi-cell hull.
    const oracle::Hull hull = oracle::voronoi_cell(n);
    std::map<std::vector<mpq_class>, std::size_t> index;
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) index[hull.vertices[i]] = i;
    std::set<oracle::HullFace> mine;
    for (const auto& f : c.faces) {
      oracle::HullFace h{f.dim(), {}};
      for (const auto& v : subfaces(f, 0)) {
        auto it = index.find(sum_zero_coords(vertex_position(v)));
        if (it == index.end()) {
          ok = false;
          continue;
        }
        h.vertices.insert(it->second);
      }
      mine.insert(h);
    }
    ok = ok && mine == hull.faces && mine.size() == c.faces.size();
    detail += " n=" + std::to_string(n) + ":" + std::to_string(c.faces.size()) + "/" + std::to_string(hull.faces.size());
  }
  return {ok, "faces (combinatorial/hull)" + detail};
}

Outcome arboreal() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 3; ++n) {
    const ArborealSummary s = arboreal_sweep(n, 2);
    ok = ok && s.pass() && s.interior_faces > 0 && s.interior_vertices > 0;
    detail += " n=" + std::to_string(n) + ": " + std::to_string(s.interior_faces) + " interior faces, " +
              std::to_string(s.link_failures.size() + s.degree_failures.size()) + " failures;";
  }
  return {ok, detail};
}

Outcome cyclic() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 3; ++n) {
    const CyclicSummary s = cyclic_sweep(n, 2);
    ok = ok && s.pass() && s.action_checks > 0 && s.cover_checks > 0;
    detail += " n=" + std::to_string(n) + ": " + std::to_string(s.action_checks) + " action, " +
              std::to_string(s.cover_checks) + " cover checks;";
  }
  return {ok, detail};
}

Outcome local_category() {
  std::size_t homs = 0, commutes = 0, failures = 0;
  for (int size = 1; size <= 5; ++size) {
    const auto objs = all_intervals(size);
    for (const auto& a : objs) {
      for (const auto& b : objs) {
        for (int cut = 0; cut < size; ++cut) {
          ++homs;
          if (!(hom_intervals(a, b) == oracle::brute_hom(a, b, cut))) ++failures;
        }
        if (size < 3) continue;
        const LocalHomSpace h = hom_intervals(a, b);
        for (int k = 0; k < size; ++k) {
          for (int l = k + 1; l < size; ++l) {
            ++commutes;
            // remove l then k, versus k then l (relabelled l - 1)
            auto al = restrict(l, a), bl = restrict(l, b);
            auto ak = restrict(k, a), bk = restrict(k, b);
            std::optional<IntervalObject> a1 = al ? restrict(k, *al) : std::nullopt;
            std::optional<IntervalObject> b1 = bl ? restrict(k, *bl) : std::nullopt;
            std::optional<IntervalObject> a2 = ak ? restrict(l - 1, *ak) : std::nullopt;
            std::optional<IntervalObject> b2 = bk ? restrict(l - 1, *bk) : std::nullopt;
            if (a1 != a2 || b1 != b2) {
              ++failures;
              continue;
            }
            for (int e = 0; e < 2; ++e) {
              if (h.at(e) == 0 || !a1 || !b1) continue;
              const bool p1 = restrict_hom(l, a, b, e) && restrict_hom(k, *al, *bl, e);
              const bool p2 = restrict_hom(k, a, b, e) && restrict_hom(l - 1, *ak, *bk, e);
              if (p1 != p2) ++failures;
            }
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(homs) + " Hom comparisons, " + std::to_string(commutes) +
                             " removal pairs, " + std::to_string(failures) + " failures"};
}

Outcome corepresentability() {
  const CorepSummary a = corepresentability_sweep(2, 2, 2);
  const CorepSummary b = corepresentability_sweep(3, 1, 1);
  return {a.pass() && b.pass(), "n=2 R=2: " + std::to_string(a.cases.size()) + " cases (" +
                                    std::to_string(a.quiver_cases) + " by both methods), " +
                                    std::to_string(a.mismatches + a.quiver_mismatches) + " mismatches; n=3 R=1: " +
                                    std::to_string(b.cases.size()) + " cases, " +
                                    std::to_string(b.mismatches + b.quiver_mismatches) + " mismatches"};
}

Outcome cones() {
  std::size_t total = 0, failed = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& c : cone_sweep(n, 2)) {
      ++total;
      if (!c.pass) ++failed;
    }
  }
  return {total > 0 && failed == 0, std::to_string(total) + " (P, J, i) triples, " + std::to_string(failed) + " failures"};
}

Outcome engines() {
  const EngineSummary a = engine_sweep(2, 3);
  const EngineSummary b = engine_sweep(3, 2);
  return {a.pass() && b.pass(), "n=2: " + std::to_string(a.cells.size()) + " cells, n=3: " +
                                    std::to_string(b.cells.size()) + " cells"};
}

Outcome acyclicity() {
  bool ok = true;
  std::size_t count = 0;
  int degree = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& r : acyclicity_sweep(n, 64)) {
      ++count;
      degree = std::max(degree, r.max_degree);
      ok = ok && r.compositions_null && r.contractible && !r.inconclusive;
    }
  }
  return {ok && count == 30, std::to_string(count) + " orderings, max search degree " + std::to_string(degree)};
}

Outcome mirror() {
  const MirrorReport a = check_generators(2, 3);
  const MirrorReport b = check_generators(3, 2);
  const RelationsReport ra = check_relations(2, 2, 1);
  const RelationsReport rb = check_relations(3, 2, 1);
  const bool ok = a.verdict == Verdict::Match && b.verdict == Verdict::Match && ra.verdict == Verdict::Match &&
                  rb.verdict == Verdict::Match && a.equivariance.size() == 4 && b.equivariance.size() == 6;
  return {ok, "generators n=2: " + std::to_string(a.cells.size()) + " cells " + to_string(a.verdict) + ", n=3: " +
                  std::to_string(b.cells.size()) + " cells " + to_string(b.verdict) + "; brane family n=2 " +
                  to_string(ra.verdict) + ", n=3 " + to_string(rb.verdict)};
}

Outcome determinism() {
  bool ok = true;
  std::size_t bytes = 0;
  const std::vector<RunConfig> configs{
      {"build", 3, 1, 1, 64, "json"},
      {"arboreal", 2, 2, 1, 64, "json"},
      {"aside-hom", 2, 2, 1, 64, "json"},
      {"bside-hom", 3, 2, 2, 64, "json"},
      {"acyclic", 2, 2, 1, 64, "json"},
      {"mirror", 2, 2, 2, 64, "json"},
  };
  for (const auto& c : configs) {
    const Report first = run_report(c);
    const Report second = run_report(c);
    ok = ok && first.json == second.json;
    bytes += first.json.size();
  }
  for (int n = 2; n <= 3; ++n) {
    const std::string a = window_obj(n, 2), b = window_obj(n, 2);
    ok = ok && a == b;
    bytes += a.size();
  }
  return {ok, std::to_string(configs.size()) + " reports and 2 OBJ exports, " + std::to_string(bytes) + " bytes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"permutohedron census", census},
      {"arboreal links", arboreal},
      {"cyclic cosheaf equivariance", cyclic},
      {"local category oracle", local_category},
      {"corepresentability", corepresentability},
      {"cone relations", cones},
      {"B-side engines agree", engines},
      {"acyclicity lemma", acyclicity},
      {"mirror match", mirror},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
