#include "honeymirror/branes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace hm {

PermutohedronSet PermutohedronSet::shape(const LatticeVector& base, Subset directions) {
  if (directions == full_subset(base.n())) throw std::invalid_argument("PermutohedronSet::shape: J must be proper");
  if (directions & ~full_subset(base.n())) throw std::invalid_argument("PermutohedronSet::shape: J out of range");
  PermutohedronSet s;
  s.base_ = base;
  s.directions_ = directions;
  return s;
}

PermutohedronSet PermutohedronSet::finite(std::vector<LatticeVector> cells) {
  if (cells.empty()) throw std::invalid_argument("PermutohedronSet::finite: empty set");
  PermutohedronSet s;
  s.finite_ = true;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  s.base_ = cells.front();
  s.cells_ = std::move(cells);
  return s;
}

bool PermutohedronSet::contains(const LatticeVector& p) const {
  if (finite_) return std::binary_search(cells_.begin(), cells_.end(), p);
  const LatticeVector d = p - base_;
  for (int k = 0; k <= n(); ++k) {
    if (!subset_contains(directions_, k) && d[k] != 0) return false;
  }
  return true;
}

PermutohedronSet PermutohedronSet::acted(const WeylElement& g) const {
  if (finite_) {
    std::vector<LatticeVector> out;
    for (const auto& c : cells_) out.push_back(g.apply(c));
    return finite(std::move(out));
  }
  return shape(g.apply(base_), g.apply(directions_));
}

std::string PermutohedronSet::describe() const {
  if (finite_) {
    std::string s = "{";
    for (std::size_t i = 0; i < cells_.size(); ++i) s += (i ? "," : "") + cells_[i].str();
    return s + "}";
  }
  std::string s = base_.str() + "+N<";
  bool first = true;
  for (int e : subset_elements(directions_)) {
    s += (first ? "" : ",") + std::to_string(e);
    first = false;
  }
  return s + ">";
}

bool PermutohedronSet::operator==(const PermutohedronSet& o) const {
  return finite_ == o.finite_ && base_ == o.base_ && directions_ == o.directions_ && cells_ == o.cells_;
}

RankOneBrane::RankOneBrane(PermutohedronSet cells, int parity) : cells_(std::move(cells)), parity_(parity & 1) {}

std::optional<IntervalObject> RankOneBrane::at(const HoneycombFace& face) const {
  const CyclicSet inc = face.incident();
  const int size = static_cast<int>(inc.size());
  std::vector<bool> in(size);
  int count = 0;
  for (int k = 0; k < size; ++k) {
    in[k] = cells_.contains(inc[k]);
    count += in[k];
  }
  if (count == 0 || count == size) return std::nullopt;
  int start = -1, runs = 0;
  for (int k = 0; k < size; ++k) {
    if (in[k] && !in[(k + size - 1) % size]) {
      start = k;
      ++runs;
    }
  }
  if (runs != 1) throw std::domain_error("rank-one brane: set is not cyclically connected at " + face.str());
  return interval(size, start, (start + count - 1) % size, parity_);
}

RankOneBrane RankOneBrane::twisted(const LatticeVector& lambda) const {
  return RankOneBrane(cells_.acted(WeylElement::translation(lambda)), parity_);
}

std::string RankOneBrane::describe() const { return "B" + cells_.describe() + (parity_ ? "[1]" : ""); }

RankOneBrane brane(const LatticeVector& base, Subset directions, int parity) {
  return RankOneBrane(PermutohedronSet::shape(base, directions), parity);
}

RankOneBrane skyscraper_at(const LatticeVector& base, int a) {
  const int n = base.n();
  if (a < 0 || a > n) throw std::invalid_argument("skyscraper_at: index out of range");
  return brane(base, full_subset(n) & ~(Subset(1) << a));
}

RankOneBrane skyscraper(const HoneycombFace& facet, const LatticeVector& side) {
  if (facet.codim() != 1) throw std::invalid_argument("skyscraper: not a facet");
  const CyclicSet inc = facet.incident();
  const int pos = facet.position_of(side);
  if (pos < 0) throw std::invalid_argument("skyscraper: side is not incident to the facet");
  const int n = facet.n();
  const LatticeVector& other = inc[1 - pos];
  const LatticeVector d = other - side;
  for (int a = 0; a <= n; ++a) {
    if (d == LatticeVector::basis(n, a)) return skyscraper_at(side, a);
  }
  // Read from the far side of a maximal facet: the skyscraper shifts by one.
  const LatticeVector back = side - other;
  for (int a = 0; a <= n; ++a) {
    if (back == LatticeVector::basis(n, a)) return skyscraper_at(other, a).shifted();
  }
  throw std::invalid_argument("skyscraper: facet is not maximal");
}

RankOneBrane weyl_act_brane(const WeylElement& g, const RankOneBrane& b) {
  return RankOneBrane(b.cells().acted(g), b.parity());
}

std::variant<RankOneBrane, BraneFailure> build_rank_one(const PermutohedronSet& cells, const FacePoset& window) {
  if (cells.is_finite()) {
    for (const auto& c : cells.cells()) {
      if ((c - window.center()).norm() > window.radius() - 1) {
        throw std::invalid_argument("build_rank_one: window too small to contain the set with margin");
      }
    }
  }
  RankOneBrane b(cells);
  for (const auto& f : window.faces()) {
    try {
      (void)b.at(f);
    } catch (const std::domain_error&) {
      return BraneFailure{f};
    }
  }
  return b;
}

StalkDims stalk(const RankOneBrane& g, const HoneycombFace& facet, const LatticeVector& side) {
  if (facet.codim() != 1) throw std::invalid_argument("stalk: not a facet");
  const int pos = facet.position_of(side);
  if (pos < 0) throw std::invalid_argument("stalk: side is not incident to the facet");
  const auto local = g.at(facet);
  StalkDims d;
  if (!local) return d;
  const int parity = (local->parity + (local->i == pos ? 0 : 1)) & 1;
  (parity ? d.odd : d.even) = 1;
  return d;
}

std::string to_string(HomMethod m) {
  return m == HomMethod::PosetTotalComplex ? "poset-total-complex" : "region-quiver";
}

const FacePoset& cached_window(const LatticeVector& center, int radius) {
  static std::mutex mutex;
  static std::map<std::pair<LatticeVector, int>, std::unique_ptr<FacePoset>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{center, radius}];
  if (!slot) slot = std::make_unique<FacePoset>(FacePoset::window(center, radius));
  return *slot;
}

namespace {

// Support of the source inside the window, with local data.
struct Support {
  std::vector<std::size_t> faces;               // window indices
  std::map<std::size_t, std::size_t> local;     // window index -> support index
  std::vector<IntervalObject> source;
  std::vector<std::optional<IntervalObject>> target;
  std::vector<LocalHomSpace> h;
};

Support support_of(const RankOneBrane& source, const RankOneBrane& target, const FacePoset& window) {
  Support s;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const auto& f = window.faces()[i];
    auto a = source.at(f);
    if (!a) continue;
    s.local.emplace(i, s.faces.size());
    s.faces.push_back(i);
    s.source.push_back(*a);
    auto b = target.at(f);
    s.target.push_back(b);
    s.h.push_back(b ? hom_intervals(*a, *b) : LocalHomSpace{});
  }
  return s;
}

// Whether the restriction h(alpha) -> h(beta) in the given parity is nonzero.
bool restriction_nonzero(const HoneycombFace& from, const HoneycombFace& to, IntervalObject a,
                         std::optional<IntervalObject> b, const IntervalObject& a_to,
                         const std::optional<IntervalObject>& b_to, int parity) {
  if (!b || !b_to) return false;
  std::vector<int> removed = removed_positions(from, to);
  std::sort(removed.rbegin(), removed.rend());
  bool alive = true;
  for (int k : removed) {
    if (alive && hom_intervals(a, *b).at(parity) != 0) {
      alive = restrict_hom(k, a, *b, parity);
    } else {
      alive = false;
    }
    auto ra = restrict(k, a);
    auto rb = restrict(k, *b);
    if (!ra) throw std::logic_error("global_hom: source restricts to zero inside its support");
    a = *ra;
    if (!rb) {
      b.reset();
      break;
    }
    b = *rb;
  }
  if (!(a == a_to)) throw std::logic_error("global_hom: source local objects are not restriction-compatible");
  if (!b) throw std::logic_error("global_hom: target local objects are not restriction-compatible");
  if (!(*b == *b_to)) throw std::logic_error("global_hom: target local objects are not restriction-compatible");
  return alive;
}

StalkDims total_complex(const Support& s, const FacePoset& window, GlobalHomResult& result) {
  const std::size_t m = s.faces.size();
  std::vector<std::vector<std::size_t>> above(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& c : cofaces(window.faces()[s.faces[i]])) {
      auto w = window.index_of(c);
      if (!w) continue;
      auto it = s.local.find(*w);
      if (it != s.local.end()) above[i].push_back(it->second);
    }
  }
  // Restriction maps along every comparable pair, per parity.
  std::map<std::pair<std::size_t, std::size_t>, std::array<bool, 2>> restr;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : above[i]) {
      std::array<bool, 2> r{};
      for (int e = 0; e < 2; ++e) {
        if (s.h[i].at(e) == 0) continue;
        r[e] = restriction_nonzero(window.faces()[s.faces[i]], window.faces()[s.faces[j]], s.source[i], s.target[i],
                                   s.source[j], s.target[j], e);
        if (r[e] && s.h[j].at(e) == 0) throw std::logic_error("global_hom: nonzero restriction into zero space");
      }
      restr.emplace(std::make_pair(i, j), r);
    }
  }
  // All strictly increasing chains.
  std::vector<std::vector<std::vector<std::size_t>>> chains;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t v) {
    cur.push_back(v);
    if (chains.size() < cur.size()) chains.resize(cur.size());
    chains[cur.size() - 1].push_back(cur);
    for (std::size_t w : above[v]) grow(w);
    cur.pop_back();
  };
  for (std::size_t v = 0; v < m; ++v) grow(v);
  result.chain_counts.clear();
  for (const auto& c : chains) result.chain_counts.push_back(c.size());

  StalkDims out;
  for (int e = 0; e < 2; ++e) {
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(chains.size());
    for (std::size_t p = 0; p < chains.size(); ++p) {
      for (const auto& c : chains[p]) {
        if (s.h[c.back()].at(e) != 0) index[p].emplace(c, index[p].size());
      }
    }
    std::vector<SparseMatrix> d;
    for (std::size_t p = 0; p + 1 < chains.size(); ++p) {
      SparseMatrix dp(index[p + 1].size(), index[p].size());
      for (const auto& [c, row] : index[p + 1]) {
        for (std::size_t i = 0; i <= p + 1; ++i) {
          std::vector<std::size_t> face(c);
          face.erase(face.begin() + static_cast<long>(i));
          auto it = index[p].find(face);
          if (it == index[p].end()) continue;
          const long sign = (i % 2) ? -1 : 1;
          if (i <= p) {
            dp.add(row, it->second, sign);
          } else if (restr.at({c[p], c[p + 1]})[e]) {
            dp.add(row, it->second, sign);
          }
        }
      }
      d.push_back(std::move(dp));
    }
    for (std::size_t p = 0; p < chains.size(); ++p) {
      const std::size_t dim = index[p].size();
      const SparseMatrix in = p == 0 ? SparseMatrix(dim, 0) : d[p - 1];
      const SparseMatrix outm = p < d.size() ? d[p] : SparseMatrix(0, dim);
      const std::size_t h = cohomology_dim(dim, in, outm);
      (((p + e) % 2) ? out.odd : out.even) += static_cast<int>(h);
    }
  }
  return out;
}

// Small dense helpers for the region quiver.
using Dense = std::vector<std::vector<Rational>>;

Dense dense_zero(std::size_t r, std::size_t c) { return Dense(r, std::vector<Rational>(c, Rational(0))); }

// Projection V -> V / span(rel), returned as a matrix (quotient dim x dim V).
Dense quotient_projection(std::size_t dim, const std::vector<std::vector<Rational>>& rel) {
  // Row-reduce the relation vectors.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
  for (auto v : rel) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] != 0) {
        const Rational f = v[pivots[r]];
        for (std::size_t c = 0; c < dim; ++c) v[c] -= f * rows[r][c];
      }
    }
    std::size_t p = 0;
    while (p < dim && v[p] == 0) ++p;
    if (p == dim) continue;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][p] != 0) {
        const Rational f = rows[r][p];
        for (std::size_t c = 0; c < dim; ++c) rows[r][c] -= f * v[c];
      }
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < dim; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
  }
  Dense proj = dense_zero(free.size(), dim);
  for (std::size_t c = 0; c < dim; ++c) {
    // Reduce the unit vector e_c modulo the relations, read free coordinates.
    std::vector<Rational> v(dim, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] != 0) {
        const Rational f = v[pivots[r]];
        for (std::size_t k = 0; k < dim; ++k) v[k] -= f * rows[r][k];
      }
    }
    for (std::size_t q = 0; q < free.size(); ++q) proj[q][c] = v[free[q]];
  }
  return proj;
}

StalkDims region_quiver(const RankOneBrane& source, const Support& s, const FacePoset& window,
                        GlobalHomResult& result) {
  if (source.n() > 3) throw MethodNotApplicable("region quiver: relations implemented for n <= 3");
  if (source.parity() != 0) throw MethodNotApplicable("region quiver: shifted source");
  // Vertices: facets of the support.
  std::map<std::size_t, std::size_t> vid;  // support index -> vertex
  std::vector<std::size_t> vertex_face;
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    if (window.faces()[s.faces[i]].codim() == 1) {
      vid.emplace(i, vertex_face.size());
      vertex_face.push_back(i);
    }
  }
  const std::size_t nv = vertex_face.size();
  auto support_index = [&](const HoneycombFace& f) -> std::optional<std::size_t> {
    auto w = window.index_of(f);
    if (!w) return std::nullopt;
    auto it = s.local.find(*w);
    if (it == s.local.end()) return std::nullopt;
    return it->second;
  };
  // Arrows: codimension-2 faces of the support, oriented cyclically.
  struct Arrow {
    std::size_t from, to;
  };
  std::vector<Arrow> arrows;
  std::map<std::size_t, std::size_t> arrow_of_face;
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    const HoneycombFace& g = window.faces()[s.faces[i]];
    if (g.codim() != 2) continue;
    const CyclicSet q = g.incident();
    // Facet G_k joins Q_{k-1} and Q_k; arrows run G_{k+1} -> G_k.
    std::vector<std::optional<std::size_t>> facet(3);
    int present = 0;
    for (int k = 0; k < 3; ++k) {
      auto si = support_index(HoneycombFace::from_cycle({q[(k + 2) % 3], q[k]}));
      if (si) {
        facet[k] = vid.at(*si);
        ++present;
      }
    }
    if (present != 2) throw std::logic_error("region quiver: codimension-2 face without two boundary facets");
    int missing = 0;
    while (facet[missing]) ++missing;
    const int from = (missing + 2) % 3;  // G_{k+1} -> G_k with k = missing + 1
    const int to = (missing + 1) % 3;
    arrow_of_face.emplace(i, arrows.size());
    arrows.push_back({*facet[from], *facet[to]});
  }
  // Topological order and initial vertex.
  std::vector<std::vector<std::size_t>> out_arrows(nv), in_arrows(nv);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    out_arrows[arrows[a].from].push_back(a);
    in_arrows[arrows[a].to].push_back(a);
  }
  std::vector<std::size_t> indeg(nv), order;
  for (std::size_t v = 0; v < nv; ++v) indeg[v] = in_arrows[v].size();
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < nv; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  if (ready.size() != 1) throw MethodNotApplicable("region quiver: no unique initial facet");
  const std::size_t init = ready.front();
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t a : out_arrows[v]) {
      if (--indeg[arrows[a].to] == 0) ready.push_back(arrows[a].to);
    }
  }
  if (order.size() != nv) throw MethodNotApplicable("region quiver: oriented cycle");
  // Commutativity relations around codimension-3 faces.
  struct Relation {
    std::size_t from, to;
    std::vector<std::size_t> p1, p2;  // arrow sequences
  };
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    const HoneycombFace& f = window.faces()[s.faces[i]];
    if (f.codim() < 3) continue;
    std::set<std::size_t> verts;
    std::vector<std::size_t> arr;
    bool complete = true;
    for (const auto& c : cofaces(f)) {
      auto si = support_index(c);
      if (!si) {
        if (window.index_of(c)) continue;
        complete = false;
        continue;
      }
      if (c.codim() == 1) verts.insert(vid.at(*si));
      if (c.codim() == 2) arr.push_back(arrow_of_face.at(*si));
    }
    if (!complete) continue;
    std::map<std::size_t, int> in_count, out_count;
    for (auto a : arr) {
      ++out_count[arrows[a].from];
      ++in_count[arrows[a].to];
    }
    std::vector<std::size_t> sources, sinks;
    for (auto v : verts) {
      if (in_count[v] + out_count[v] != 2) throw std::logic_error("region quiver: link of a face is not a cycle");
      if (in_count[v] == 0) sources.push_back(v);
      if (out_count[v] == 0) sinks.push_back(v);
    }
    if (sources.size() != 1 || sinks.size() != 1) {
      throw std::logic_error("region quiver: cycle around a face lacks a unique source and sink");
    }
    Relation rel{sources[0], sinks[0], {}, {}};
    std::vector<std::vector<std::size_t>> paths;
    for (auto first : arr) {
      if (arrows[first].from != rel.from) continue;
      std::vector<std::size_t> path{first};
      while (arrows[path.back()].to != rel.to) {
        std::size_t next = arr.size();
        for (auto a : arr) {
          if (arrows[a].from == arrows[path.back()].to) next = a;
        }
        if (next == arr.size()) throw std::logic_error("region quiver: broken path around a face");
        path.push_back(next);
      }
      paths.push_back(path);
    }
    if (paths.size() != 2) throw std::logic_error("region quiver: expected two paths around a face");
    rel.p1 = paths[0];
    rel.p2 = paths[1];
    relations.push_back(rel);
  }
  // Projective representation at the initial vertex: paths modulo relations.
  std::vector<std::size_t> pdim(nv, 0);
  std::vector<Dense> arrow_map(arrows.size());  // pdim[to] x pdim[from]
  pdim[init] = 1;
  auto path_image = [&](const std::vector<std::size_t>& path, std::size_t upto, const std::vector<Rational>& x) {
    std::vector<Rational> v = x;
    for (std::size_t k = 0; k < upto; ++k) {
      const Dense& m = arrow_map[path[k]];
      std::vector<Rational> w(pdim[arrows[path[k]].to], Rational(0));
      for (std::size_t r = 0; r < w.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) w[r] += m[r][c] * v[c];
      }
      v = std::move(w);
    }
    return v;
  };
  for (std::size_t v : order) {
    if (v == init) continue;
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t a : in_arrows[v]) {
      offset.push_back(total);
      total += pdim[arrows[a].from];
    }
    auto embed = [&](std::size_t arrow, const std::vector<Rational>& x) {
      std::vector<Rational> out(total, Rational(0));
      const auto pos = std::find(in_arrows[v].begin(), in_arrows[v].end(), arrow) - in_arrows[v].begin();
      for (std::size_t c = 0; c < x.size(); ++c) out[offset[pos] + c] = x[c];
      return out;
    };
    std::vector<std::vector<Rational>> rel_vectors;
    for (const auto& rel : relations) {
      if (rel.to != v) continue;
      for (std::size_t b = 0; b < pdim[rel.from]; ++b) {
        std::vector<Rational> x(pdim[rel.from], Rational(0));
        x[b] = 1;
        auto y1 = embed(rel.p1.back(), path_image(rel.p1, rel.p1.size() - 1, x));
        auto y2 = embed(rel.p2.back(), path_image(rel.p2, rel.p2.size() - 1, x));
        for (std::size_t c = 0; c < total; ++c) y1[c] -= y2[c];
        rel_vectors.push_back(std::move(y1));
      }
    }
    const Dense proj = quotient_projection(total, rel_vectors);
    pdim[v] = proj.size();
    for (std::size_t k = 0; k < in_arrows[v].size(); ++k) {
      const std::size_t a = in_arrows[v][k];
      Dense m = dense_zero(pdim[v], pdim[arrows[a].from]);
      for (std::size_t r = 0; r < pdim[v]; ++r) {
        for (std::size_t c = 0; c < pdim[arrows[a].from]; ++c) m[r][c] = proj[r][offset[k] + c];
      }
      arrow_map[a] = std::move(m);
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (pdim[v] != 1) throw MethodNotApplicable("region quiver: source is not the projective at the initial facet");
  }
  for (const auto& m : arrow_map) {
    if (m[0][0] == 0) throw MethodNotApplicable("region quiver: projective has a vanishing arrow");
  }
  const HoneycombFace& init_face = window.faces()[s.faces[vertex_face[init]]];
  const LatticeVector init_side = init_face.incident()[s.source[vertex_face[init]].i];
  if (!(s.source[vertex_face[init]].parity == 0)) throw MethodNotApplicable("region quiver: shifted source");

  // Target representation: stalks read from the side inside the source set.
  std::vector<StalkDims> gv(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t si = vertex_face[v];
    const HoneycombFace& f = window.faces()[s.faces[si]];
    const LatticeVector side = f.incident()[s.source[si].i];
    StalkDims d;
    if (s.target[si]) {
      const int parity = (s.target[si]->parity + (s.target[si]->i == s.source[si].i ? 0 : 1)) & 1;
      (parity ? d.odd : d.even) = 1;
    }
    (void)side;
    gv[v] = d;
  }
  // Hom of representations: sum over vertices -> sum over arrows, per parity.
  StalkDims out;
  for (int e = 0; e < 2; ++e) {
    std::vector<std::size_t> col(nv, SIZE_MAX);
    std::size_t dim = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if ((e ? gv[v].odd : gv[v].even) == 1) col[v] = dim++;
    }
    SparseMatrix d(arrows.size(), dim);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const std::size_t u = arrows[a].from, w = arrows[a].to;
      const bool gu = col[u] != SIZE_MAX, gw = col[w] != SIZE_MAX;
      const StalkDims& su = gv[u];
      const StalkDims& sw = gv[w];
      if (su.total() == 1 && sw.total() == 1 && !(su == sw)) {
        throw std::logic_error("region quiver: target stalk parities disagree along an arrow");
      }
      // (d phi)_a = G_a phi_u - phi_w F_a, with G_a = 1 where both stalks live.
      if (gu && gw) d.add(a, col[u], 1);
      if (gw) d.add(a, col[w], -arrow_map[a][0][0]);
    }
    const int h0 = static_cast<int>(dim - rank(d));
    (e ? out.odd : out.even) += h0;
  }
  result.quiver_vertices = nv;
  result.quiver_arrows = arrows.size();
  result.quiver_relations = relations.size();
  (void)init_side;
  return out;
}

}  // namespace

GlobalHomResult global_hom_window(const RankOneBrane& source, const RankOneBrane& target, const FacePoset& window,
                                  HomMethod method) {
  if (source.n() != target.n() || source.n() != window.n()) throw std::invalid_argument("global_hom: dimension mismatch");
  GlobalHomResult r;
  r.source = source.describe();
  r.target = target.describe();
  r.method = method;
  r.window_center = window.center();
  r.window_radius = window.radius();
  const PermutohedronSet& cells = source.cells();
  const int n = source.n();
  const bool sky = !cells.is_finite() && subset_size(cells.directions()) == n;
  r.validated = cells.is_finite() || sky;
  const Support s = support_of(source, target, window);
  r.support_faces = s.faces.size();
  if (method == HomMethod::PosetTotalComplex) {
    r.dims = total_complex(s, window, r);
  } else {
    r.dims = region_quiver(source, s, window, r);
  }
  return r;
}

GlobalHomResult global_hom(const RankOneBrane& source, const RankOneBrane& target, const LatticeVector& center,
                           int radius, HomMethod method, bool check_margin) {
  GlobalHomResult r = global_hom_window(source, target, cached_window(center, radius), method);
  if (check_margin) {
    const GlobalHomResult wider = global_hom_window(source, target, cached_window(center, radius + 1), method);
    if (!(wider.dims == r.dims)) {
      throw MarginError("global_hom: result changes when the window grows from radius " + std::to_string(radius));
    }
  }
  return r;
}

XMap x_map(int i, const RankOneBrane& b, const FacePoset& window) {
  const PermutohedronSet& cells = b.cells();
  if (cells.is_finite()) throw std::invalid_argument("x_map: brane must be of the form B_{P,J}");
  if (cells.directions() == 0) throw std::invalid_argument("x_map: J is empty");
  if (!subset_contains(cells.directions(), i)) throw std::invalid_argument("x_map: i is not a direction of J");
  XMap x{i, b.twisted(LatticeVector::basis(b.n(), i)), b, {}, {}};
  for (const auto& f : window.faces()) {
    if (f.codim() != 1) continue;
    const LatticeVector side = f.incident()[0];
    const StalkDims s = stalk(x.source, f, side);
    const StalkDims t = stalk(x.target, f, side);
    x.facets.push_back(f);
    x.ranks.push_back(s.total() == 1 && s == t ? 1 : 0);
  }
  return x;
}

bool cone_check(int i, const LatticeVector& base, Subset directions, const FacePoset& window) {
  const XMap x = x_map(i, brane(base, directions), window);
  const RankOneBrane expected = brane(base, directions & ~(Subset(1) << i));
  for (std::size_t k = 0; k < x.facets.size(); ++k) {
    const auto& f = x.facets[k];
    const LatticeVector side = f.incident()[0];
    const StalkDims s = stalk(x.source, f, side);
    const StalkDims t = stalk(x.target, f, side);
    // cone(X -> Y) = X[1] + Y, minus the pair cancelled by the stalk map.
    StalkDims c{s.odd + t.even, s.even + t.odd};
    if (x.ranks[k]) {
      c.even -= 1;
      c.odd -= 1;
    }
    if (!(c == stalk(expected, f, side))) return false;
  }
  return true;
}

bool commuting_square_check(int i, int k, const LatticeVector& base, Subset directions, const FacePoset& window) {
  const int n = base.n();
  const RankOneBrane b = brane(base, directions);
  const RankOneBrane bi = b.twisted(LatticeVector::basis(n, i));
  const RankOneBrane bk = b.twisted(LatticeVector::basis(n, k));
  const XMap xi = x_map(i, b, window);
  const XMap xk = x_map(k, b, window);
  const XMap xi_k = x_map(i, bk, window);
  const XMap xk_i = x_map(k, bi, window);
  for (std::size_t f = 0; f < xi.facets.size(); ++f) {
    const int path1 = xk.ranks[f] * xi_k.ranks[f];
    const int path2 = xi.ranks[f] * xk_i.ranks[f];
    if (path1 != path2) return false;
  }
  return true;
}

}  // namespace hm
