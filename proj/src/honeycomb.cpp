#include "honeymirror/honeycomb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hm {

bool cyclic_equal(const CyclicSet& a, const CyclicSet& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(i + shift) % b.size()];
    if (same) return true;
  }
  return false;
}

HoneycombFace::HoneycombFace(const LatticeVector& start, const std::vector<Subset>& blocks) {
  const int n = start.n();
  if (blocks.size() < 2) throw std::invalid_argument("HoneycombFace: need at least two blocks");
  Subset seen = 0;
  for (Subset b : blocks) {
    if (b == 0) throw std::invalid_argument("HoneycombFace: empty block");
    if (b & seen) throw std::invalid_argument("HoneycombFace: blocks overlap");
    seen |= b;
  }
  if (seen != full_subset(n)) throw std::invalid_argument("HoneycombFace: blocks do not cover [n+1]");
  const std::size_t k = blocks.size();
  std::size_t anchor = 0;
  while (!subset_contains(blocks[anchor], n)) ++anchor;
  LatticeVector p = start;
  for (std::size_t i = 1; i <= anchor; ++i) p = p + LatticeVector::lambda(n, blocks[i]);
  base_ = p;
  blocks_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) blocks_.push_back(blocks[(anchor + i) % k]);
}

HoneycombFace HoneycombFace::from_cycle(const CyclicSet& perms) {
  if (perms.size() < 2) throw std::invalid_argument("from_cycle: need at least two permutohedra");
  const int n = perms[0].n();
  const std::size_t k = perms.size();
  std::vector<Subset> blocks(k);
  for (std::size_t i = 0; i < k; ++i) {
    const LatticeVector d = perms[i] - perms[(i + k - 1) % k];
    Subset b = 0;
    for (int c = 0; c <= n; ++c) {
      if (d[c] > 1) throw std::invalid_argument("from_cycle: step is not lambda_I");
      if (d[c] == 1) b |= Subset(1) << c;
    }
    blocks[i] = b;
  }
  return HoneycombFace(perms[0], blocks);
}

CyclicSet HoneycombFace::incident() const {
  CyclicSet out{base_};
  for (std::size_t i = 1; i < blocks_.size(); ++i) out.push_back(out.back() + LatticeVector::lambda(n(), blocks_[i]));
  return out;
}

int HoneycombFace::position_of(const LatticeVector& p) const {
  const CyclicSet inc = incident();
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (inc[i] == p) return static_cast<int>(i);
  }
  return -1;
}

bool HoneycombFace::operator<(const HoneycombFace& o) const {
  if (base_ != o.base_) return base_ < o.base_;
  return blocks_ < o.blocks_;
}

std::string HoneycombFace::str() const {
  std::string s = base_.str() + "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += "|";
    for (int e : subset_elements(blocks_[i])) s += std::to_string(e);
  }
  return s + "]";
}

CyclicSet cyclic_order_at(const HoneycombFace& face) { return face.incident(); }

HoneycombFace facet_for_subset(Subset I, const LatticeVector& base) {
  const int n = base.n();
  if (I == 0 || I == full_subset(n)) throw std::invalid_argument("facet_for_subset: I must be nonempty and proper");
  if (I & ~full_subset(n)) throw std::invalid_argument("facet_for_subset: subset out of range");
  return HoneycombFace::from_cycle({base, base + LatticeVector::lambda(n, I)});
}

HoneycombFace act(const WeylElement& g, const HoneycombFace& face) {
  CyclicSet perms = face.incident();
  for (auto& p : perms) p = g.apply(p);
  return HoneycombFace::from_cycle(perms);
}

std::vector<HoneycombFace> up_covers(const HoneycombFace& face) {
  std::vector<HoneycombFace> out;
  if (face.codim() < 2) return out;
  const CyclicSet inc = face.incident();
  for (std::size_t k = 0; k < inc.size(); ++k) {
    CyclicSet kept;
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (i != k) kept.push_back(inc[i]);
    }
    out.push_back(HoneycombFace::from_cycle(kept));
  }
  return out;
}

std::vector<HoneycombFace> down_covers(const HoneycombFace& face) {
  std::vector<HoneycombFace> out;
  const int n = face.n();
  const CyclicSet inc = face.incident();
  const auto& blocks = face.blocks();
  const std::size_t k = inc.size();
  for (std::size_t b = 0; b < k; ++b) {
    const Subset B = blocks[b];
    const LatticeVector& prev = inc[(b + k - 1) % k];
    for (Subset C = (B - 1) & B; C != 0; C = (C - 1) & B) {
      CyclicSet perms;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == b) perms.push_back(prev + LatticeVector::lambda(n, C));
        perms.push_back(inc[i]);
      }
      out.push_back(HoneycombFace::from_cycle(perms));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HoneycombFace> cofaces(const HoneycombFace& face) {
  std::vector<HoneycombFace> out;
  const CyclicSet inc = face.incident();
  const std::size_t k = inc.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    CyclicSet kept;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) kept.push_back(inc[i]);
    }
    out.push_back(HoneycombFace::from_cycle(kept));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void ordered_partitions_rec(Subset rest, std::vector<Subset>& prefix, std::vector<std::vector<Subset>>& out) {
  if (rest == 0) {
    out.push_back(prefix);
    return;
  }
  for (Subset first = rest; first != 0; first = (first - 1) & rest) {
    prefix.push_back(first);
    ordered_partitions_rec(rest & ~first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Subset>> ordered_partitions(Subset s) {
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> prefix;
  ordered_partitions_rec(s, prefix, out);
  return out;
}

}  // namespace

std::vector<HoneycombFace> subfaces(const HoneycombFace& face, int dim) {
  const int n = face.n();
  const std::size_t target_blocks = static_cast<std::size_t>(n + 1 - dim);
  const auto& blocks = face.blocks();
  const CyclicSet inc = face.incident();
  std::vector<std::vector<std::vector<Subset>>> choices;
  for (Subset B : blocks) choices.push_back(ordered_partitions(B));
  std::vector<HoneycombFace> out;
  std::vector<Subset> refined;
  // Walk the cycle starting from the permutohedron before B_0.
  const LatticeVector start = inc.back();
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (refined.size() > target_blocks) return;
    if (b == blocks.size()) {
      if (refined.size() != target_blocks) return;
      CyclicSet perms;
      LatticeVector p = start;
      for (Subset c : refined) {
        p = p + LatticeVector::lambda(n, c);
        perms.push_back(p);
      }
      out.push_back(HoneycombFace::from_cycle(perms));
      return;
    }
    for (const auto& part : choices[b]) {
      refined.insert(refined.end(), part.begin(), part.end());
      rec(b + 1);
      refined.resize(refined.size() - part.size());
    }
  };
  if (dim >= 0 && dim <= face.dim()) rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_coface(const HoneycombFace& lower, const HoneycombFace& upper) {
  if (upper.codim() >= lower.codim()) return false;
  const CyclicSet inc = lower.incident();
  CyclicSet kept;
  const CyclicSet up = upper.incident();
  for (const auto& p : inc) {
    if (std::find(up.begin(), up.end(), p) != up.end()) kept.push_back(p);
  }
  if (kept.size() != up.size()) return false;
  return HoneycombFace::from_cycle(kept) == upper;
}

std::vector<int> removed_positions(const HoneycombFace& from, const HoneycombFace& to) {
  if (!is_coface(from, to)) throw std::invalid_argument("removed_positions: not a coface");
  const CyclicSet inc = from.incident();
  const CyclicSet up = to.incident();
  std::vector<int> out;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (std::find(up.begin(), up.end(), inc[i]) == up.end()) out.push_back(static_cast<int>(i));
  }
  return out;
}

PermutohedronCensus build_permutohedron(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("build_permutohedron: n must be in [1, 4]");
  PermutohedronCensus c;
  c.n = n;
  c.counts_by_dim.assign(n, 0);
  const LatticeVector origin = LatticeVector::zero(n);
  for (const auto& parts : ordered_partitions(full_subset(n))) {
    if (parts.size() < 2) continue;
    CyclicSet perms{origin};
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) perms.push_back(perms.back() + LatticeVector::lambda(n, parts[i]));
    c.faces.push_back(HoneycombFace::from_cycle(perms));
  }
  std::sort(c.faces.begin(), c.faces.end());
  for (const auto& f : c.faces) {
    ++c.counts_by_dim[f.dim()];
    std::vector<int> sizes;
    long long verts = 1;
    for (Subset b : f.blocks()) {
      const int s = subset_size(b);
      sizes.push_back(s);
      for (int k = 2; k <= s; ++k) verts *= k;
    }
    std::sort(sizes.begin(), sizes.end());
    ++c.types[sizes];
    c.vertex_counts.push_back(verts);
  }
  return c;
}

FacePoset FacePoset::window(int n, int radius) { return window(LatticeVector::zero(n), radius); }

FacePoset FacePoset::window(const LatticeVector& center, int radius) {
  if (radius < 1) throw std::invalid_argument("FacePoset::window: radius must be at least 1");
  FacePoset p;
  p.center_ = center;
  p.radius_ = radius;
  const int n = center.n();
  std::vector<std::vector<Subset>> anchored;
  for (auto& parts : ordered_partitions(full_subset(n))) {
    if (parts.size() >= 2 && subset_contains(parts[0], n)) anchored.push_back(std::move(parts));
  }
  std::set<HoneycombFace> found;
  for (const auto& base : lattice_ball(center, radius)) {
    for (const auto& parts : anchored) {
      HoneycombFace f(base, parts);
      if (p.contains(f)) found.insert(f);
    }
  }
  p.faces_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < p.faces_.size(); ++i) p.index_.emplace(p.faces_[i], i);
  p.up_.resize(p.faces_.size());
  p.down_.resize(p.faces_.size());
  for (std::size_t i = 0; i < p.faces_.size(); ++i) {
    for (const auto& u : up_covers(p.faces_[i])) {
      if (auto j = p.index_of(u)) {
        p.up_[i].push_back(*j);
        p.down_[*j].push_back(i);
      }
    }
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  for (auto& v : p.down_) std::sort(v.begin(), v.end());
  return p;
}

bool FacePoset::contains(const HoneycombFace& f) const {
  if (f.n() != n()) return false;
  for (const auto& q : f.incident()) {
    if (!contains_point(q)) return false;
  }
  return true;
}

std::optional<std::size_t> FacePoset::index_of(const HoneycombFace& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FacePoset::cover_count() const {
  std::size_t total = 0;
  for (const auto& u : up_) total += u.size();
  return total;
}

bool FacePoset::interior(std::size_t i) const {
  for (const auto& q : faces_.at(i).incident()) {
    if ((q - center_).norm() > radius_ - 1) return false;
  }
  return true;
}

AbstractPoset link_poset(const HoneycombFace& face, const FacePoset& poset) {
  auto start = poset.index_of(face);
  if (!start) throw std::invalid_argument("link_poset: face not in window");
  // Upward closure through the stored cover relations.
  std::vector<std::size_t> elems;
  std::map<std::size_t, std::size_t> local;
  std::vector<std::size_t> stack(poset.up()[*start]);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (local.count(v)) continue;
    local.emplace(v, elems.size());
    elems.push_back(v);
    for (auto w : poset.up()[v]) stack.push_back(w);
  }
  AbstractPoset out;
  out.size = elems.size();
  out.less.assign(out.size, std::vector<bool>(out.size, false));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    std::vector<std::size_t> st(poset.up()[elems[a]]);
    while (!st.empty()) {
      const std::size_t v = st.back();
      st.pop_back();
      const std::size_t b = local.at(v);
      if (out.less[a][b]) continue;
      out.less[a][b] = true;
      for (auto w : poset.up()[v]) st.push_back(w);
    }
  }
  return out;
}

AbstractPoset skeleton_poset(int m) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1u << (m + 1)); ++s) {
    const int k = std::popcount(s);
    if (k >= 1 && k <= m - 1) subsets.push_back(s);
  }
  AbstractPoset out;
  out.size = subsets.size();
  out.less.assign(out.size, std::vector<bool>(out.size, false));
  for (std::size_t a = 0; a < out.size; ++a) {
    for (std::size_t b = 0; b < out.size; ++b) {
      out.less[a][b] = a != b && (subsets[a] & subsets[b]) == subsets[a];
    }
  }
  return out;
}

bool posets_isomorphic(const AbstractPoset& a, const AbstractPoset& b) {
  if (a.size != b.size) return false;
  const std::size_t n = a.size;
  auto signature = [](const AbstractPoset& p, std::size_t i) {
    std::size_t below = 0, above = 0;
    for (std::size_t j = 0; j < p.size; ++j) {
      below += p.less[j][i];
      above += p.less[i][j];
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sa[i] != sb[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a.less[i][k] == b.less[j][map[k]] && a.less[k][i] == b.less[map[k]][j];
      }
      if (!ok) continue;
      used[j] = true;
      map[i] = j;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(0);
}

bool is_arboreal_link(const HoneycombFace& face, const FacePoset& poset) {
  return posets_isomorphic(link_poset(face, poset), skeleton_poset(face.codim()));
}

RationalPoint vertex_position(const HoneycombFace& vertex) {
  if (vertex.dim() != 0) throw std::invalid_argument("vertex_position: not a vertex");
  const int n = vertex.n();
  std::vector<std::vector<Rational>> q;
  std::vector<Rational> sq;
  for (const auto& p : vertex.incident()) {
    q.push_back(sum_zero_coords(realize(p)));
    Rational s = 0;
    for (const auto& c : q.back()) s += c * c;
    sq.push_back(s);
  }
  const std::size_t dim = static_cast<std::size_t>(n + 1);
  SparseMatrix m(dim, dim);
  std::vector<Rational> rhs(dim, Rational(0));
  for (std::size_t c = 0; c < dim; ++c) m.add(0, c, 1);
  for (std::size_t k = 1; k < q.size(); ++k) {
    for (std::size_t c = 0; c < dim; ++c) m.add(k, c, 2 * (q[k][c] - q[0][c]));
    rhs[k] = sq[k] - sq[0];
  }
  auto x = solve(m, rhs);
  if (!x || rank(m) != dim) throw std::logic_error("vertex_position: degenerate vertex");
  return RationalPoint::from_lift(std::move(*x));
}

RationalPoint realize_face_center(const HoneycombFace& face) {
  const auto verts = subfaces(face, 0);
  std::vector<Rational> acc(face.n() + 1, Rational(0));
  for (const auto& v : verts) {
    const auto p = vertex_position(v);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p.coords[i];
  }
  for (auto& x : acc) x /= static_cast<long>(verts.size());
  return RationalPoint::from_lift(std::move(acc));
}

std::vector<double> embed_orthonormal(const RationalPoint& p) {
  const auto y = sum_zero_coords(p);
  const int n = p.n();
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int i = 0; i < k; ++i) s += y[i];
    s -= Rational(k) * y[k];
    out.push_back(s.get_d() / std::sqrt(static_cast<double>(k) * (k + 1)));
  }
  return out;
}

}  // namespace hm
