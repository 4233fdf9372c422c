#include "localcat_oracle.hpp"

#include <stdexcept>

namespace hm::oracle {

model::Complex simple_component(int size, int k, int cut) {
  const int r = size - 1;
  const int x = ((k - cut) % size + size) % size;
  if (x == 0) {
    model::Complex c;
    c.r = r;
    c.summands.push_back({1, 1});
    c.d = model::zero_matrix(1, 1);
    return c;
  }
  return model::module_complex(IntervalModule{r, x, x, 0});
}

model::Complex twisted_interval(const IntervalObject& a, int cut) {
  const int size = a.size;
  const int len = a.length();
  std::vector<model::Complex> parts;
  for (int t = 0; t < len; ++t) parts.push_back(simple_component(size, (a.i + t) % size, cut));
  std::vector<std::vector<model::Matrix>> tw(len, std::vector<model::Matrix>(len));
  for (int t = 0; t + 1 < len; ++t) {
    const auto alpha = model::hom_basis(parts[t], parts[t + 1], 1);
    if (alpha.size() != 1) throw std::logic_error("oracle: degree-one class between simples is not unique");
    tw[t][t + 1] = alpha[0].m;
  }
  for (int l = 2; l < len; ++l) {
    for (int t = 0; t + l < len; ++t) {
      const int e = t + l;
      model::Matrix obstruction = model::zero_matrix(parts[e].summands.size(), parts[t].summands.size());
      for (int u = t + 1; u < e; ++u) obstruction = model::add(obstruction, model::multiply(tw[u][e], tw[t][u]));
      model::Morphism g{0, model::add(model::zero_matrix(obstruction.size(), obstruction[0].size()), obstruction, -1)};
      auto x = model::solve_boundary(parts[t], parts[e], g);
      if (!x) throw std::logic_error("oracle: Maurer-Cartan equation has no solution");
      tw[t][e] = x->m;
    }
  }
  model::Complex c = model::twisted_sum(parts, tw);
  model::check_complex(c);
  return a.parity ? model::shifted(c) : c;
}

LocalHomSpace brute_hom(const IntervalObject& a, const IntervalObject& b, int cut) {
  const auto ca = twisted_interval(a, cut);
  const auto cb = twisted_interval(b, cut);
  return LocalHomSpace{model::hom_dim(ca, cb, 0), model::hom_dim(ca, cb, 1)};
}

}  // namespace hm::oracle
