#pragma once

#include "honeymirror/localcat.hpp"

namespace hm::oracle {

/// The simple object s_k realized as a complex of projectives under the
/// linearization cutting at `cut`.
model::Complex simple_component(int size, int k, int cut);

/// s_{i,j} assembled as a twisted complex of simple components joined by the
/// degree-one classes between consecutive simples, with higher corrections
/// solved from the Maurer-Cartan equation.
model::Complex twisted_interval(const IntervalObject& a, int cut);

/// Hom cohomology dimensions computed in the projective model.
LocalHomSpace brute_hom(const IntervalObject& a, const IntervalObject& b, int cut);

}  // namespace hm::oracle
