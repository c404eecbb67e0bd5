#pragma once

// Independent brute-force reference computations shared by the unit tests and
// the acceptance binary.

#include "weylgrowth/rational.hpp"
#include "weylgrowth/root_system.hpp"

#include <vector>

namespace oracle {

using weylgrowth::RatVec;
using weylgrowth::Rational;
using weylgrowth::RootSystem;
using weylgrowth::WeylElement;

// lambda in conv(W mu) iff lambda(w v) <= mu(v) for every w and every extremal ray v of a_+.
inline bool conv_hull_by_enumeration(const RootSystem& rs, const std::vector<WeylElement>& group, const RatVec& lambda,
                                     const RatVec& mu) {
  for (const auto& w : group) {
    const auto act = rs.vector_action(w.matrix);
    for (const auto& v : rs.chamber_rays())
      if (weylgrowth::dot(lambda, act * v) > weylgrowth::dot(mu, v)) return false;
  }
  return true;
}

}  // namespace oracle
