#pragma once

#include "pu/params.hpp"
#include "pu/states.hpp"

namespace pu {

/// Change of variables from the decoupled chart to the fourth-order chart:
///   w1 = r1 - r2,                w2 = d(w1)/dt,
///   w3 = -omega1^2 r1 + omega2^2 r2,   w4 = d(w3)/dt.
template <typename Scalar>
BasicKinematicState<Scalar> w_from_r(const BasicDecoupledState<Scalar>& s,
                                     const BasicParams<Scalar>& p) {
  const Scalar o1s = p.omega1_sq();
  const Scalar o2s = p.omega2_sq();
  return {s.r1 - s.r2,
          s.r1dot - s.r2dot,
          -o1s * s.r1 + o2s * s.r2,
          -o1s * s.r1dot + o2s * s.r2dot};
}

/// Inverse change of variables, obtained by solving the 2x2 system in
/// (r1, r2); nonsingular because omega1 > omega2.
template <typename Scalar>
BasicDecoupledState<Scalar> r_from_w(const BasicKinematicState<Scalar>& s,
                                     const BasicParams<Scalar>& p) {
  const Scalar o1s = p.omega1_sq();
  const Scalar o2s = p.omega2_sq();
  const Scalar denom = o2s - o1s;
  const Scalar r1 = (s.w3 + o2s * s.w1) / denom;
  const Scalar r1dot = (s.w4 + o2s * s.w2) / denom;
  return {r1, r1dot, r1 - s.w1, r1dot - s.w2};
}

}  // namespace pu
