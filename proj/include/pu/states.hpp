#pragma once

#include "pu/types.hpp"

namespace pu {

/// Fourth-order chart: the coordinate z and its first three time derivatives,
/// written as w1..w4.
template <typename Scalar = double>
struct BasicKinematicState {
  Scalar w1;  // z
  Scalar w2;  // dz/dt
  Scalar w3;  // d2z/dt2
  Scalar w4;  // d3z/dt3

  static BasicKinematicState from_vector(const Vector4<Scalar>& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  Vector4<Scalar> vector() const { return {w1, w2, w3, w4}; }
};

/// Decoupled chart: the two oscillator coordinates and their velocities.
template <typename Scalar = double>
struct BasicDecoupledState {
  Scalar r1;
  Scalar r1dot;
  Scalar r2;
  Scalar r2dot;

  static BasicDecoupledState from_vector(const Vector4<Scalar>& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  Vector4<Scalar> vector() const { return {r1, r1dot, r2, r2dot}; }
};

/// Canonical phase point of the decoupled oscillator pair; the momenta
/// coincide with the velocities.
template <typename Scalar = double>
struct BasicDecoupledPhase {
  Scalar r1;
  Scalar r2;
  Scalar p1;
  Scalar p2;

  static BasicDecoupledPhase from_vector(const Vector4<Scalar>& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  Vector4<Scalar> vector() const { return {r1, r2, p1, p2}; }
};

/// Canonical phase point of the indefinite two-field Hamiltonian.
template <typename Scalar = double>
struct BasicGhostPhase {
  Scalar z;
  Scalar y;
  Scalar pz;
  Scalar py;

  static BasicGhostPhase from_vector(const Vector4<Scalar>& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  Vector4<Scalar> vector() const { return {z, y, pz, py}; }
};

using KinematicState = BasicKinematicState<double>;
using DecoupledState = BasicDecoupledState<double>;
using DecoupledPhase = BasicDecoupledPhase<double>;
using GhostPhase = BasicGhostPhase<double>;

}  // namespace pu
