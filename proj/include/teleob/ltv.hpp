#pragma once

#include "teleob/fuzzy.hpp"
#include "teleob/types.hpp"

namespace teleob {

/// Forward-Euler discretization of the blended dynamics with state X = [q; v]:
///   X(k+1) = A X(k) + B u(k) + Fm lambda(k),  y(k) = Cout X(k),  u(k) = tau(k) - F(k).
struct LtvMatrices {
  Mat A;     // 2n x 2n
  Mat B;     // 2n x n
  Mat Cout;  // 2n x 2n
  Mat Fm;    // 2n x n
  Vec u_offset;  // F(k)
  Vec dF;        // half widths, kept for the force observer
};

LtvMatrices assemble_ltv(const BlendedDynamics& bd, double dt, double condition_cap = 1e8);

}  // namespace teleob
