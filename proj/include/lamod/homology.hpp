#pragma once

#include "lamod/modular.hpp"

namespace lamod {

/// Exterior derivative of a differential form (cotangent frame).
Multivector de_rham(const Multivector& form);

/// Koszul-Brylinski boundary i_pi d - d i_pi; lowers form degree by one.
Multivector koszul_boundary(const Multivector& pi, const Multivector& form);

/// delta'(V (x) mu) = [pi, V] (x) mu + (-1)^k V ^ D mu for mu = density * dx_1 ^ ... ^ dx_n,
/// returned as the tangent multivector W with result W (x) dx_1 ^ ... ^ dx_n.
Multivector delta_prime(const AlgebroidSpec& cotangent, const Multivector& v, const Scalar& density = 1);

/// tau(V (x) mu) = i_V mu.
Multivector tau_map(const Multivector& v, const Scalar& density = 1);

/// theta_0 with theta_0(alpha) mu = D_alpha mu.
Multivector theta_zero(const AlgebroidSpec& cotangent, const Scalar& density = 1);

/// b V with (b V) contracted into mu0 equal to (-1)^k d(V contracted into mu0),
/// for mu0 = c dx_1 ^ ... ^ dx_n with c a nonzero constant.
Multivector b_operator(const Scalar& volume_constant, const Multivector& v);

}  // namespace lamod
