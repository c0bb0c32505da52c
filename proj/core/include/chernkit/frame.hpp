#pragma once

#include "chernkit/tensor.hpp"

namespace chernkit {

/// Columns of the returned E are the components e_a = sum_i E(i, a) d/dz_i of
/// a g-unitary frame: sum_{i,j} E(i,a) conj(E(j,b)) g_{i jbar} = delta_ab.
///
/// E = L^{-H} where conj(g) = L L^H is the Cholesky factorisation, so E is
/// upper triangular with a positive real diagonal and depends only on g.
/// Throws DomainError if g is not positive definite.
Matrix orthonormal_frame(const Matrix& g);

/// Components of a (1,1)-tensor a_{i jbar} in the frame E:
/// a'_{a bbar} = sum E(i,a) conj(E(j,b)) a_{i jbar}. For E from
/// orthonormal_frame(g), frame_components(g, E) is the identity.
Matrix frame_components(const Matrix& a, const Matrix& E);

/// Components of X = sum X^i d/dz_i in the frame E (solves E Z = X).
Vector frame_coordinates(const Vector& X, const Matrix& E);

}  // namespace chernkit
