#pragma once

#include <cstdint>
#include <vector>

#include "chowbg/graded.hpp"

namespace chowbg {

/// The functor A -> F_p A computing the Chow groups of the cyclic product
/// Z^p X = X^p / (Z/p) from those of X, for X cut into open subsets of
/// affine spaces with split-injective cycle map.
///
/// Given A = sum (Z/a_i) e^i with a_i zero or a prime power, let S be the
/// indices with a_i zero or a power of p and dim e^i > 0. Then F_p A is
///
///   sum over Z/p-orbits of {1..n}^p minus the diagonals over S of
///       Z/gcd(a_{i_1}, ..., a_{i_p}) e^{i_1} * ... * e^{i_p}
///   + sum over i in S of Z/(p a_i) gamma(e^i)        in dimension p dim e^i
///   + sum over i in S, dim e^i < j < p dim e^i of Z/p alpha^j(e^i).

/// Dimension-graded version. `a` must be Dim graded with finite ambient d;
/// the result has ambient p d. If `a` is authoritative in every dimension
/// the result is too; otherwise the input window width is kept.
GradedAbelianGroup cyclic_power_dim(const GradedAbelianGroup& a,
                                    std::int64_t p);

/// Codimension-graded stable version: the ambient dimension is taken to
/// infinity. The alpha range for a generator of codegree c becomes every
/// codegree t >= p c + 1, truncated at the validity bound, which is kept.
/// On Z in codegree 0 this yields Z[x]/(p x), the Chow ring of B(Z/p).
GradedAbelianGroup cyclic_power_codim(const GradedAbelianGroup& a,
                                      std::int64_t p);

/// Burnside count of tensor-orbit summands: (n^p + (p-1) n) / p - s, where
/// s is the number of excluded diagonal tuples.
std::uint64_t rotation_orbit_summary(std::uint64_t n, std::int64_t p,
                                     std::uint64_t s);

/// Orbit representatives (lexicographically least rotation) of the rotation
/// action on {0..n-1}^p, excluding constant tuples whose index is in S.
/// Indices refer to normalize(a).summands(). Includes representatives whose
/// gcd order is 1 (these are dropped from the functor's output) and ignores
/// the validity window. Exposed for counting checks.
std::vector<std::vector<std::size_t>>
tensor_orbit_representatives(const GradedAbelianGroup& a, std::int64_t p);

/// Indices (into normalize(a).summands()) forming the set S.
std::vector<std::size_t> s_members(const GradedAbelianGroup& a,
                                   std::int64_t p);

} // namespace chowbg
