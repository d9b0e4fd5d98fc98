#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>

#include "chowbg/chow_table.hpp"
#include "chowbg/fields.hpp"
#include "chowbg/graded.hpp"
#include "chowbg/group_expr.hpp"

namespace chowbg {

/// Additive structure of CH^i BG, i = 0..bound, over the field k.
///
/// Abelian groups use the symmetric algebra on the character group,
/// products the Kunneth rule, wreath products the cyclic-power functor and
/// classical groups their presentations. Symmetric groups are handled
/// where the p-Sylow subgroup is trivial or cyclic of order p. Anything
/// else throws UnsupportedError.
ChowTable chow_model(const GroupExpr& g, const FieldDescriptor& k, int bound,
                     Localization loc = Localization::integral());

/// CH* of B(Z/p wr G) from an exact integral table of BG over a field
/// containing the p-th roots of unity.
ChowTable chow_wreath(std::int64_t p, const ChowTable& inner);

/// CH*(BS_n) tensor Z_(p) when n < 2p: Z in degree 0 and, if n >= p, Z/p in
/// each positive degree divisible by p - 1. Independent of k as long as
/// char k != p.
ChowTable chow_symmetric_local(std::int64_t n, std::int64_t p,
                               const FieldDescriptor& k, int bound);

/// CH* of the p-Sylow subgroup of S_n over C, which contains
/// CH*(BS_n)_(p) as a split summand. Flagged as an upper bound.
ChowTable chow_symmetric_sylow_bound(std::int64_t n, std::int64_t p,
                                     int bound);

/// Integral CH*(BS_n) for n <= 3, assembled from its p-local parts.
ChowTable chow_integral_symmetric(std::int64_t n, int bound,
                                  const FieldDescriptor& k =
                                      FieldDescriptor::complex());

/// Thread-safe memo of chow_model keyed by (group, field, localization,
/// bound). Lookups behave exactly like chow_model.
class ChowModelCache {
public:
  ChowTable get(const GroupExpr& g, const FieldDescriptor& k, int bound,
                Localization loc = Localization::integral());

  std::size_t size() const;

private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, ChowTable> tables_;
};

} // namespace chowbg
