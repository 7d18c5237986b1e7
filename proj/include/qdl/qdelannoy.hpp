#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qdl/polyring.hpp"
#include "qdl/qcore.hpp"

namespace qdl {

/// Which formula produces D_q(h, k).
enum class Route { Def, Alt, Rec };

std::optional<Route> parse_route(std::string_view name);
std::string_view route_name(Route r);

/**
 * D_q(h, k) via the recurrence
 *   D_q(h, k) = D_q(h, k-1) + q^k D_q(h-1, k) + q^k D_q(h-1, k-1),
 * with D_q(h, 0) = D_q(0, k) = 1 and zero for negative indices.
 *
 * Filled as a dense grid. get() grows it; after populate() the table is safe
 * to share read-only through at().
 */
class QDelannoyTable {
public:
  const IntPoly &get(long h, long k);
  const IntPoly &at(long h, long k) const;
  void populate(long max_h, long max_k);

  long max_h() const { return static_cast<long>(grid_.size()) - 1; }
  long max_k() const { return grid_.empty() ? -1 : static_cast<long>(grid_[0].size()) - 1; }

private:
  static const IntPoly &zero();
  std::vector<std::vector<IntPoly>> grid_;
};

/// sum_{j=0}^{h} q^(j(j+1)/2) [k, j]_q [h + k - j, k]_q
IntPoly q_delannoy_def(long h, long k, QBinomialTable &binoms);
IntPoly q_delannoy_def(long h, long k);

/// sum_{j=0}^{min(h,k)} q^((h-j)(k-j)) (-q;q)_j [k, j]_q [h, j]_q
IntPoly q_delannoy_alt(long h, long k, QBinomialTable &binoms);
IntPoly q_delannoy_alt(long h, long k);

IntPoly q_delannoy_rec(long h, long k);

IntPoly q_delannoy(long h, long k, Route route);

/// D_q(h, k) evaluated at q = 1.
BigInt specialize_q1(long h, long k);

} // namespace qdl
