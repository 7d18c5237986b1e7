#include "qdl/qdelannoy.hpp"

#include <algorithm>
#include <string>

namespace qdl {

std::optional<Route> parse_route(std::string_view name) {
  if (name == "def")
    return Route::Def;
  if (name == "alt")
    return Route::Alt;
  if (name == "rec")
    return Route::Rec;
  return std::nullopt;
}

std::string_view route_name(Route r) {
  switch (r) {
  case Route::Def:
    return "def";
  case Route::Alt:
    return "alt";
  case Route::Rec:
    return "rec";
  }
  return "?";
}

const IntPoly &QDelannoyTable::zero() {
  static const IntPoly z;
  return z;
}

void QDelannoyTable::populate(long want_h, long want_k) {
  const long have_h = max_h(), have_k = max_k();
  if (want_h <= have_h && want_k <= have_k)
    return;
  want_h = std::max(want_h, have_h);
  want_k = std::max(want_k, have_k);

  std::vector<std::vector<IntPoly>> g(static_cast<std::size_t>(want_h + 1),
                                      std::vector<IntPoly>(static_cast<std::size_t>(want_k + 1)));
  for (long h = 0; h <= want_h; ++h) {
    for (long k = 0; k <= want_k; ++k) {
      IntPoly &cell = g[h][k];
      if (h <= have_h && k <= have_k) {
        cell = std::move(grid_[h][k]);
        continue;
      }
      if (h == 0 || k == 0) {
        cell = IntPoly{1};
        continue;
      }
      cell = g[h][k - 1];
      cell.add_shifted(g[h - 1][k], static_cast<std::size_t>(k));
      cell.add_shifted(g[h - 1][k - 1], static_cast<std::size_t>(k));
    }
  }
  grid_ = std::move(g);
}

const IntPoly &QDelannoyTable::get(long h, long k) {
  if (h < 0 || k < 0)
    return zero();
  populate(h, k);
  return at(h, k);
}

const IntPoly &QDelannoyTable::at(long h, long k) const {
  if (h < 0 || k < 0)
    return zero();
  if (h > max_h() || k > max_k())
    throw std::out_of_range("q-Delannoy table not populated for (" + std::to_string(h) + ", " +
                            std::to_string(k) + ")");
  return grid_[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
}

IntPoly q_delannoy_def(long h, long k, QBinomialTable &binoms) {
  if (h < 0 || k < 0)
    return {};
  binoms.populate(h + k);
  IntPoly acc;
  for (long j = 0; j <= h; ++j) {
    const IntPoly &left = binoms.get(k, j);
    if (left.is_zero())
      continue;
    IntPoly term = left * binoms.get(h + k - j, k);
    acc.add_shifted(term, static_cast<std::size_t>(j * (j + 1) / 2));
  }
  return acc;
}

IntPoly q_delannoy_def(long h, long k) {
  QBinomialTable binoms;
  return q_delannoy_def(h, k, binoms);
}

IntPoly q_delannoy_alt(long h, long k, QBinomialTable &binoms) {
  if (h < 0 || k < 0)
    return {};
  binoms.populate(std::max(h, k));
  IntPoly acc;
  IntPoly pochhammer{1};
  for (long j = 0; j <= std::min(h, k); ++j) {
    if (j > 0)
      pochhammer += pochhammer.shifted(static_cast<std::size_t>(j));
    IntPoly term = pochhammer * binoms.get(k, j) * binoms.get(h, j);
    acc.add_shifted(term, static_cast<std::size_t>((h - j) * (k - j)));
  }
  return acc;
}

IntPoly q_delannoy_alt(long h, long k) {
  QBinomialTable binoms;
  return q_delannoy_alt(h, k, binoms);
}

IntPoly q_delannoy_rec(long h, long k) {
  QDelannoyTable table;
  return table.get(h, k);
}

IntPoly q_delannoy(long h, long k, Route route) {
  switch (route) {
  case Route::Def:
    return q_delannoy_def(h, k);
  case Route::Alt:
    return q_delannoy_alt(h, k);
  case Route::Rec:
    return q_delannoy_rec(h, k);
  }
  return {};
}

BigInt specialize_q1(long h, long k) { return poly_eval(q_delannoy_rec(h, k), 1); }

} // namespace qdl
