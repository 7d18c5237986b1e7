#include <doctest.h>

#include "qdl/paths.hpp"
#include "qdl/qdelannoy.hpp"

using qdl::IntPoly;

TEST_CASE("definition route") {
  CHECK(qdl::q_delannoy_def(0, 0) == IntPoly{1});
  CHECK(qdl::q_delannoy_def(1, 1) == IntPoly{1, 2});
  CHECK(qdl::q_delannoy_def(2, 2) == IntPoly{1, 2, 4, 4, 2});
  CHECK(qdl::q_delannoy_def(-1, 2).is_zero());
}

TEST_CASE("alternate closed form") {
  CHECK(qdl::q_delannoy_alt(1, 1) == IntPoly{1, 2});
  for (long h = 0; h <= 6; ++h)
    CHECK(qdl::q_delannoy_alt(h, 0) == IntPoly{1});
  CHECK(qdl::q_delannoy_alt(3, 2) == IntPoly{1, 2, 4, 6, 6, 4, 2});
  CHECK(qdl::q_delannoy_alt(2, -3).is_zero());
}

TEST_CASE("recurrence route") {
  CHECK(qdl::q_delannoy_rec(2, 2) == IntPoly{1, 2, 4, 4, 2});
  CHECK(qdl::q_delannoy_rec(0, 5) == IntPoly{1});
  CHECK(qdl::q_delannoy_rec(3, 3) == IntPoly{1, 2, 4, 8, 10, 12, 12, 8, 4, 2});
  CHECK(qdl::q_delannoy_rec(-2, 0).is_zero());
}

TEST_CASE("the recurrence expanded by hand at (2,2)") {
  IntPoly d21{1, 2, 2}, d12{1, 2, 2}, d11{1, 2};
  CHECK(qdl::q_delannoy_rec(2, 1) == d21);
  CHECK(qdl::q_delannoy_rec(1, 2) == d12);
  CHECK(d21 + d12.shifted(2) + d11.shifted(2) == IntPoly{1, 2, 4, 4, 2});
}

TEST_CASE("routes agree, symmetric, nonnegative, specialize to Delannoy for h, k <= 10") {
  qdl::QBinomialTable binoms;
  qdl::QDelannoyTable table;
  table.populate(10, 10);
  for (long h = 0; h <= 10; ++h)
    for (long k = 0; k <= 10; ++k) {
      const IntPoly &rec = table.at(h, k);
      CHECK(rec == qdl::q_delannoy_def(h, k, binoms));
      CHECK(rec == qdl::q_delannoy_alt(h, k, binoms));
      CHECK(rec == table.at(k, h));
      CHECK(qdl::poly_eval(rec, 1) == qdl::delannoy(h, k));
      for (const auto &c : rec.coeffs())
        CHECK(sgn(c) >= 0);
    }
}

TEST_CASE("specialize_q1") {
  CHECK(qdl::specialize_q1(1, 1) == 3);
  CHECK(qdl::specialize_q1(0, 0) == 1);
  CHECK(qdl::specialize_q1(5, 5) == 1683);
}

TEST_CASE("degree equals the largest sigma over the paths") {
  for (long h = 0; h <= 6; ++h)
    for (long k = 0; k <= 6; ++k) {
      long best = 0;
      qdl::for_each_path(h, k, [&](const qdl::LatticePath &l) { best = std::max(best, l.sigma()); });
      CHECK(qdl::q_delannoy_rec(h, k).degree() == best);
    }
}

TEST_CASE("table growth keeps earlier entries") {
  qdl::QDelannoyTable table;
  IntPoly small = table.get(2, 3);
  table.populate(6, 4);
  CHECK(table.at(2, 3) == small);
  CHECK(table.get(6, 7) == qdl::q_delannoy_def(6, 7));
  const qdl::QDelannoyTable &view = table;
  CHECK_THROWS_AS(view.at(9, 9), std::out_of_range);
}

TEST_CASE("route names") {
  CHECK(qdl::parse_route("alt") == qdl::Route::Alt);
  CHECK_FALSE(qdl::parse_route("fast").has_value());
  CHECK(qdl::route_name(qdl::Route::Def) == "def");
  CHECK(qdl::q_delannoy(3, 4, qdl::Route::Def) == qdl::q_delannoy(3, 4, qdl::Route::Alt));
}
