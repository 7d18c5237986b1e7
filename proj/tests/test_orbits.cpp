#include <doctest.h>

#include <map>
#include <set>

#include "qdl/orbits.hpp"

using qdl::CornerFrame;
using qdl::IntPoly;
using qdl::LatticePath;
using qdl::PathClass;

namespace {

LatticePath P(const char *s) { return LatticePath::parse(s); }

// Classification straight from the point list, without the decomposition code.
PathClass classify_by_points(const LatticePath &l, const CornerFrame &f) {
  auto pts = l.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == f.corner()) {
      for (std::size_t j = i; j < l.size(); ++j)
        if (l[j] == qdl::Step::D)
          return PathClass::Q4;
      return PathClass::Q3;
    }
  // Without the corner the anchor points form one contiguous run; its last
  // point decides the side.
  std::optional<qdl::Point> last;
  for (const auto &p : pts)
    if (f.on_anchor(p))
      last = p;
  REQUIRE(last.has_value());
  return f.on_east(*last) ? PathClass::Q1 : PathClass::Q2;
}

std::vector<CornerFrame> small_frames(long max_hk, long max_n) {
  std::vector<CornerFrame> out;
  for (long h = 0; h <= max_hk; ++h)
    for (long k = 0; k <= max_hk; ++k)
      for (long n = 1; n <= max_n; ++n)
        out.push_back(CornerFrame::make(h, k, n));
  return out;
}

} // namespace

TEST_CASE("frame validation") {
  CHECK_THROWS_AS(CornerFrame::make(-1, 0, 1), qdl::FrameError);
  CHECK_THROWS_AS(CornerFrame::make(0, 0, 0), qdl::FrameError);
  CornerFrame f = CornerFrame::make(1, 2, 3);
  CHECK(f.target() == qdl::Point{4, 5});
  CHECK(f.on_east({4, 2}));
  CHECK(f.on_north({1, 5}));
  CHECK_FALSE(f.on_anchor({2, 3}));
}

TEST_CASE("decompose a Q1 path") {
  CornerFrame f = CornerFrame::make(1, 1, 2);
  LatticePath l = P("EDNNE");
  auto d = qdl::decompose(l, f);
  CHECK(d.check == P("ED"));
  CHECK(d.bar.empty());
  CHECK(d.bar_start == qdl::Point{2, 1});
  CHECK(d.bar_end == qdl::Point{2, 1});
  CHECK(d.hat == P("NNE"));
  CHECK_FALSE(d.through_corner());
  CHECK(d.whole() == l);
  CHECK(qdl::classify(d, f) == PathClass::Q1);
  CHECK_THROWS_AS(qdl::decompose(P("EDN"), f), qdl::FrameError);
}

TEST_CASE("Q1 blocks, action and orbit") {
  CornerFrame f = CornerFrame::make(1, 1, 2);
  LatticePath l = P("EDNNE");
  auto b = qdl::blocks(l, f);
  CHECK(b.cls == PathClass::Q1);
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.blocks[0] == P("N"));
  CHECK(b.blocks[1] == P("NE"));
  LatticePath image = qdl::act(l, f);
  CHECK(image == P("EDNEN"));
  CHECK(l.sigma() == 6);
  CHECK(image.sigma() == 7);
  CHECK(qdl::predicted_sigma_shift(b, f.n) == 1);
  CHECK(qdl::act(image, f) == l);

  auto o = qdl::orbit(l, f);
  CHECK(o.size() == 2);
  CHECK(o.weight == IntPoly::monomial(6) + IntPoly::monomial(7));
  CHECK(qdl::reduce_mod(o.weight, 2).is_zero());
  CHECK_FALSE(o.diagonal_count.has_value());
}

TEST_CASE("Q4 paths") {
  CornerFrame f = CornerFrame::make(1, 0, 2);
  LatticePath fixed = P("EDD");
  CHECK(qdl::classify(fixed, f) == PathClass::Q4);
  CHECK(qdl::act(fixed, f) == fixed);
  auto fo = qdl::orbit(fixed, f);
  CHECK(fo.size() == 1);
  CHECK(fo.weight == IntPoly::monomial(fixed.sigma()));
  CHECK(fo.diagonal_count == 2);

  LatticePath l = P("EDEN");
  auto b = qdl::blocks(l, f);
  CHECK(b.head == P("E"));
  CHECK(b.leading.empty());
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.blocks[0] == P("D"));
  CHECK(b.blocks[1] == P("EN"));
  CHECK(qdl::act(l, f) == P("EEDN"));
  auto o = qdl::orbit(l, f);
  CHECK(o.size() == 2);
  CHECK(o.diagonal_count == 1);
  CHECK(qdl::reduce_mod(o.weight, 2).is_zero());
}

TEST_CASE("Q4 keeps the leading N-run in place") {
  CornerFrame f = CornerFrame::make(0, 0, 2);
  LatticePath l = P("NDE");
  REQUIRE(qdl::classify(l, f) == PathClass::Q4);
  auto b = qdl::blocks(l, f);
  CHECK(b.leading == P("N"));
  CHECK(qdl::act(l, f) == P("NED"));
}

TEST_CASE("Q3 has no action") {
  CornerFrame f = CornerFrame::make(0, 0, 1);
  CHECK(qdl::classify(P("EN"), f) == PathClass::Q3);
  CHECK(qdl::classify(P("NE"), f) == PathClass::Q3);
  CHECK(qdl::classify(P("D"), f) == PathClass::Q4);
  CHECK_THROWS_AS(qdl::blocks(P("EN"), f), qdl::ClassError);
  CHECK_THROWS_AS(qdl::act(P("EN"), f), qdl::ClassError);
  CHECK_THROWS_AS(qdl::orbit(P("NE"), f), qdl::ClassError);
}

TEST_CASE("Q2 path with an all-E hat is fixed") {
  CornerFrame f = CornerFrame::make(1, 1, 2);
  // bar climbs (1,2) -> (1,3) on the north segment, hat is EE
  LatticePath l = P("NNENEE");
  REQUIRE(qdl::classify(l, f) == PathClass::Q2);
  CHECK(qdl::act(l, f) == l);
  auto b = qdl::blocks(l, f);
  auto d = qdl::decompose(l, f);
  CHECK(qdl::shape_says_fixed(b, d));
}

TEST_CASE("classification agrees with a point-list oracle and is a partition") {
  for (const auto &f : small_frames(2, 3)) {
    std::array<std::size_t, 4> counts{};
    for (const auto &l : qdl::enumerate_paths(f.h + f.n, f.k + f.n)) {
      PathClass c = qdl::classify(l, f);
      CHECK(c == classify_by_points(l, f));
      ++counts[qdl::class_index(c)];
    }
    CHECK(qdl::BigInt(counts[0] + counts[1] + counts[2] + counts[3]) == qdl::delannoy(f.h + f.n, f.k + f.n));
    if (f.k == 0)
      CHECK(counts[0] == 0);
    if (f.h == 0)
      CHECK(counts[1] == 0);
    if (f.h == 0 && f.k == 0)
      CHECK(counts[0] + counts[1] == 0);
  }
}

TEST_CASE("actions are class-preserving bijections of period dividing n") {
  for (const auto &f : small_frames(2, 3)) {
    std::map<PathClass, std::set<std::string>> domain, image;
    for (const auto &l : qdl::enumerate_paths(f.h + f.n, f.k + f.n)) {
      PathClass c = qdl::classify(l, f);
      if (c == PathClass::Q3)
        continue;
      LatticePath a = qdl::act(l, f);
      CHECK(qdl::classify(a, f) == c);
      CHECK(a.x() == l.x());
      CHECK(a.y() == l.y());
      CHECK(a.sigma() - l.sigma() == qdl::predicted_sigma_shift(qdl::blocks(l, f), f.n));
      domain[c].insert(l.to_string());
      image[c].insert(a.to_string());
      LatticePath it = l;
      for (long i = 0; i < f.n; ++i)
        it = qdl::act(it, f);
      CHECK(it == l);
    }
    CHECK(domain == image);
  }
}

TEST_CASE("nontrivial orbits vanish modulo Phi_n") {
  qdl::CyclotomicTable cyclo;
  for (const auto &f : small_frames(1, 4)) {
    for (const auto &l : qdl::enumerate_paths(f.h + f.n, f.k + f.n)) {
      if (qdl::classify(l, f) == PathClass::Q3)
        continue;
      auto o = qdl::orbit(l, f);
      CHECK(f.n % static_cast<long>(o.size()) == 0);
      if (o.size() > 1)
        CHECK(qdl::reduce_mod(o.weight, static_cast<unsigned>(f.n), cyclo).is_zero());
    }
  }
}

TEST_CASE("fixed-point sums") {
  auto s = qdl::fixed_point_sums(CornerFrame::make(0, 0, 1));
  CHECK(s.s1.is_zero());
  CHECK(s.s2.is_zero());
  CHECK(s.s3 == IntPoly{1, 1});
  CHECK(s.s4 == IntPoly{0, 1});

  auto t = qdl::fixed_point_sums(CornerFrame::make(1, 1, 2));
  CHECK(t.s4 == IntPoly{0, 0, 0, 0, 0, 1, 2});

  CHECK(qdl::fixed_point_sums(CornerFrame::make(1, 0, 3)).s1.is_zero());

  qdl::QDelannoyTable dq;
  for (const auto &f : small_frames(2, 3)) {
    auto got = qdl::fixed_point_sums(f);
    auto want = qdl::fixed_point_closed_forms(f, dq);
    CHECK(got.s1 == want.s1);
    CHECK(got.s2 == want.s2);
    CHECK(got.s3 == want.s3);
    CHECK(got.s4 == want.s4);
  }
}

TEST_CASE("audit of the small frames") {
  auto a = qdl::audit(CornerFrame::make(0, 0, 1));
  CHECK(a.ok());
  CHECK(a.total_paths == 3);
  CHECK(a.total == IntPoly{1, 2});
  CHECK(a.total_residue == IntPoly{3});
  CHECK(a.rhs_residue == IntPoly{3});

  auto b = qdl::audit(CornerFrame::make(0, 0, 2));
  CHECK(b.ok());
  CHECK(b.total_paths == 13);
  CHECK(b.class_counts[2] + b.class_counts[3] == 13);
  CHECK(b.total_residue == IntPoly{1});

  auto c = qdl::audit(CornerFrame::make(1, 1, 2));
  CHECK(c.ok());
  CHECK(c.total_paths == 63);
  CHECK(c.class_counts == std::array<std::size_t, 4>{12, 12, 18, 21});
}

TEST_CASE("audit passes on every frame with h, k <= 2 and n <= 5") {
  for (const auto &f : small_frames(2, 5)) {
    auto r = qdl::audit(f);
    CAPTURE(f.h);
    CAPTURE(f.k);
    CAPTURE(f.n);
    CHECK(r.violations.empty());
    CHECK(qdl::BigInt(r.total_paths) == qdl::delannoy(f.h + f.n, f.k + f.n));
  }
}
