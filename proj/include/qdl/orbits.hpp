#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdl/cyclotomic.hpp"
#include "qdl/paths.hpp"
#include "qdl/polyring.hpp"
#include "qdl/qdelannoy.hpp"

namespace qdl {

class FrameError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ClassError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Geometry around the corner (h, k) for paths ending at (h + n, k + n).
 *
 * The east segment runs from the corner to (h + n, k), the north segment from
 * the corner to (h, k + n). They meet only at the corner.
 */
struct CornerFrame {
  long h = 0;
  long k = 0;
  long n = 1;

  /// Throws FrameError unless h, k >= 0 and n >= 1.
  static CornerFrame make(long h, long k, long n);

  Point corner() const { return {h, k}; }
  Point target() const { return {h + n, k + n}; }
  bool on_east(Point p) const { return p.y == k && p.x >= h && p.x <= h + n; }
  bool on_north(Point p) const { return p.x == h && p.y >= k && p.y <= k + n; }
  bool on_anchor(Point p) const { return on_east(p) || on_north(p); }
};

/**
 * Split of a path as check + bar + hat, where bar is the maximal run of the
 * path lying on the two anchor segments (possibly a single point, stored as
 * an empty step sequence plus its anchor position).
 *
 * Paths through the corner additionally record where they reach it; the
 * corner split (prefix to the corner, tail after it) is what classification
 * uses for them.
 */
struct Decomposition {
  LatticePath check;
  LatticePath bar;
  LatticePath hat;
  Point bar_start;
  Point bar_end;
  std::optional<std::size_t> corner_index;

  bool through_corner() const { return corner_index.has_value(); }
  LatticePath whole() const { return check + bar + hat; }
  LatticePath prefix() const;
  LatticePath tail() const;
};

enum class PathClass { Q1, Q2, Q3, Q4 };

std::string_view class_name(PathClass c);
constexpr std::size_t class_index(PathClass c) { return static_cast<std::size_t>(c); }

/**
 * Blocks acted on by the cyclic rotations. `head` is the untouched part of the
 * path (check + bar for Q1/Q2, the prefix up to the corner for Q4), `leading`
 * is the initial N-run of a Q4 tail, and `blocks` holds exactly n pieces:
 *   Q1: an N or D step followed by a maximal E-run;
 *   Q2: an E or D step followed by a maximal N-run;
 *   Q4: the pair e_j + v_j, an E or D step followed by a maximal N-run.
 */
struct BlockDecomposition {
  PathClass cls = PathClass::Q1;
  LatticePath head;
  LatticePath leading;
  std::vector<LatticePath> blocks;

  LatticePath segment() const;
  LatticePath whole() const { return head + segment(); }
};

struct Orbit {
  PathClass cls = PathClass::Q1;
  std::vector<LatticePath> members;
  IntPoly weight;
  /// Number of D steps among e_1..e_n; only set for Q4 orbits.
  std::optional<long> diagonal_count;

  std::size_t size() const { return members.size(); }
};

struct FixedPointSums {
  IntPoly s1;
  IntPoly s2;
  IntPoly s3;
  IntPoly s4;
};

/// Throws FrameError when l does not end at the frame's target.
Decomposition decompose(const LatticePath &l, const CornerFrame &f);

PathClass classify(const Decomposition &d, const CornerFrame &f);
PathClass classify(const LatticePath &l, const CornerFrame &f);

/// Throws ClassError for Q3 paths, which carry no action.
BlockDecomposition blocks(const LatticePath &l, const CornerFrame &f);

/// One application of the class's cyclic action (last block rotated to the
/// front for Q1/Q2; e-labels rotated one slot for Q4).
LatticePath act(const LatticePath &l, const CornerFrame &f);
LatticePath act(const BlockDecomposition &b);

/// sigma(act(l)) - sigma(l) predicted from the blocks of l.
long predicted_sigma_shift(const BlockDecomposition &b, long n);

/// Whether l is fixed by its action, decided from the path shape alone:
/// x(hat) = 0 for Q1, y(hat) = 0 for Q2, all e-steps diagonal for Q4.
bool shape_says_fixed(const BlockDecomposition &b, const Decomposition &d);

Orbit orbit(const LatticePath &l, const CornerFrame &f);

/// Sums of q^sigma over the fixed points of each action (all of Q3 for s3),
/// by enumeration of every path to the frame's target.
FixedPointSums fixed_point_sums(const CornerFrame &f);

/// The closed forms the enumerated sums must match exactly:
///   s1 = q^(n(h+n)) (D_q(h+n,k) - D_q(h,k))
///   s2 = D_q(h,k+n) - q^(nh) D_q(h,k)
///   s3 = q^(nh) [2n, n]_q D_q(h,k)
///   s4 = q^(nh + n(n+1)/2) D_q(h,k)
FixedPointSums fixed_point_closed_forms(const CornerFrame &f, QDelannoyTable &dq);

struct AuditReport {
  CornerFrame frame;
  std::size_t total_paths = 0;
  std::array<std::size_t, 4> class_counts{};
  /// Orbit size -> number of orbits, for Q1, Q2 and Q4 (indexed by class).
  std::array<std::map<std::size_t, std::size_t>, 4> orbit_sizes{};
  FixedPointSums sums;
  FixedPointSums expected;
  IntPoly total;
  IntPoly theorem_rhs;
  IntPoly total_residue;
  IntPoly rhs_residue;
  IntPoly fixed_total_residue;
  std::array<IntPoly, 4> sum_residues;
  /// Paths whose class under the literal bar-endpoint reading differs from ours.
  std::size_t literal_mismatches = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the whole orbit argument at one frame. Violations are
/// collected in the report, never thrown.
AuditReport audit(const CornerFrame &f);

} // namespace qdl
