#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qdl/polyring.hpp"

namespace qdl {

/// East (1,0), north (0,1) and diagonal (1,1) unit steps.
enum class Step : std::uint8_t { E, N, D };

constexpr int step_dx(Step s) { return s == Step::N ? 0 : 1; }
constexpr int step_dy(Step s) { return s == Step::E ? 0 : 1; }
char step_char(Step s);

struct Point {
  long x = 0;
  long y = 0;
  friend bool operator==(const Point &, const Point &) = default;
};

/**
 * A lattice path stored as its step sequence, independent of where it starts.
 * Absolute points are derived on demand from a start point.
 */
class LatticePath {
public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a string over {E, N, D}; throws std::invalid_argument otherwise.
  static LatticePath parse(std::string_view text);

  const std::vector<Step> &steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  long x() const;
  long y() const;
  long sigma() const;
  long count(Step s) const;

  /// Points visited when started at `start`, including both endpoints.
  std::vector<Point> points(Point start = {}) const;

  /// Steps [first, last).
  LatticePath slice(std::size_t first, std::size_t last) const;

  std::string to_string() const;

  LatticePath &operator+=(const LatticePath &rhs);
  void push_back(Step s) { steps_.push_back(s); }
  void pop_back() { steps_.pop_back(); }

  friend LatticePath operator+(LatticePath a, const LatticePath &b) { return a += b; }
  friend bool operator==(const LatticePath &, const LatticePath &) = default;
  friend auto operator<=>(const LatticePath &a, const LatticePath &b) { return a.steps_ <=> b.steps_; }

private:
  std::vector<Step> steps_;
};

/// Sum over the y-raising steps of the x-coordinate of their endpoints.
long sigma(const LatticePath &l);

LatticePath concat(const LatticePath &a, const LatticePath &b);

/// Visits every path from (0,0) to (h,k) once. At each position the
/// descent tries E, then N, then D, so the order is deterministic. The
/// referenced path is only valid during the callback.
void for_each_path(long h, long k, const std::function<void(const LatticePath &)> &visit);

/// Materialized version of for_each_path.
std::vector<LatticePath> enumerate_paths(long h, long k);

/// sum over all paths from (0,0) to (h,k) of q^sigma.
IntPoly sigma_poly(long h, long k);

} // namespace qdl
