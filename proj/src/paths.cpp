#include "qdl/paths.hpp"

#include <stdexcept>

namespace qdl {

char step_char(Step s) {
  switch (s) {
  case Step::E:
    return 'E';
  case Step::N:
    return 'N';
  case Step::D:
    return 'D';
  }
  return '?';
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
    case 'E':
      steps.push_back(Step::E);
      break;
    case 'N':
      steps.push_back(Step::N);
      break;
    case 'D':
      steps.push_back(Step::D);
      break;
    default:
      throw std::invalid_argument("invalid step '" + std::string(1, c) + "' in path");
    }
  }
  return LatticePath(std::move(steps));
}

long LatticePath::x() const {
  long total = 0;
  for (Step s : steps_)
    total += step_dx(s);
  return total;
}

long LatticePath::y() const {
  long total = 0;
  for (Step s : steps_)
    total += step_dy(s);
  return total;
}

long LatticePath::sigma() const {
  long x = 0, total = 0;
  for (Step s : steps_) {
    x += step_dx(s);
    if (step_dy(s))
      total += x;
  }
  return total;
}

long LatticePath::count(Step which) const {
  long total = 0;
  for (Step s : steps_)
    total += (s == which);
  return total;
}

std::vector<Point> LatticePath::points(Point start) const {
  std::vector<Point> out;
  out.reserve(steps_.size() + 1);
  out.push_back(start);
  for (Step s : steps_) {
    start.x += step_dx(s);
    start.y += step_dy(s);
    out.push_back(start);
  }
  return out;
}

LatticePath LatticePath::slice(std::size_t first, std::size_t last) const {
  return LatticePath(std::vector<Step>(steps_.begin() + static_cast<long>(first),
                                       steps_.begin() + static_cast<long>(last)));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_)
    out.push_back(step_char(s));
  return out;
}

LatticePath &LatticePath::operator+=(const LatticePath &rhs) {
  steps_.insert(steps_.end(), rhs.steps_.begin(), rhs.steps_.end());
  return *this;
}

long sigma(const LatticePath &l) { return l.sigma(); }

LatticePath concat(const LatticePath &a, const LatticePath &b) { return a + b; }

namespace {

class PathWalker {
public:
  PathWalker(const std::function<void(const LatticePath &)> &visit) : visit_(visit) {}

  void descend(long h, long k) {
    if (h == 0 && k == 0) {
      visit_(path_);
      return;
    }
    if (h > 0)
      step(Step::E, h - 1, k);
    if (k > 0)
      step(Step::N, h, k - 1);
    if (h > 0 && k > 0)
      step(Step::D, h - 1, k - 1);
  }

private:
  void step(Step s, long h, long k) {
    path_.push_back(s);
    descend(h, k);
    path_.pop_back();
  }

  const std::function<void(const LatticePath &)> &visit_;
  LatticePath path_;
};

} // namespace

void for_each_path(long h, long k, const std::function<void(const LatticePath &)> &visit) {
  if (h < 0 || k < 0)
    return;
  PathWalker(visit).descend(h, k);
}

std::vector<LatticePath> enumerate_paths(long h, long k) {
  std::vector<LatticePath> out;
  for_each_path(h, k, [&](const LatticePath &l) { out.push_back(l); });
  return out;
}

IntPoly sigma_poly(long h, long k) {
  std::vector<BigInt> counts;
  for_each_path(h, k, [&](const LatticePath &l) {
    auto s = static_cast<std::size_t>(l.sigma());
    if (counts.size() <= s)
      counts.resize(s + 1);
    ++counts[s];
  });
  return IntPoly(std::move(counts));
}

} // namespace qdl
