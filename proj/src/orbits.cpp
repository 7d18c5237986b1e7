#include "qdl/orbits.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qdl/qcore.hpp"

namespace qdl {

namespace {

std::string describe(const CornerFrame &f) {
  std::ostringstream os;
  os << "(h=" << f.h << ", k=" << f.k << ", n=" << f.n << ")";
  return os.str();
}

bool has_diagonal(const LatticePath &l) { return l.count(Step::D) > 0; }

// Splits `segment` into blocks that each begin with a step accepted by
// `is_lead` followed by steps rejected by it; steps before the first lead
// go to `leading`.
void split_blocks(const LatticePath &segment, bool (*is_lead)(Step), LatticePath &leading,
                  std::vector<LatticePath> &out) {
  for (Step s : segment.steps()) {
    if (is_lead(s))
      out.emplace_back();
    (out.empty() ? leading : out.back()).push_back(s);
  }
}

bool raises_y(Step s) { return step_dy(s) == 1; }
bool raises_x(Step s) { return step_dx(s) == 1; }

} // namespace

CornerFrame CornerFrame::make(long h, long k, long n) {
  if (h < 0 || k < 0)
    throw FrameError("corner coordinates must be nonnegative");
  if (n < 1)
    throw FrameError("frame width n must be positive");
  return CornerFrame{h, k, n};
}

std::string_view class_name(PathClass c) {
  switch (c) {
  case PathClass::Q1:
    return "Q1";
  case PathClass::Q2:
    return "Q2";
  case PathClass::Q3:
    return "Q3";
  case PathClass::Q4:
    return "Q4";
  }
  return "?";
}

LatticePath Decomposition::prefix() const {
  if (!corner_index)
    throw ClassError("path does not pass through the corner");
  return whole().slice(0, *corner_index);
}

LatticePath Decomposition::tail() const {
  if (!corner_index)
    throw ClassError("path does not pass through the corner");
  LatticePath l = whole();
  return l.slice(*corner_index, l.size());
}

LatticePath BlockDecomposition::segment() const {
  LatticePath out = leading;
  for (const auto &b : blocks)
    out += b;
  return out;
}

Decomposition decompose(const LatticePath &l, const CornerFrame &f) {
  if (l.x() != f.h + f.n || l.y() != f.k + f.n)
    throw FrameError("path " + l.to_string() + " does not end at the target of frame " + describe(f));

  const auto pts = l.points();
  Decomposition d;
  std::size_t first = 0;
  while (first < pts.size() && !f.on_anchor(pts[first]))
    ++first;
  // Every path to the target meets an anchor segment.
  if (first == pts.size())
    throw std::logic_error("path misses both anchor segments");
  std::size_t last = first;
  while (last + 1 < pts.size() && f.on_anchor(pts[last + 1]))
    ++last;

  d.check = l.slice(0, first);
  d.bar = l.slice(first, last);
  d.hat = l.slice(last, l.size());
  d.bar_start = pts[first];
  d.bar_end = pts[last];
  for (std::size_t i = first; i <= last; ++i)
    if (pts[i] == f.corner())
      d.corner_index = i;
  return d;
}

PathClass classify(const Decomposition &d, const CornerFrame &f) {
  if (d.through_corner())
    return has_diagonal(d.tail()) ? PathClass::Q4 : PathClass::Q3;
  if (f.on_east(d.bar_end))
    return PathClass::Q1;
  return PathClass::Q2;
}

PathClass classify(const LatticePath &l, const CornerFrame &f) { return classify(decompose(l, f), f); }

BlockDecomposition blocks(const LatticePath &l, const CornerFrame &f) {
  const Decomposition d = decompose(l, f);
  BlockDecomposition b;
  b.cls = classify(d, f);
  switch (b.cls) {
  case PathClass::Q1:
    b.head = d.check + d.bar;
    split_blocks(d.hat, raises_y, b.leading, b.blocks);
    break;
  case PathClass::Q2:
    b.head = d.check + d.bar;
    split_blocks(d.hat, raises_x, b.leading, b.blocks);
    break;
  case PathClass::Q4:
    b.head = d.prefix();
    split_blocks(d.tail(), raises_x, b.leading, b.blocks);
    break;
  case PathClass::Q3:
    throw ClassError("no cyclic action on Q3 path " + l.to_string());
  }
  if (static_cast<long>(b.blocks.size()) != f.n || (b.cls != PathClass::Q4 && !b.leading.empty()))
    throw std::logic_error("block split of " + l.to_string() + " does not have n blocks");
  return b;
}

LatticePath act(const BlockDecomposition &b) {
  const std::size_t n = b.blocks.size();
  LatticePath out = b.head + b.leading;
  if (b.cls == PathClass::Q4) {
    // e-labels move one slot right, e_n wraps to the first pair; N-runs stay.
    for (std::size_t j = 0; j < n; ++j) {
      const LatticePath &src = b.blocks[(j + n - 1) % n];
      out.push_back(src[0]);
      out += b.blocks[j].slice(1, b.blocks[j].size());
    }
    return out;
  }
  out += b.blocks[n - 1];
  for (std::size_t j = 0; j + 1 < n; ++j)
    out += b.blocks[j];
  return out;
}

LatticePath act(const LatticePath &l, const CornerFrame &f) { return act(blocks(l, f)); }

long predicted_sigma_shift(const BlockDecomposition &b, long n) {
  const LatticePath &last = b.blocks.back();
  switch (b.cls) {
  case PathClass::Q1:
    return n * last.x() - b.segment().x();
  case PathClass::Q2:
    return b.segment().y() - n * last.y();
  case PathClass::Q4: {
    long s = 0;
    for (const auto &blk : b.blocks)
      s += (blk[0] == Step::D);
    return s - (last[0] == Step::D ? n : 0);
  }
  case PathClass::Q3:
    break;
  }
  throw ClassError("no cyclic action on Q3");
}

bool shape_says_fixed(const BlockDecomposition &b, const Decomposition &d) {
  switch (b.cls) {
  case PathClass::Q1:
    return d.hat.x() == 0;
  case PathClass::Q2:
    return d.hat.y() == 0;
  case PathClass::Q4:
    return std::all_of(b.blocks.begin(), b.blocks.end(), [](const LatticePath &blk) { return blk[0] == Step::D; });
  case PathClass::Q3:
    break;
  }
  return false;
}

Orbit orbit(const LatticePath &l, const CornerFrame &f) {
  Orbit o;
  LatticePath cur = l;
  do {
    BlockDecomposition b = blocks(cur, f);
    if (o.members.empty()) {
      o.cls = b.cls;
      if (b.cls == PathClass::Q4) {
        long s = 0;
        for (const auto &blk : b.blocks)
          s += (blk[0] == Step::D);
        o.diagonal_count = s;
      }
    }
    o.members.push_back(cur);
    o.weight.add_shifted(IntPoly{1}, static_cast<std::size_t>(cur.sigma()));
    cur = act(b);
    if (static_cast<long>(o.members.size()) > f.n)
      throw std::logic_error("action on " + l.to_string() + " is not n-periodic");
  } while (cur != l);
  return o;
}

FixedPointSums fixed_point_sums(const CornerFrame &f) {
  FixedPointSums sums;
  for_each_path(f.h + f.n, f.k + f.n, [&](const LatticePath &l) {
    const Decomposition d = decompose(l, f);
    const PathClass c = classify(d, f);
    const auto s = static_cast<std::size_t>(l.sigma());
    if (c == PathClass::Q3) {
      sums.s3.add_shifted(IntPoly{1}, s);
      return;
    }
    if (act(l, f) != l)
      return;
    IntPoly &target = c == PathClass::Q1 ? sums.s1 : c == PathClass::Q2 ? sums.s2 : sums.s4;
    target.add_shifted(IntPoly{1}, s);
  });
  return sums;
}

FixedPointSums fixed_point_closed_forms(const CornerFrame &f, QDelannoyTable &dq) {
  const auto h = static_cast<std::size_t>(f.h);
  const auto n = static_cast<std::size_t>(f.n);
  dq.populate(f.h + f.n, f.k + f.n);
  const IntPoly &base = dq.at(f.h, f.k);
  FixedPointSums out;
  out.s1 = (dq.at(f.h + f.n, f.k) - base).shifted(n * (h + n));
  out.s2 = dq.at(f.h, f.k + f.n) - base.shifted(n * h);
  out.s3 = (q_binomial(2 * f.n, f.n) * base).shifted(n * h);
  out.s4 = base.shifted(n * h + n * (n + 1) / 2);
  return out;
}

namespace {

class Auditor {
public:
  explicit Auditor(const CornerFrame &f) : f_(f) {
    report_.frame = f;
    dq_.populate(f.h + f.n, f.k + f.n);
    cyclo_.get(static_cast<unsigned>(f.n));
  }

  AuditReport run() {
    collect();
    check_actions();
    check_orbits();
    check_sums();
    if (suppressed_ > 0)
      report_.violations.push_back("... " + std::to_string(suppressed_) + " further violations suppressed");
    return std::move(report_);
  }

private:
  static constexpr std::size_t kMaxViolations = 100;

  void violation(const std::string &what) {
    if (report_.violations.size() < kMaxViolations)
      report_.violations.push_back(what);
    else
      ++suppressed_;
  }

  IntPoly reduce(const IntPoly &p) { return reduce_mod(p, static_cast<unsigned>(f_.n), cyclo_); }

  // Class membership evaluated directly from the path, independent of classify().
  std::vector<PathClass> memberships(const LatticePath &l, const Decomposition &d) const {
    const auto pts = l.points();
    std::optional<std::size_t> at_corner;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == f_.corner())
        at_corner = i;
    std::vector<PathClass> out;
    if (at_corner) {
      bool diag = false;
      for (std::size_t i = *at_corner; i < l.size(); ++i)
        diag = diag || l[i] == Step::D;
      out.push_back(diag ? PathClass::Q4 : PathClass::Q3);
    }
    if (!at_corner && d.bar_end.y == f_.k && d.bar_end.x > f_.h && d.bar_end.x <= f_.h + f_.n)
      out.push_back(PathClass::Q1);
    if (!at_corner && d.bar_end.x == f_.h && d.bar_end.y > f_.k && d.bar_end.y <= f_.k + f_.n)
      out.push_back(PathClass::Q2);
    return out;
  }

  PathClass literal_class(const Decomposition &d) const {
    if (d.bar_end.y == f_.k && d.bar_end.x > f_.h)
      return PathClass::Q1;
    if (d.bar_start.x == f_.h && d.bar_start.y > f_.k)
      return PathClass::Q2;
    return has_diagonal(d.hat) ? PathClass::Q4 : PathClass::Q3;
  }

  void collect() {
    paths_ = enumerate_paths(f_.h + f_.n, f_.k + f_.n);
    report_.total_paths = paths_.size();
    classes_.reserve(paths_.size());
    decomps_.reserve(paths_.size());
    std::vector<BigInt> total;
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      const LatticePath &l = paths_[i];
      index_.emplace(l.to_string(), i);
      Decomposition d = decompose(l, f_);
      const std::string tag = " for path " + l.to_string();

      if (d.whole() != l)
        violation("decomposition does not reassemble" + tag);
      for (const Point &p : d.bar.points(d.bar_start))
        if (!f_.on_anchor(p))
          violation("bar leaves the anchor segments" + tag);
      if (!d.hat.empty()) {
        Point next{d.bar_end.x + step_dx(d.hat[0]), d.bar_end.y + step_dy(d.hat[0])};
        if (f_.on_anchor(next))
          violation("bar is not maximal" + tag);
      }
      const long cross = d.check.x() * d.bar.y() + (d.check.x() + d.bar.x()) * d.hat.y();
      if (l.sigma() != d.check.sigma() + d.bar.sigma() + d.hat.sigma() + cross)
        violation("sigma does not reassemble over check/bar/hat" + tag);

      const PathClass c = classify(d, f_);
      const auto member = memberships(l, d);
      if (member.size() != 1)
        violation("path lies in " + std::to_string(member.size()) + " classes" + tag);
      else if (member.front() != c)
        violation("classify disagrees with class membership" + tag);
      if (literal_class(d) != c)
        ++report_.literal_mismatches;

      ++report_.class_counts[class_index(c)];
      classes_.push_back(c);
      decomps_.push_back(std::move(d));

      const auto s = static_cast<std::size_t>(l.sigma());
      if (total.size() <= s)
        total.resize(s + 1);
      ++total[s];
    }
    report_.total = IntPoly(std::move(total));

    std::size_t counted = 0;
    for (auto c : report_.class_counts)
      counted += c;
    if (counted != paths_.size() || BigInt(paths_.size()) != delannoy(f_.h + f_.n, f_.k + f_.n))
      violation("class counts do not cover every path");
  }

  std::optional<std::size_t> find(const LatticePath &l) const {
    auto it = index_.find(l.to_string());
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  void check_actions() {
    images_.assign(paths_.size(), 0);
    std::vector<std::size_t> hits(paths_.size(), 0);
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      const PathClass c = classes_[i];
      if (c == PathClass::Q3)
        continue;
      const LatticePath &l = paths_[i];
      const std::string tag = " for path " + l.to_string();
      const BlockDecomposition b = blocks(l, f_);
      const LatticePath image = act(b);
      const auto j = find(image);
      if (!j) {
        violation("action leaves the path set" + tag);
        images_[i] = i;
        continue;
      }
      images_[i] = *j;
      ++hits[*j];
      if (classes_[*j] != c)
        violation("action changes the class" + tag);
      const long shift = image.sigma() - l.sigma();
      if (shift != predicted_sigma_shift(b, f_.n))
        violation("sigma shift " + std::to_string(shift) + " differs from the shift law" + tag);
      if ((*j == i) != shape_says_fixed(b, decomps_[i]))
        violation("fixed-point characterization fails" + tag);
    }
    for (std::size_t i = 0; i < paths_.size(); ++i)
      if (classes_[i] != PathClass::Q3 && hits[i] != 1)
        violation("action is not a bijection at path " + paths_[i].to_string());
  }

  void check_orbits() {
    std::vector<bool> seen(paths_.size(), false);
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      if (seen[i] || classes_[i] == PathClass::Q3)
        continue;
      IntPoly weight;
      std::size_t size = 0;
      std::size_t cur = i;
      do {
        seen[cur] = true;
        weight.add_shifted(IntPoly{1}, static_cast<std::size_t>(paths_[cur].sigma()));
        cur = images_[cur];
        ++size;
      } while (cur != i && size <= static_cast<std::size_t>(f_.n));
      const std::string tag = " for orbit of " + paths_[i].to_string();
      if (cur != i || f_.n % static_cast<long>(size) != 0)
        violation("orbit size does not divide n" + tag);
      ++report_.orbit_sizes[class_index(classes_[i])][size];
      if (size > 1 && !reduce(weight).is_zero())
        violation("orbit weight does not vanish mod Phi_n" + tag);
    }
  }

  void check_sums() {
    FixedPointSums &s = report_.sums;
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      const auto sig = static_cast<std::size_t>(paths_[i].sigma());
      switch (classes_[i]) {
      case PathClass::Q3:
        s.s3.add_shifted(IntPoly{1}, sig);
        break;
      case PathClass::Q1:
        if (images_[i] == i)
          s.s1.add_shifted(IntPoly{1}, sig);
        break;
      case PathClass::Q2:
        if (images_[i] == i)
          s.s2.add_shifted(IntPoly{1}, sig);
        break;
      case PathClass::Q4:
        if (images_[i] == i)
          s.s4.add_shifted(IntPoly{1}, sig);
        break;
      }
    }
    report_.expected = fixed_point_closed_forms(f_, dq_);
    const FixedPointSums &e = report_.expected;
    if (s.s1 != e.s1)
      violation("S1 differs from q^(n(h+n)) (D_q(h+n,k) - D_q(h,k))");
    if (s.s2 != e.s2)
      violation("S2 differs from D_q(h,k+n) - q^(nh) D_q(h,k)");
    if (s.s3 != e.s3)
      violation("S3 differs from q^(nh) [2n,n]_q D_q(h,k)");
    if (s.s4 != e.s4)
      violation("S4 differs from q^(nh + n(n+1)/2) D_q(h,k)");

    report_.sum_residues = {reduce(s.s1), reduce(s.s2), reduce(s.s3), reduce(s.s4)};
    const IntPoly &base = dq_.at(f_.h, f_.k);
    if (report_.sum_residues[2] != reduce(BigInt(2) * base))
      violation("S3 is not congruent to 2 D_q(h,k) mod Phi_n");

    IntPoly rhs = dq_.at(f_.h + f_.n, f_.k) + dq_.at(f_.h, f_.k + f_.n);
    rhs.add_shifted(base, 0, f_.n % 2 == 1 ? 1 : -1);
    report_.theorem_rhs = rhs;
    report_.total_residue = reduce(report_.total);
    report_.rhs_residue = reduce(rhs);
    report_.fixed_total_residue = reduce(s.s1 + s.s2 + s.s3 + s.s4);
    if (report_.total != dq_.at(f_.h + f_.n, f_.k + f_.n))
      violation("sum of q^sigma over all paths differs from D_q(h+n,k+n)");
    if (report_.total_residue != report_.fixed_total_residue)
      violation("total is not congruent to the sum of fixed-point contributions");
    if (report_.total_residue != report_.rhs_residue)
      violation("grand total is not congruent to D_q(h+n,k) + D_q(h,k+n) +/- D_q(h,k)");
  }

  CornerFrame f_;
  AuditReport report_;
  QDelannoyTable dq_;
  CyclotomicTable cyclo_;
  std::vector<LatticePath> paths_;
  std::vector<PathClass> classes_;
  std::vector<Decomposition> decomps_;
  std::vector<std::size_t> images_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t suppressed_ = 0;
};

} // namespace

AuditReport audit(const CornerFrame &f) { return Auditor(f).run(); }

} // namespace qdl
