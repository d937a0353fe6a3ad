#include "beamalign/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace beamalign {

Angle Angle::from_turns(const Rat& turns) {
  Rat f = frac(turns);
  if (f == 0) f = 1;
  return Angle(std::move(f));
}

double Angle::radians() const { return to_double(turns_) * 2.0 * std::numbers::pi; }

double Angle::degrees() const { return to_double(turns_) * 360.0; }

AngularInterval::AngularInterval(Angle lo, Angle hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ == hi_)
    throw std::invalid_argument("AngularInterval: lo == hi (empty and full-circle arcs are rejected)");
}

Rat AngularInterval::width() const {
  Rat w = frac(hi_.turns() - lo_.turns());
  return w;  // lo != hi guarantees w in (0, 1)
}

bool AngularInterval::contains(const Angle& psi) const {
  if (!wraps()) return lo_ < psi && psi <= hi_;
  return psi > lo_ || psi <= hi_;
}

AngularInterval make_arc(const Rat& lo_turns, const Rat& hi_turns) {
  return AngularInterval(Angle::from_turns(lo_turns), Angle::from_turns(hi_turns));
}

Angle midpoint(const AngularInterval& arc) {
  return Angle::from_turns(arc.lo().turns() + arc.width() / 2);
}

namespace {

// Linear pieces (a, b] with 0 <= a < b <= 1; a wrapping arc splits in two.
struct Seg {
  Rat a, b;
};

void append_segments(const AngularInterval& arc, std::vector<Seg>& out) {
  const Rat& lo = arc.lo().turns();
  const Rat& hi = arc.hi().turns();
  if (!arc.wraps()) {
    out.push_back({lo, hi});
    return;
  }
  if (lo < 1) out.push_back({lo, Rat(1)});
  out.push_back({Rat(0), hi});
}

std::vector<Seg> merged_segments(std::vector<Seg> segs) {
  std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) { return x.a < y.a; });
  std::vector<Seg> out;
  for (auto& s : segs) {
    if (!out.empty() && s.a <= out.back().b) {
      if (s.b > out.back().b) out.back().b = s.b;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

AngularInterval seg_to_arc(const Seg& s) {
  return AngularInterval(Angle::from_turns(s.a == 0 ? Rat(1) : s.a), Angle::from_turns(s.b));
}

// Canonical region from disjoint sorted segments; from_arcs rejoins pieces
// that meet at the wrap point.
AngularRegion region_from_segments(const std::vector<Seg>& segs) {
  if (segs.empty()) return AngularRegion::empty();
  if (segs.size() == 1 && segs.front().a == 0 && segs.front().b == 1)
    return AngularRegion::full_circle();
  std::vector<AngularInterval> arcs;
  arcs.reserve(segs.size());
  for (auto& s : segs) arcs.push_back(seg_to_arc(s));
  return AngularRegion::from_arcs(arcs);
}

std::vector<Seg> region_segments(const AngularRegion& r) {
  std::vector<Seg> segs;
  for (auto& arc : r.arcs()) append_segments(arc, segs);
  return merged_segments(std::move(segs));
}

}  // namespace

AngularRegion AngularRegion::full_circle() {
  AngularRegion r;
  r.full_ = true;
  return r;
}

AngularRegion AngularRegion::of(const AngularInterval& arc) {
  AngularRegion r;
  r.arcs_.push_back(arc);
  return r;
}

AngularRegion AngularRegion::from_arcs(const std::vector<AngularInterval>& arcs) {
  if (arcs.empty()) return empty();
  std::vector<Seg> segs;
  for (auto& a : arcs) append_segments(a, segs);
  segs = merged_segments(std::move(segs));

  // Already canonical and sorted by lo? Then keep direct to avoid re-deriving.
  AngularRegion r;
  if (segs.size() == 1 && segs.front().a == 0 && segs.front().b == 1) {
    r.full_ = true;
    return r;
  }
  if (segs.size() >= 2 && segs.front().a == 0 && segs.back().b == 1) {
    for (std::size_t k = 1; k + 1 < segs.size(); ++k) r.arcs_.push_back(seg_to_arc(segs[k]));
    r.arcs_.push_back(
        AngularInterval(Angle::from_turns(segs.back().a), Angle::from_turns(segs.front().b)));
  } else {
    for (auto& s : segs) r.arcs_.push_back(seg_to_arc(s));
  }
  return r;
}

Rat AngularRegion::measure() const {
  if (full_) return Rat(1);
  Rat total = 0;
  for (auto& a : arcs_) total += a.width();
  return total;
}

bool AngularRegion::contains(const Angle& psi) const {
  if (full_) return true;
  for (auto& a : arcs_)
    if (a.contains(psi)) return true;
  return false;
}

AngularRegion AngularRegion::complement() const {
  if (full_) return empty();
  if (is_empty()) return full_circle();
  std::vector<Seg> segs = region_segments(*this);
  std::vector<Seg> gaps;
  Rat prev(0);
  for (auto& s : segs) {
    if (s.a > prev) gaps.push_back({prev, s.a});
    prev = s.b;
  }
  if (prev < 1) gaps.push_back({prev, Rat(1)});
  return region_from_segments(std::move(gaps));
}

AngularRegion intersect(const AngularRegion& a, const AngularRegion& b) {
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  if (a.is_empty() || b.is_empty()) return AngularRegion::empty();
  std::vector<Seg> sa = region_segments(a);
  std::vector<Seg> sb = region_segments(b);
  std::vector<Seg> out;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const Rat lo = std::max(sa[i].a, sb[j].a);
    const Rat hi = std::min(sa[i].b, sb[j].b);
    if (lo < hi) out.push_back({lo, hi});
    if (sa[i].b < sb[j].b)
      ++i;
    else
      ++j;
  }
  return region_from_segments(std::move(out));
}

AngularRegion unite(const AngularRegion& a, const AngularRegion& b) {
  if (a.is_full() || b.is_full()) return AngularRegion::full_circle();
  std::vector<Seg> segs = region_segments(a);
  for (auto& s : region_segments(b)) segs.push_back(s);
  return region_from_segments(merged_segments(std::move(segs)));
}

AngularRegion half_space(const AngularInterval& beam, bool ack) {
  AngularRegion in = AngularRegion::of(beam);
  return ack ? in : in.complement();
}

ComponentBeamLoop::ComponentBeamLoop(std::vector<AngularInterval> cells) : cells_(std::move(cells)) {
  if (cells_.size() < 2)
    throw std::invalid_argument("ComponentBeamLoop: a proper arc cannot tile the circle alone");
  Rat total = 0;
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const auto& next = cells_[(k + 1) % cells_.size()];
    if (!(cells_[k].hi() == next.lo()))
      throw std::invalid_argument("ComponentBeamLoop: cells must abut cyclically");
    total += cells_[k].width();
  }
  if (total != 1) throw std::invalid_argument("ComponentBeamLoop: cell widths must sum to one turn");
}

ComponentBeamLoop partition(const std::vector<AngularInterval>& beams) {
  if (beams.empty()) throw std::invalid_argument("partition: no beams");
  std::set<Rat> endpoints;
  for (auto& b : beams) {
    endpoints.insert(b.lo().turns());
    endpoints.insert(b.hi().turns());
  }
  std::vector<Rat> e(endpoints.begin(), endpoints.end());
  std::vector<AngularInterval> cells;
  cells.reserve(e.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    cells.push_back(AngularInterval(Angle::from_turns(e[k]), Angle::from_turns(e[(k + 1) % e.size()])));
  return ComponentBeamLoop(std::move(cells));
}

}  // namespace beamalign
