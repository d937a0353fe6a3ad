#pragma once

// Exact arithmetic for arcs and arc unions on the unit circle.
//
// Angles are rationals measured in turns (1 turn = 2*pi radians), kept in the
// half-open fundamental domain (0, 1]. All predicates are decided exactly on
// rationals; radians and degrees appear only at presentation boundaries.

#include "beamalign/rational.hpp"

#include <cstddef>
#include <vector>

namespace beamalign {

class Angle {
 public:
  // Normalizes into (0, 1]; the circle point 0 is represented as 1.
  static Angle from_turns(const Rat& turns);

  const Rat& turns() const { return turns_; }
  double radians() const;
  double degrees() const;

  // Order of the representatives in (0, 1]; used for sorting endpoints.
  friend bool operator==(const Angle& a, const Angle& b) { return a.turns_ == b.turns_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.turns_ < b.turns_; }
  friend bool operator<=(const Angle& a, const Angle& b) { return a.turns_ <= b.turns_; }
  friend bool operator>(const Angle& a, const Angle& b) { return a.turns_ > b.turns_; }
  friend bool operator>=(const Angle& a, const Angle& b) { return a.turns_ >= b.turns_; }

 private:
  explicit Angle(Rat turns) : turns_(std::move(turns)) {}
  Rat turns_;
};

// Half-open arc (lo, hi], traversed counter-clockwise from lo to hi; wraps
// past the circle point 0/1 when hi < lo. Empty and full-circle arcs are not
// representable: construction requires lo != hi.
class AngularInterval {
 public:
  AngularInterval(Angle lo, Angle hi);

  const Angle& lo() const { return lo_; }
  const Angle& hi() const { return hi_; }
  bool wraps() const { return hi_ < lo_; }
  Rat width() const;  // in (0, 1) turns
  bool contains(const Angle& psi) const;

  friend bool operator==(const AngularInterval& a, const AngularInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Angle lo_;
  Angle hi_;
};

// Convenience constructor from raw turn values.
AngularInterval make_arc(const Rat& lo_turns, const Rat& hi_turns);

// Exact interior representative of an arc.
Angle midpoint(const AngularInterval& arc);

// Finite union of arcs in canonical form: pairwise disjoint, non-adjacent,
// sorted by lo. The empty set and the full circle are valid regions; the full
// circle has no arc decomposition and is tracked separately.
class AngularRegion {
 public:
  AngularRegion() = default;  // empty
  static AngularRegion empty() { return AngularRegion(); }
  static AngularRegion full_circle();
  static AngularRegion of(const AngularInterval& arc);
  static AngularRegion from_arcs(const std::vector<AngularInterval>& arcs);

  bool is_empty() const { return !full_ && arcs_.empty(); }
  bool is_full() const { return full_; }
  // Canonical arcs; empty for both the empty region and the full circle.
  const std::vector<AngularInterval>& arcs() const { return arcs_; }

  Rat measure() const;  // total width in turns, in [0, 1]
  bool contains(const Angle& psi) const;
  AngularRegion complement() const;

  friend bool operator==(const AngularRegion& a, const AngularRegion& b) {
    return a.full_ == b.full_ && a.arcs_ == b.arcs_;
  }

 private:
  bool full_ = false;
  std::vector<AngularInterval> arcs_;

  friend AngularRegion intersect(const AngularRegion&, const AngularRegion&);
  friend AngularRegion unite(const AngularRegion&, const AngularRegion&);
};

AngularRegion intersect(const AngularRegion& a, const AngularRegion& b);
AngularRegion unite(const AngularRegion& a, const AngularRegion& b);

// The angular region consistent with feedback bit `ack` for a scanning beam:
// the beam itself on an ACK, its circle complement on a NACK.
AngularRegion half_space(const AngularInterval& beam, bool ack);

// Cyclically ordered arcs that tile the circle exactly once: consecutive arcs
// abut (cell k's hi equals cell k+1's lo) and widths sum to 1 turn.
class ComponentBeamLoop {
 public:
  explicit ComponentBeamLoop(std::vector<AngularInterval> cells);

  std::size_t size() const { return cells_.size(); }
  const AngularInterval& cell(std::size_t k) const { return cells_[k]; }
  const std::vector<AngularInterval>& cells() const { return cells_; }

 private:
  std::vector<AngularInterval> cells_;
};

// Component beams induced by a set of scanning beams: sorts the distinct arc
// endpoints around the circle and returns the arcs between consecutive ones.
// With k distinct endpoints the loop has exactly k cells.
ComponentBeamLoop partition(const std::vector<AngularInterval>& beams);

}  // namespace beamalign
