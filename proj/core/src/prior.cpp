#include "beamalign/prior.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace beamalign {

Prior::Prior(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  Rat cum = 0;
  cumulative_.reserve(pieces_.size());
  for (const auto& piece : pieces_) {
    cumulative_.push_back(cum);
    cum += piece.arc.width() * piece.density;
  }
}

Prior Prior::from_pieces(std::vector<Piece> pieces) {
  if (pieces.empty()) throw std::invalid_argument("Prior: no pieces");
  Rat total_width = 0;
  Rat total_mass = 0;
  AngularRegion covered = AngularRegion::empty();
  for (const auto& piece : pieces) {
    if (piece.density < 0) throw std::invalid_argument("Prior: negative density");
    total_width += piece.arc.width();
    total_mass += piece.arc.width() * piece.density;
    covered = unite(covered, AngularRegion::of(piece.arc));
  }
  // Widths summing to one turn plus full coverage forces pairwise disjointness.
  if (total_width != 1 || !covered.is_full())
    throw std::invalid_argument("Prior: pieces must tile the circle exactly once");
  if (total_mass != 1) throw std::invalid_argument("Prior: density must integrate to 1");
  return Prior(std::move(pieces));
}

Prior Prior::uniform() {
  std::vector<Piece> halves;
  halves.push_back({make_arc(Rat(0), Rat(1, 2)), Rat(1)});
  halves.push_back({make_arc(Rat(1, 2), Rat(1)), Rat(1)});
  return from_pieces(std::move(halves));
}

bool Prior::is_uniform() const {
  for (const auto& piece : pieces_)
    if (piece.density != 1) return false;
  return true;
}

Rat Prior::prob(const AngularRegion& region) const {
  Rat total = 0;
  for (const auto& piece : pieces_) {
    if (piece.density == 0) continue;
    total += piece.density * intersect(region, AngularRegion::of(piece.arc)).measure();
  }
  return total;
}

double Prior::entropy_bits() const {
  double h = 0.0;
  for (const auto& piece : pieces_) {
    if (piece.density == 0) continue;  // zero-density pieces contribute nothing
    const double density = to_double(piece.density);
    h -= to_double(piece.arc.width()) * density * std::log2(density);
  }
  return h;
}

Angle Prior::sample(std::mt19937_64& rng) const {
  // 53 uniform bits give u in [0, 1); u = 0 wraps to 1 so every sample lands
  // in some half-open piece (lo, hi].
  Rat u(BigInt(rng() >> 11), BigInt(1) << 53);
  if (u == 0) u = 1;
  for (std::size_t k = pieces_.size(); k-- > 0;) {
    const auto& piece = pieces_[k];
    if (piece.density == 0 || u <= cumulative_[k]) continue;
    const Rat offset = (u - cumulative_[k]) / piece.density;  // in (0, width]
    return Angle::from_turns(piece.arc.lo().turns() + offset);
  }
  // Unreachable: masses sum to 1 and u <= 1.
  return pieces_.back().arc.hi();
}

}  // namespace beamalign
