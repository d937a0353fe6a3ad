#pragma once

// Piecewise-constant direction priors on the circle: exact region
// probabilities, differential entropy in the turns convention, and
// deterministic inverse-CDF sampling.

#include "beamalign/geometry.hpp"

#include <random>
#include <vector>

namespace beamalign {

class Prior {
 public:
  struct Piece {
    AngularInterval arc;
    Rat density;  // probability per turn, >= 0
  };

  // Pieces must tile the circle exactly once and integrate to 1.
  static Prior from_pieces(std::vector<Piece> pieces);
  static Prior uniform();

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_uniform() const;

  // Exact integral of the density over the region; in [0, 1].
  Rat prob(const AngularRegion& region) const;

  // Differential entropy in bits with widths measured in turns. The uniform
  // prior gives exactly 0; add log2(2*pi) to convert to the radian convention.
  double entropy_bits() const;

  // Inverse-CDF sample; exact rational output, deterministic per seed stream.
  Angle sample(std::mt19937_64& rng) const;

 private:
  explicit Prior(std::vector<Piece> pieces);
  std::vector<Piece> pieces_;
  std::vector<Rat> cumulative_;  // mass before each piece, for sampling
};

}  // namespace beamalign
