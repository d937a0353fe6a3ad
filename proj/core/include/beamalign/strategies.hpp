#pragma once

// Concrete beam-alignment strategies under a fixed feedback delay, the
// entropy/cardinality lower bound on the expected beamwidth, and the
// duration-for-target-resolution comparison between them.

#include "beamalign/beamset.hpp"
#include "beamalign/prior.hpp"
#include "beamalign/rational.hpp"

#include <stdexcept>
#include <string>

namespace beamalign {

enum class Method { bisection, modified_exhaustive, non_interactive, lower_bound };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

// 2^h(prior) / M(b, d), in turns. Exact for the uniform prior via
// uniform_lower_bound_width; this general form goes through doubles.
double lower_bound_width(int b, int d, const Prior& prior);

// Uniform-prior specialization: 2^h = 1 turn exactly, so the bound is 1/M(b,d).
Rat uniform_lower_bound_width(int b, int d);

// b half-circle beams rotated in steps of 1/(2b) turn; feedback is ignored,
// giving 2b equal uncertainty regions of width 1/(2b).
ScanningBeamSet noninteractive_beamset(int b, int d);

// b beams of width 1/(b+1) scanning b of the b+1 equal sectors; error-free
// feedback identifies the remaining sector by elimination.
ScanningBeamSet exhaustive_beamset(int b, int d);

// Halve the current uncertainty region per feedback prefix (delay-1
// semantics); 2^b equal regions of width 2^-b.
ScanningBeamSet bisection_beamset(int b);

struct DurationResult {
  Method method = Method::bisection;
  int d = 0;
  int b = 0;  // packets used
  long long total_slots = 0;
  Rat achieved_width;  // expected width in turns (the bound value for lower_bound)
};

struct UnreachableTargetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smallest b whose expected width meets the target, with the scanning plus
// waiting duration. Bisection waits for each feedback before the next packet
// (packet i at slot 1 + (i-1)d), so its total is b*d + 1; the one-shot
// schedules take b + d. Throws UnreachableTargetError past b_cap.
DurationResult duration(Method method, int d, const Rat& target, const Prior& prior,
                        int b_cap = 4096);

}  // namespace beamalign
