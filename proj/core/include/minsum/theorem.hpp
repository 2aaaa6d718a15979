#pragma once

#include <vector>

#include "minsum/density.hpp"
#include "minsum/functionals.hpp"

namespace minsum {

/// One full check of the logarithmic lower bound on a density, with the
/// proof-chain diagnostics needed to audit the constant bookkeeping.
struct TheoremReport {
  double lhs = 0.0;     // sup of delta over [0, median]
  double rhs = 0.0;     // 1 / (24 + 8 log2(median * sup_norm))
  double margin = 0.0;  // lhs - rhs; nonnegative for every valid density
  double med_supnorm_product = 0.0;
  std::vector<double> dyadic_band_masses;  // band k = 1 .. ell_star, median-1 scale
  int ell_star = 0;
};

/// Lower bound at a given dilation-invariant product med * sup_norm.
double theorem_rhs_for_product(double product);

/// 1 / (24 + 8 log2(med(X) * ||f||_inf)); always in (0, 1/16].
double theorem_rhs(const Density& d);

TheoremReport verify_theorem(const Density& d, int grid_points = 4096);

struct DyadicBandCheck {
  double band_mass;  // mass of [1 - 2^(1-k), 1 - 2^-k] after median-1 dilation
  double two_delta;  // 2 * delta(1 - 2^-k); band_mass <= two_delta must hold
};

/// The proof's band inequality at z = 1 - 2^-k, checked with delta at that
/// exact z (a stronger, locally testable form).  The density is dilated to
/// median 1 internally.
DyadicBandCheck dyadic_band_lemma(const Density& d, int k);

struct EllPartitionCheck {
  int ell;             // floor(3 + log2 of the median-1 sup norm)
  double tail_bound;   // 2^-ell * sup_norm; at most 1/4 by choice of ell
  double covered_mass; // sum of band masses plus the tail piece; >= 1/2
};

EllPartitionCheck ell_partition_check(const Density& d);

}  // namespace minsum
