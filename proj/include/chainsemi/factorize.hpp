#pragma once

#include <vector>

#include "chainsemi/chain_map.hpp"

namespace chainsemi {

/// The canonical three-factor decomposition input = beta * gamma * delta
/// of a non-orientation-preserving member of PORD(n,r) or IORD(n,r):
/// beta pushes the kernel classes onto a staircase, gamma is an injective
/// double reflection fixing {p, m+1}, and delta relabels the staircase
/// back onto the original image values.
struct Factorization {
  ChainMap input;
  ChainMap beta;
  ChainMap gamma;
  ChainMap delta;

  int m = 0;  // construction degree: min preimage of the top image value, minus one
  int p = 0;  // the image value anchoring the first reflected run
  int s = 0;  // split index: number of image values carried by [1, m]
  int t = 0;  // image size of the input

  /// gamma equals the partial identity on y_mask composed with
  /// gamma_source, a two-point reflection on (p, m+1) in the large-r
  /// regime and its (r, s)-bounded variant in the small-r regime.
  bool small_regime = false;
  ChainMap gamma_source;
  std::vector<int> y_mask;
};

/// Factorization over PORD(n,r): requires the input to be oriented,
/// order-decreasing, not orientation-preserving, with 3 <= |im| <= r.
/// Throws std::domain_error otherwise.
Factorization factorize_pord(const ChainMap& a, int r);

/// The injective variant: additionally requires the input injective, and
/// produces injective beta and delta.
Factorization factorize_iord(const ChainMap& a, int r);

}  // namespace chainsemi
