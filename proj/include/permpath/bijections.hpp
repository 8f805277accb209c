#pragma once

#include <optional>

#include "permpath/lattice_path.hpp"
#include "permpath/permutation.hpp"

namespace permpath {

/// Output of a permutation decomposition. `param` is the position k, middle
/// letter b or gap length k, depending on the map.
struct Decomposition {
  Permutation rho;
  std::optional<Permutation> sigma;
  int param = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend auto operator<=>(const Decomposition& a, const Decomposition& b) {
    if (auto c = a.param <=> b.param; c != 0) return c;
    if (auto c = a.rho <=> b.rho; c != 0) return c;
    return a.sigma <=> b.sigma;
  }
};

// --- 321-avoiders and Dyck paths -------------------------------------------

/// Record-high values give the ascent sequence (as differences starting from
/// 0) and record-high positions give the descent sequence (as differences
/// ending at n+1). The first entry becomes the first ascent.
LatticePath kratt_forward(const Permutation& p);

/// Rebuilds the record highs from the runs of `d` and fills the remaining
/// positions with the remaining letters in increasing order.
Permutation kratt_inverse(const LatticePath& d);

// --- first-quadrant path surgery -------------------------------------------

struct ReturnsDeletion {
  LatticePath path;
  int returns = 0;  // j: number of downsteps deleted

  friend bool operator==(const ReturnsDeletion&, const ReturnsDeletion&) = default;
};

/// Deletes the initial upstep and every downstep returning to the x-axis.
/// A path with m+k ups, m downs and j returns maps to a first-quadrant path
/// with m+k-1 ups and m-j downs.
ReturnsDeletion delete_returns(const LatticePath& p);

/// Inverse of `delete_returns`: prepends an upstep, then inserts a downstep
/// just before the rightmost upstep leaving each level 1..j. When the lifted
/// path finishes on level j, that downstep goes at the end instead.
LatticePath insert_returns(const LatticePath& q, int returns);

/// Moves the upstep after each of the first i downsteps to the front. Needs
/// a Dyck path with at least i nonfinal descents, the first i all of length
/// 1, and n > i + last descent. First ascent grows by i, last descent is kept.
/// At n = i + last descent the move can merge the final descent with the one
/// before it, so those paths are excluded.
LatticePath transfer_nonfinal(const LatticePath& d, int i);

/// Removes i leading upsteps and reinserts one after each of the first i
/// downsteps. Needs first ascent >= i+1 and n > i + last descent.
LatticePath untransfer_nonfinal(const LatticePath& d, int i);

// --- 321-avoiders with an increasing tail ----------------------------------

/// On 321-avoiders of [n] whose last i entries increase (n > i >= 1): the
/// identity when n sits at position <= n-i, otherwise n (then last) is moved
/// to position n-i+1. The image is the set of 321-avoiders with the same
/// first entry in which n is not among the last i-1 entries.
Permutation tail_phi(const Permutation& p, int i);
Permutation tail_phi_inverse(const Permutation& p, int i);

// --- exactly one 132 ------------------------------------------------------

/// p with one 132 occupying consecutive positions k, k+1, k+2, written
/// W1 a c b W2, maps to (reduce(W1 c W2), k). rho avoids 132.
Decomposition split_consecutive_132(const Permutation& p);
Permutation join_consecutive_132(const Permutation& rho, int k);

/// p = (n-2) n W2 (n-1) with one 132 maps to W2, a 132-avoider of [n-3].
Permutation strip_outer_132(const Permutation& p);
Permutation wrap_outer_132(const Permutation& w2);

/// p = W1 a c W2 b W3 with one 132 and |W2| = k maps to
/// rho = reduce(W1 a c b W3) (pattern consecutive) and
/// sigma = reduce(a c W2 b) (pattern at first, second, last positions).
Decomposition split_132_by_gap(const Permutation& p);
Permutation join_132_by_gap(const Permutation& rho, const Permutation& sigma);

// --- exactly one and exactly two 321 ---------------------------------------

/// p = W1 b W2 with one 321 (c in W1, a in W2) maps to rho = reduce(W1 a)
/// and sigma = reduce(c W2); param = b.
Decomposition split_one_321(const Permutation& p);
Permutation join_one_321(const Permutation& rho, const Permutation& sigma);

/// Two 321s c1 b a, c2 b a sharing middle and last letters; p = W1 b W2
/// maps to rho = reduce(W1 a) and sigma = reduce(c1 c2 W2); param = b.
Decomposition split_two_321_common_b(const Permutation& p);
Permutation join_two_321_common_b(const Permutation& rho, const Permutation& sigma);

/// Two 321s with middle letters b1 < b2 and p = W1 b1 W2 b2 W3, |W2| = k.
/// rho = reduce(W1' b1 W3') with c1 replaced by c2 in W1 and a2 by a1 in W3;
/// sigma = reduce(c1 W2 a2); param = k.
Decomposition split_two_321_distinct_b(const Permutation& p);
Permutation join_two_321_distinct_b(const Permutation& rho, const Permutation& sigma);

}  // namespace permpath
