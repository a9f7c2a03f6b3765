#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mekr/bigint.hpp"
#include "mekr/universe.hpp"

namespace mekr {

/// A closed-form extremal value together with the hypothesis under which it
/// is known to be tight.  The value is always computed; hypothesis_ok says
/// whether the tightness guarantee applies at these parameters.
struct BoundValue {
  BigInt value;
  bool hypothesis_ok = false;
  std::string hypothesis;
};

/// Size of a star (all k-multisets using a fixed element): C(m+k-2, k-1).
/// Maximal among intersecting families once m >= k+1.
BoundValue star_bound(int m, int k);

/// Maximum size of a t-intersecting family of k-multisets:
/// C(m+k-t-1, k-t), tight for m >= t(k-t)+2.
BoundValue t_intersecting_bound(int m, int k, int t);

/// Maximum of |F| + |G| over cross-t-intersecting pairs of k-multiset
/// families: multichoose(m,k) - sum_{i<t} C(k,i)C(m-1,k-i) + 1.
/// Tight for m >= k+1 when t = 1 and for m >= 2k-t when t >= 2.
BoundValue cross_sum_bound(int m, int k, int t);

/// Set-system analogue over k-subsets of [n]:
/// C(n,k) - sum_{i<t} C(k,i)C(n-k,k-i) + 1, tight for k > t, n > 2k-t,
/// excluding (n, t) = (2k, 1).
BoundValue set_cross_sum_bound(long long n, int k, int t);

/// All members holding at least one copy of the given element.
Family star_family(const Universe& u, int element);

/// The pair ({[1..k]}, {G : |G /\ [1..k]| >= t}) extremal for the cross sum.
std::pair<Family, Family> hilton_milner_pair(int m, int k, int t);

/// The optimal pair shapes expected at (m, k, t), as concrete
/// representatives.  applicable == false (with a note) outside the parameter
/// ranges where the extremal classification is known to be complete.
struct PredictedOptima {
  bool applicable = false;
  std::string note;
  std::vector<std::pair<Family, Family>> classes;
};

PredictedOptima predicted_optima(int m, int k, int t);

}  // namespace mekr
