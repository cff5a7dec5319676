#pragma once

// Structural predicates: elementary abelian 2-groups, commutativity,
// solvability and nilpotency via series of normal closures.

#include <cstdint>
#include <vector>

#include "avgorder/census.hpp"
#include "avgorder/perm.hpp"

namespace avgorder {

/// Bound on derived / lower central series length.
inline constexpr int kMaxSeriesDepth = 64;

class SeriesDepthExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

/// True iff every element order is 1 or 2 (x^2 = 1 for all x forces commutativity).
bool is_elementary_abelian_2(const OrderCensus& census);
/// True iff some element has order |G|.
bool is_cyclic(const OrderCensus& census);
/// Pairwise commuting generators.
bool is_abelian(const FiniteGroup& g);

/// Smallest subgroup of g containing `gens` and closed under conjugation by
/// the generators of g.
FiniteGroup normal_closure(const FiniteGroup& g, std::vector<Permutation> gens);

/// Normal closure of the commutators of generator pairs.
FiniteGroup derived_subgroup(const FiniteGroup& g);

/// G, G', G'', ... down to the point where the series stabilizes.
std::vector<FiniteGroup> derived_series(const FiniteGroup& g);
/// G, [G,G], [[G,G],G], ... down to the point where the series stabilizes.
std::vector<FiniteGroup> lower_central_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

FiniteGroup center(const FiniteGroup& g);

/// |{x^2 : x in G}|. Separates groups of equal order census, e.g. C4 x| C4 (3)
/// from C2 x Q8 (2).
std::uint64_t squares_count(const FiniteGroup& g);

/// True iff g is isomorphic to C2^m x A5 for some m >= 0: g' is perfect of
/// order 60 (hence A5), Z(g) is an elementary abelian 2-group and
/// |g'| * |Z(g)| = |g|.
bool is_c2_power_times_a5(const FiniteGroup& g);

/// Evaluation of the two n2 criteria on one group.
struct N2Verdict {
  std::uint64_t group_order = 0;
  std::uint64_t n2 = 0;
  bool hypothesis_a = false;  // n2 >= 3/4 |G|
  bool elementary_abelian_2 = false;
  bool hypothesis_b = false;  // n2 > |G|/4 - 1
  bool solvable = false;
  bool c2_power_times_a5 = false;

  bool consistent() const {
    return (!hypothesis_a || elementary_abelian_2) &&
           (!hypothesis_b || solvable || c2_power_times_a5);
  }
};

N2Verdict n2_criteria_check(const FiniteGroup& g);

}  // namespace avgorder
