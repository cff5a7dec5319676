#include "avgorder/structure.hpp"

#include <set>

#include "avgorder/number_theory.hpp"

namespace avgorder {

bool is_elementary_abelian_2(const OrderCensus& census) {
  for (const auto& [d, n] : census.counts())
    if (d > 2)
      return false;
  return true;
}

bool is_cyclic(const OrderCensus& census) { return census.count(census.group_order()) > 0; }

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
        return false;
  return true;
}

FiniteGroup normal_closure(const FiniteGroup& g, std::vector<Permutation> gens) {
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  FiniteGroup h = subgroup(g, gens);
  for (;;) {
    bool grown = false;
    // Conjugates of the current generators only; once h is stable under the
    // parent's generators it is normal.
    const auto current = h.generators();
    for (const auto& x : current) {
      for (const auto& t : g.generators()) {
        Permutation c = conjugate(x, t);
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          h = subgroup(g, gens);
          grown = true;
        }
      }
    }
    if (!grown)
      return h;
  }
}

FiniteGroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, std::move(comms));
}

namespace {

template <typename Step>
std::vector<FiniteGroup> series(const FiniteGroup& g, Step next) {
  std::vector<FiniteGroup> out{g};
  for (int depth = 0; depth < kMaxSeriesDepth; ++depth) {
    const FiniteGroup& last = out.back();
    if (last.order() == 1)
      return out;
    FiniteGroup n = next(last);
    if (n.order() == last.order())
      return out;
    out.push_back(std::move(n));
  }
  throw SeriesDepthExceeded("subgroup series did not stabilize within " +
                            std::to_string(kMaxSeriesDepth) + " steps");
}

}  // namespace

std::vector<FiniteGroup> derived_series(const FiniteGroup& g) {
  return series(g, [](const FiniteGroup& h) { return derived_subgroup(h); });
}

std::vector<FiniteGroup> lower_central_series(const FiniteGroup& g) {
  return series(g, [&g](const FiniteGroup& h) {
    std::vector<Permutation> comms;
    for (const auto& x : h.generators())
      for (const auto& t : g.generators())
        comms.push_back(commutator(x, t));
    return normal_closure(g, std::move(comms));
  });
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().order() == 1; }

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().order() == 1; }

FiniteGroup center(const FiniteGroup& g) {
  std::vector<Permutation> central;
  for (const auto& x : g.elements()) {
    bool commutes = true;
    for (const auto& t : g.generators())
      if (compose(x, t) != compose(t, x)) {
        commutes = false;
        break;
      }
    if (commutes && !x.is_identity())
      central.push_back(x);
  }
  return subgroup(g, std::move(central));
}

std::uint64_t squares_count(const FiniteGroup& g) {
  std::set<Permutation> squares;
  for (const auto& x : g.elements())
    squares.insert(compose(x, x));
  return squares.size();
}

bool is_c2_power_times_a5(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  if (n % 60 != 0 || (n / 60 & (n / 60 - 1)) != 0)
    return false;
  const FiniteGroup d = derived_subgroup(g);
  if (d.order() != 60 || derived_subgroup(d).order() != 60)
    return false;
  const FiniteGroup z = center(g);
  return z.order() * 60 == n && is_elementary_abelian_2(order_census(z));
}

N2Verdict n2_criteria_check(const FiniteGroup& g) {
  const OrderCensus census = order_census(g);
  N2Verdict v;
  v.group_order = census.group_order();
  v.n2 = census.count(2);
  const Rational n2(static_cast<long>(v.n2));
  const Rational n(static_cast<long>(v.group_order));
  v.hypothesis_a = n2 >= rat(3, 4) * n;
  v.hypothesis_b = n2 > rat(1, 4) * n - 1;
  v.elementary_abelian_2 = is_elementary_abelian_2(census);
  v.solvable = is_solvable(g);
  v.c2_power_times_a5 = !v.solvable && is_c2_power_times_a5(g);
  return v;
}

}  // namespace avgorder
