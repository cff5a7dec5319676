#include "avgorder/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "avgorder/number_theory.hpp"

namespace avgorder {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw GroupError("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> seen(degree, false);
    for (Point x : cycle) {
      if (x >= degree)
        throw GroupError("cycle point " + std::to_string(x) + " outside degree " +
                         std::to_string(degree));
      if (seen[x])
        throw GroupError("point " + std::to_string(x) + " repeated within a cycle");
      seen[x] = true;
    }
    if (cycle.size() < 2)
      continue;
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = compose(result, c);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::str() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw GroupError("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[i] = q[p[i]];
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[p[i]] = i;
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k) {
    if (k & 1)
      result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t perm_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& c : p.cycles())
    order = std::lcm(order, static_cast<std::uint64_t>(c.size()));
  return order;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(inverse(g), x), g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(compose(inverse(a), inverse(b)), a), b);
}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty())
    throw GroupError("a group needs at least one generator");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw GroupError("generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree_));
}

FiniteGroup FiniteGroup::trivial(std::size_t degree) {
  return FiniteGroup(degree, {Permutation::identity(degree)});
}

const std::vector<Permutation>& FiniteGroup::elements() const {
  std::call_once(cache_->once, [this] { cache_->elements = generate(*this); });
  return cache_->elements;
}

bool FiniteGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    return false;
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

std::vector<Permutation> generate(const FiniteGroup& group, std::uint64_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  std::deque<std::size_t> frontier;

  auto add = [&](Permutation p) {
    if (seen.contains(p))
      return;
    if (out.size() >= cap)
      throw SizeCapExceeded("group exceeds the size cap of " + std::to_string(cap) +
                            " elements");
    seen.insert(p);
    out.push_back(std::move(p));
    frontier.push_back(out.size() - 1);
  };

  add(Permutation::identity(group.degree()));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& gen : group.generators())
      add(compose(out[idx], gen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Permutation embed(const Permutation& p, std::size_t offset, std::size_t degree) {
  Permutation id(degree);
  std::vector<Point> images(id.images().begin(), id.images().end());
  for (Point i = 0; i < p.degree(); ++i)
    images[offset + i] = static_cast<Point>(offset + p[i]);
  return Permutation(std::move(images));
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators())
    if (!x.is_identity())
      gens.push_back(embed(x, 0, degree));
  for (const auto& y : h.generators())
    if (!y.is_identity())
      gens.push_back(embed(y, g.degree(), degree));
  if (gens.empty())
    gens.push_back(Permutation::identity(degree));
  return FiniteGroup(degree, std::move(gens));
}

FiniteGroup semidirect_cyclic(std::uint64_t q, std::uint64_t r, std::uint64_t k) {
  if (!is_prime(q))
    throw GroupError("semidirect_cyclic: q = " + std::to_string(q) + " is not prime");
  if (r < 2)
    throw GroupError("semidirect_cyclic: r must be at least 2");
  if (k % q == 1 || k % q == 0 || pow_mod(k, r, q) != 1)
    throw GroupError("semidirect_cyclic: k = " + std::to_string(k) +
                     " does not define a nontrivial action of C_" + std::to_string(r) +
                     " on C_" + std::to_string(q));
  const std::size_t degree = q + r;
  std::vector<Point> shift(degree), act(degree);
  std::iota(shift.begin(), shift.end(), Point{0});
  std::iota(act.begin(), act.end(), Point{0});
  for (std::uint64_t i = 0; i < q; ++i) {
    shift[i] = static_cast<Point>((i + 1) % q);
    act[i] = static_cast<Point>(i * k % q);
  }
  for (std::uint64_t j = 0; j < r; ++j)
    act[q + j] = static_cast<Point>(q + (j + 1) % r);
  return FiniteGroup(degree, {Permutation(std::move(shift)), Permutation(std::move(act))});
}

FiniteGroup subgroup(const FiniteGroup& parent, std::vector<Permutation> gens) {
  if (gens.empty())
    gens.push_back(Permutation::identity(parent.degree()));
  return FiniteGroup(parent.degree(), std::move(gens));
}

}  // namespace avgorder
