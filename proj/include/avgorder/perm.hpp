#pragma once

// Permutation arithmetic and group generation by closure. Every group in the
// library is a finite permutation group given by generators; its element set
// is materialized on first use and shared between copies.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace avgorder {

using Point = std::uint32_t;

/// Maximum number of elements a group may have before exhaustive methods
/// refuse to enumerate it.
inline constexpr std::uint64_t kMaxGroupSize = 2'000'000;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The closure of a generating set grew past kMaxGroupSize (or a declared
/// order already exceeds it).
class SizeCapExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 0);
  /// Throws GroupError unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Builds a permutation from disjoint (or overlapping, applied left to right) cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation, "()" for the identity.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Apply p first, then q: i -> q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// p^k for k >= 0.
Permutation power(const Permutation& p, std::uint64_t k);
/// Least k >= 1 with p^k = id, the lcm of the cycle lengths.
std::uint64_t perm_order(const Permutation& p);
/// g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);
/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

class FiniteGroup {
 public:
  /// Throws GroupError if the generator list is empty or degrees differ.
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators);

  static FiniteGroup trivial(std::size_t degree = 1);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Full element list sorted by image sequence. Generated on first call.
  const std::vector<Permutation>& elements() const;
  std::uint64_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Closure of the group's generators under composition. Breadth-first from
/// the identity, right-multiplying by generators. Throws SizeCapExceeded if
/// more than `cap` elements appear.
std::vector<Permutation> generate(const FiniteGroup& group, std::uint64_t cap = kMaxGroupSize);

/// Generators of g on the first deg(g) points, generators of h on the next deg(h).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// C_q x| C_r on q + r points: the q-cycle i -> i+1, and i -> k*i mod q
/// (fixing 0) combined with an r-cycle on the fresh points. Requires q prime,
/// r > 1, k^r = 1 and k != 1 mod q; throws GroupError otherwise.
FiniteGroup semidirect_cyclic(std::uint64_t q, std::uint64_t r, std::uint64_t k);

/// Subgroup of `parent` generated by `gens` (same degree as parent).
FiniteGroup subgroup(const FiniteGroup& parent, std::vector<Permutation> gens);

}  // namespace avgorder
