#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace qf {

using Rational = boost::rational<long long>;

/// A permutation of {1..N}, stored as the array of one-based images.
/// Composition convention, used everywhere in the library:
///   (p * q)(x) = p(q(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Build from disjoint cycles given in one-based points, e.g. {{1,2},{3,4}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation random(int degree, Rng& rng);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& q) const;  // this after q
  Permutation inverse() const;
  Permutation power(long long k) const;
  bool is_identity() const;
  int order() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p.compose(q); }

/// A finite subgroup of S_N with its element set materialized.
struct PermutationGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, closed under composition and inverse

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;
  bool is_abelian() const;
};

/// Breadth-first closure of the generated subgroup. Throws cap_exceeded when
/// the element count would pass `cap`.
PermutationGroup generate_group(const std::vector<Permutation>& generators,
                                std::size_t cap = 1000000);

PermutationGroup symmetric_group(int degree);
PermutationGroup trivial_group(int degree);

/// Orbits of the natural action on {1..N}, each block sorted, blocks ordered
/// by smallest element.
std::vector<std::vector<int>> orbit_partition(const PermutationGroup& group);

bool is_transitive(const PermutationGroup& group);
bool is_normal_in(const PermutationGroup& sub, const PermutationGroup& group);

struct NormalOrbitsVerdict {
  bool equal_orbit_sizes = false;
  int orbit_size = 0;
  std::vector<std::vector<int>> orbits;
};

/// Checks H normal in transitive G implies all H-orbits share one size.
/// Throws not_subgroup / not_transitive / not_normal for invalid inputs.
NormalOrbitsVerdict check_normal_orbits(const PermutationGroup& group,
                                        const PermutationGroup& sub);

/// Every subgroup of S_degree, built bottom-up through the subgroup lattice
/// (each subgroup arises by repeatedly adjoining one element). Desk scale:
/// degree <= 5.
std::vector<PermutationGroup> all_subgroups(int degree);

/// Left coset representatives of `sub` in `group`, identity first.
std::vector<Permutation> left_coset_representatives(const PermutationGroup& group,
                                                    const PermutationGroup& sub);

/// A probability measure on S_N with finite support.
class GroupMeasure {
 public:
  GroupMeasure(int degree, std::map<Permutation, double> weights);
  static GroupMeasure dirac(const Permutation& p);
  static GroupMeasure uniform(const std::vector<Permutation>& support);
  static GroupMeasure uniform(const PermutationGroup& group);

  int degree() const { return degree_; }
  const std::map<Permutation, double>& weights() const { return weights_; }
  double weight(const Permutation& p) const;

 private:
  int degree_;
  std::map<Permutation, double> weights_;
};

/// (mu * nu)(g) = sum_{h k = g} mu(h) nu(k).
GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu);

/// (1/k) sum_{r=1..k} mu^{*r}, by iterated convolution.
GroupMeasure cesaro_average(const GroupMeasure& mu, long k);

/// Half the l1 distance.
double total_variation(const GroupMeasure& a, const GroupMeasure& b);

/// A product u_{i1 j1} ... u_{ik jk} of standard coordinates, as index pairs.
using CoordinateWord = std::vector<std::pair<int, int>>;

/// |{ g in G : g(j_t) = i_t for all t }| / |G|, exact.
Rational haar_moment_classical(const PermutationGroup& group, const CoordinateWord& word);

}  // namespace qf
