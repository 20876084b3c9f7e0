#include "core/perm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace qf {

namespace {

void require_same_degree(int a, int b, const char* what) {
  if (a != b) throw Error(ErrorCode::degree_mismatch, std::string(what) + ": degree mismatch");
}

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "permutation of degree 0");
  std::vector<bool> seen(n, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x - 1])
      throw Error(ErrorCode::invalid_argument, "images are not a bijection of {1..N}");
    seen[x - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  for (const auto& cyc : cycles) {
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      const int from = cyc[t];
      const int to = cyc[(t + 1) % cyc.size()];
      if (from < 1 || from > degree)
        throw Error(ErrorCode::invalid_argument, "cycle point out of range");
      img[from - 1] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::random(int degree, Rng& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  for (int i = degree - 1; i > 0; --i) {
    std::swap(img[i], img[rng.uniform_int(i + 1)]);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& q) const {
  require_same_degree(degree(), q.degree(), "compose");
  std::vector<int> img(images_.size());
  for (int x = 1; x <= degree(); ++x) img[x - 1] = images_[q.images_[x - 1] - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int x = 1; x <= degree(); ++x) img[images_[x - 1] - 1] = x;
  return Permutation(std::move(img));
}

Permutation Permutation::power(long long k) const {
  Permutation base = k >= 0 ? *this : inverse();
  long long e = k >= 0 ? k : -k;
  Permutation acc = Permutation::identity(degree());
  while (e > 0) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (images_[x - 1] != x) return false;
  return true;
}

int Permutation::order() const {
  Permutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree != other.degree) return false;
  for (const auto& e : elements)
    if (!other.contains(e)) return false;
  return true;
}

bool PermutationGroup::is_abelian() const {
  for (const auto& a : generators)
    for (const auto& b : generators)
      if (a.compose(b) != b.compose(a)) return false;
  return true;
}

PermutationGroup generate_group(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty())
    throw Error(ErrorCode::invalid_argument, "generate_group: empty generator list");
  const int degree = generators.front().degree();
  for (const auto& g : generators) require_same_degree(degree, g.degree(), "generate_group");

  std::unordered_set<std::vector<int>, ImagesHash> seen;
  std::deque<Permutation> queue;
  std::vector<Permutation> elements;

  const Permutation id = Permutation::identity(degree);
  seen.insert(id.images());
  queue.push_back(id);
  elements.push_back(id);

  while (!queue.empty()) {
    Permutation current = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = current.compose(g);
      if (seen.insert(next.images()).second) {
        if (elements.size() + 1 > cap)
          throw Error(ErrorCode::cap_exceeded, "generate_group: element cap exceeded");
        elements.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }

  std::sort(elements.begin(), elements.end());
  return PermutationGroup{degree, generators, std::move(elements)};
}

PermutationGroup symmetric_group(int degree) {
  if (degree == 1) return generate_group({Permutation::identity(1)});
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
  if (degree > 2) {
    std::vector<int> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 1);
    gens.push_back(Permutation::from_cycles(degree, {cyc}));
  }
  return generate_group(gens);
}

PermutationGroup trivial_group(int degree) {
  return generate_group({Permutation::identity(degree)});
}

std::vector<std::vector<int>> orbit_partition(const PermutationGroup& group) {
  const int n = group.degree;
  std::vector<bool> visited(n + 1, false);
  std::vector<std::vector<int>> blocks;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<int> block;
    std::deque<int> queue{start};
    visited[start] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      block.push_back(x);
      for (const auto& g : group.generators) {
        const int y = g(x);
        if (!visited[y]) {
          visited[y] = true;
          queue.push_back(y);
        }
        const int z = g.inverse()(x);
        if (!visited[z]) {
          visited[z] = true;
          queue.push_back(z);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_transitive(const PermutationGroup& group) {
  return orbit_partition(group).size() == 1;
}

bool is_normal_in(const PermutationGroup& sub, const PermutationGroup& group) {
  for (const auto& g : group.generators) {
    const Permutation ginv = g.inverse();
    for (const auto& h : sub.generators) {
      if (!sub.contains(g.compose(h).compose(ginv))) return false;
    }
  }
  return true;
}

NormalOrbitsVerdict check_normal_orbits(const PermutationGroup& group,
                                        const PermutationGroup& sub) {
  if (!sub.is_subgroup_of(group))
    throw Error(ErrorCode::not_subgroup, "check_normal_orbits: H is not a subgroup of G");
  if (!is_transitive(group))
    throw Error(ErrorCode::not_transitive, "check_normal_orbits: G is not transitive");
  if (!is_normal_in(sub, group))
    throw Error(ErrorCode::not_normal, "check_normal_orbits: H is not normal in G");

  NormalOrbitsVerdict verdict;
  verdict.orbits = orbit_partition(sub);
  verdict.orbit_size = static_cast<int>(verdict.orbits.front().size());
  verdict.equal_orbit_sizes = true;
  for (const auto& block : verdict.orbits) {
    if (static_cast<int>(block.size()) != verdict.orbit_size) {
      verdict.equal_orbit_sizes = false;
      verdict.orbit_size = 0;
      break;
    }
  }
  return verdict;
}

std::vector<PermutationGroup> all_subgroups(int degree) {
  if (degree > 5)
    throw Error(ErrorCode::cap_exceeded, "all_subgroups: degree above desk scale");
  const PermutationGroup full = symmetric_group(degree);

  std::set<std::vector<Permutation>> known;
  std::deque<PermutationGroup> queue;
  std::vector<PermutationGroup> out;

  PermutationGroup triv = trivial_group(degree);
  known.insert(triv.elements);
  queue.push_back(triv);
  out.push_back(std::move(triv));

  while (!queue.empty()) {
    PermutationGroup current = queue.front();
    queue.pop_front();
    for (const auto& g : full.elements) {
      if (current.contains(g)) continue;
      std::vector<Permutation> gens = current.generators;
      gens.push_back(g);
      PermutationGroup bigger = generate_group(gens);
      if (known.insert(bigger.elements).second) {
        queue.push_back(bigger);
        out.push_back(std::move(bigger));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const PermutationGroup& a, const PermutationGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Permutation> left_coset_representatives(const PermutationGroup& group,
                                                    const PermutationGroup& sub) {
  if (!sub.is_subgroup_of(group))
    throw Error(ErrorCode::not_subgroup, "coset representatives: not a subgroup");
  // group.elements is sorted and the identity is lexicographically first, so
  // the identity represents its own coset.
  std::vector<Permutation> reps;
  std::set<std::vector<int>> covered;
  for (const auto& g : group.elements) {
    if (covered.count(g.images())) continue;
    reps.push_back(g);
    for (const auto& h : sub.elements) covered.insert(g.compose(h).images());
  }
  return reps;
}

GroupMeasure::GroupMeasure(int degree, std::map<Permutation, double> weights)
    : degree_(degree), weights_(std::move(weights)) {
  double mass = 0.0;
  for (const auto& [p, w] : weights_) {
    require_same_degree(degree_, p.degree(), "measure support");
    if (w < -1e-15) throw Error(ErrorCode::invalid_argument, "negative weight");
    mass += w;
  }
  if (std::abs(mass - 1.0) > 1e-12)
    throw Error(ErrorCode::invalid_argument, "weights must sum to 1 within 1e-12");
}

GroupMeasure GroupMeasure::dirac(const Permutation& p) {
  return GroupMeasure(p.degree(), {{p, 1.0}});
}

GroupMeasure GroupMeasure::uniform(const std::vector<Permutation>& support) {
  if (support.empty()) throw Error(ErrorCode::invalid_argument, "uniform: empty support");
  std::map<Permutation, double> w;
  for (const auto& p : support) w[p] += 1.0 / static_cast<double>(support.size());
  return GroupMeasure(support.front().degree(), std::move(w));
}

GroupMeasure GroupMeasure::uniform(const PermutationGroup& group) {
  return uniform(group.elements);
}

double GroupMeasure::weight(const Permutation& p) const {
  auto it = weights_.find(p);
  return it == weights_.end() ? 0.0 : it->second;
}

GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu) {
  require_same_degree(mu.degree(), nu.degree(), "convolve");
  std::map<Permutation, double> out;
  for (const auto& [h, wh] : mu.weights())
    for (const auto& [k, wk] : nu.weights()) out[h.compose(k)] += wh * wk;
  return GroupMeasure(mu.degree(), std::move(out));
}

GroupMeasure cesaro_average(const GroupMeasure& mu, long k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "cesaro_average: k must be >= 1");
  std::map<Permutation, double> sum;
  GroupMeasure power = mu;
  for (long r = 1; r <= k; ++r) {
    if (r > 1) power = convolve(power, mu);
    for (const auto& [p, w] : power.weights()) sum[p] += w;
  }
  for (auto& [p, w] : sum) w /= static_cast<double>(k);
  return GroupMeasure(mu.degree(), std::move(sum));
}

double total_variation(const GroupMeasure& a, const GroupMeasure& b) {
  require_same_degree(a.degree(), b.degree(), "total_variation");
  double sum = 0.0;
  for (const auto& [p, w] : a.weights()) sum += std::abs(w - b.weight(p));
  for (const auto& [p, w] : b.weights())
    if (a.weights().find(p) == a.weights().end()) sum += std::abs(w);
  return 0.5 * sum;
}

Rational haar_moment_classical(const PermutationGroup& group, const CoordinateWord& word) {
  for (const auto& [i, j] : word) {
    if (i < 1 || i > group.degree || j < 1 || j > group.degree)
      throw Error(ErrorCode::invalid_argument, "coordinate word index out of range");
  }
  long long count = 0;
  for (const auto& g : group.elements) {
    bool match = true;
    for (const auto& [i, j] : word) {
      if (g(j) != i) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return Rational(count, static_cast<long long>(group.order()));
}

}  // namespace qf
