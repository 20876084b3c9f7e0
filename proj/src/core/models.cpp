#include "core/models.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>

namespace qf {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex root_power(int order, long exp) {
  long e = exp % order;
  if (e < 0) e += order;
  return std::polar(1.0, kTwoPi * static_cast<double>(e) / static_cast<double>(order));
}

long mod_nonneg(long value, long modulus) {
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

void validate_family(const ModelFamily& family) {
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) {
          if (f.k < 1) throw Error(ErrorCode::invalid_argument, "cyclic_flat: K >= 1 required");
        } else if constexpr (std::is_same_v<T, FreeProductFamily>) {
          if (f.k < 1 || f.m < 1)
            throw Error(ErrorCode::invalid_argument, "free_product: K, M >= 1 required");
        } else if constexpr (std::is_same_v<T, DirectProductPartsFamily>) {
          if (f.k < 1 || f.parts.empty())
            throw Error(ErrorCode::invalid_argument, "direct-product parts: bad parameters");
          for (int p : f.parts)
            if (p < 1) throw Error(ErrorCode::invalid_argument, "part arity must be >= 1");
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily> ||
                             std::is_same_v<T, CommutingPowersFamily>) {
          if (f.k < 1 || f.l < 1 || f.m < 1 || f.k % f.l != 0)
            throw Error(ErrorCode::invalid_argument, "block family: K = L*R divisibility fails");
        } else if constexpr (std::is_same_v<T, FreePairWithCenterFamily>) {
          if (f.k < 2)
            throw Error(ErrorCode::invalid_argument, "free pair with center: K >= 2 required");
        } else if constexpr (std::is_same_v<T, ClassicalFamily>) {
          if (!validate_square(f.square.grid, f.square.k).valid)
            throw Error(ErrorCode::invalid_square, "classical family: invalid square");
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          if (!f.subgroup.is_subgroup_of(f.group))
            throw Error(ErrorCode::not_subgroup, "induced family: not a subgroup");
          if (!f.subgroup.is_abelian())
            throw Error(ErrorCode::invalid_argument, "induced family: subgroup not abelian");
        }
      },
      family);
}

int fiber_dimension(const ModelFamily& family) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ClassicalFamily>)
          return f.square.k;
        else if constexpr (std::is_same_v<T, InducedFamily>)
          return static_cast<int>(f.group.order() / f.subgroup.order());
        else
          return f.k;
      },
      family);
}

int block_count(const ModelFamily& family) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>)
          return 1;
        else if constexpr (std::is_same_v<T, FreeProductFamily>)
          return f.m;
        else if constexpr (std::is_same_v<T, DirectProductPartsFamily>)
          return static_cast<int>(f.parts.size());
        else if constexpr (std::is_same_v<T, AmalgamatedFamily> ||
                           std::is_same_v<T, CommutingPowersFamily>)
          return f.m;
        else if constexpr (std::is_same_v<T, FreePairWithCenterFamily>)
          return 3;
        else if constexpr (std::is_same_v<T, InducedFamily>)
          return static_cast<int>(f.group.generators.size());
        else
          return 0;
      },
      family);
}

std::string family_name(const ModelFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) return "cyclic_flat";
        if constexpr (std::is_same_v<T, FreeProductFamily>) return "free_product";
        if constexpr (std::is_same_v<T, DirectProductPartsFamily>)
          return "free_product_of_direct_products";
        if constexpr (std::is_same_v<T, AmalgamatedFamily>) return "amalgamated";
        if constexpr (std::is_same_v<T, CommutingPowersFamily>) return "commuting_powers";
        if constexpr (std::is_same_v<T, FreePairWithCenterFamily>)
          return "free_pair_with_center";
        if constexpr (std::is_same_v<T, ClassicalFamily>) return "classical";
        if constexpr (std::is_same_v<T, InducedFamily>) return "induced_virtually_abelian";
      },
      family);
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace {

/// Unitary whose interleaved column group (t, t+L, ..., t+(R-1)L) is a Haar
/// basis of the block V_{place(t)}.
CMatrix sample_block_unitary(int k, int l, Rng& rng,
                             const std::function<int(int)>& place) {
  const int r = k / l;
  CMatrix u = CMatrix::Zero(k, k);
  for (int t = 1; t <= l; ++t) {
    const CMatrix b = haar_unitary(r, rng);
    const int target = place(t);  // one-based block index
    for (int s = 0; s < r; ++s)
      for (int row = 0; row < r; ++row)
        u((target - 1) * r + row, (t - 1) + s * l) = b(row, s);
  }
  return u;
}

}  // namespace

ModelPoint sample_point(const ModelFamily& family, Rng& rng) {
  validate_family(family);
  ModelPoint point;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) {
          point.frame = frame_from_unitary(haar_unitary(f.k, rng));
        } else if constexpr (std::is_same_v<T, FreeProductFamily>) {
          for (int i = 0; i < f.m; ++i) point.unitaries.push_back(haar_unitary(f.k, rng));
        } else if constexpr (std::is_same_v<T, DirectProductPartsFamily>) {
          for (std::size_t p = 0; p < f.parts.size(); ++p) {
            point.unitaries.push_back(haar_unitary(f.k, rng));
            for (int s = 0; s < f.parts[p]; ++s)
              point.permutations.push_back(Permutation::random(f.k, rng));
          }
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily>) {
          for (int i = 0; i < f.m; ++i)
            point.unitaries.push_back(
                sample_block_unitary(f.k, f.l, rng, [](int t) { return t; }));
        } else if constexpr (std::is_same_v<T, CommutingPowersFamily>) {
          for (int i = 0; i < f.m; ++i) {
            const Permutation sigma = Permutation::random(f.l, rng);
            const Permutation inv = sigma.inverse();
            point.permutations.push_back(sigma);
            point.unitaries.push_back(
                sample_block_unitary(f.k, f.l, rng, [&](int t) { return inv(t); }));
          }
        } else if constexpr (std::is_same_v<T, FreePairWithCenterFamily>) {
          point.unitaries.push_back(haar_unitary(f.k, rng));
          point.permutations.push_back(Permutation::random(f.k, rng));
          point.permutations.push_back(Permutation::random(f.k, rng));
        } else if constexpr (std::is_same_v<T, ClassicalFamily>) {
          point.frame = frame_from_unitary(haar_unitary(f.square.k, rng));
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          point.character = rng.uniform_int(static_cast<int>(f.subgroup.order()));
        }
      },
      family);
  return point;
}

double point_defect(const ModelFamily& family, const ModelPoint& point) {
  double worst = 0.0;
  auto unitarity = [&](const CMatrix& u) {
    const int n = static_cast<int>(u.rows());
    worst = std::max(worst, (u.adjoint() * u - CMatrix::Identity(n, n)).norm());
  };
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily> ||
                      std::is_same_v<T, ClassicalFamily>) {
          worst = std::max(worst, point.frame.defect());
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily> ||
                             std::is_same_v<T, CommutingPowersFamily>) {
          const int r = f.r();
          for (int i = 0; i < f.m; ++i) {
            const CMatrix& u = point.unitaries[i];
            unitarity(u);
            for (int t = 1; t <= f.l; ++t) {
              int target = t;
              if constexpr (std::is_same_v<T, CommutingPowersFamily>)
                target = point.permutations[i].inverse()(t);
              for (int s = 0; s < r; ++s) {
                for (int row = 0; row < f.k; ++row) {
                  if (row >= (target - 1) * r && row < target * r) continue;
                  worst = std::max(worst, std::abs(u(row, (t - 1) + s * f.l)));
                }
              }
            }
          }
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          if (point.character < 0 ||
              point.character >= static_cast<int>(f.subgroup.order()))
            worst = std::max(worst, 1.0);
        } else {
          for (const auto& u : point.unitaries) unitarity(u);
        }
      },
      family);
  return worst;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

CMatrix diagonal_w_power(int k_order, long exp) {
  CMatrix w = CMatrix::Zero(k_order, k_order);
  for (int j = 1; j <= k_order; ++j)
    w(j - 1, j - 1) = root_power(k_order, static_cast<long>(j) * exp);
  return w;
}

CMatrix diagonal_w_sigma_power(int k_order, const Permutation& sigma, long exp) {
  if (sigma.degree() != k_order)
    throw Error(ErrorCode::degree_mismatch, "diagonal_w_sigma_power: degree mismatch");
  CMatrix w = CMatrix::Zero(k_order, k_order);
  for (int j = 1; j <= k_order; ++j)
    w(j - 1, j - 1) = root_power(k_order, static_cast<long>(sigma(j)) * exp);
  return w;
}

CMatrix eval_generator(const ModelFamily& family, const ModelPoint& point, int block,
                       int gen) {
  if (block < 1 || block > block_count(family))
    throw Error(ErrorCode::invalid_argument, "eval_generator: block out of range");
  return std::visit(
      [&](const auto& f) -> CMatrix {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) {
          CMatrix out = CMatrix::Zero(f.k, f.k);
          for (int j = 1; j <= f.k; ++j)
            out += root_power(f.k, j) * point.frame.projections[j - 1];
          return out;
        } else if constexpr (std::is_same_v<T, FreeProductFamily> ||
                             std::is_same_v<T, AmalgamatedFamily> ||
                             std::is_same_v<T, CommutingPowersFamily>) {
          const CMatrix& u = point.unitaries[block - 1];
          return u * diagonal_w_power(f.k, 1) * u.adjoint();
        } else if constexpr (std::is_same_v<T, DirectProductPartsFamily>) {
          if (gen < 1 || gen > f.parts[block - 1])
            throw Error(ErrorCode::invalid_argument, "eval_generator: generator out of range");
          int offset = 0;
          for (int p = 0; p < block - 1; ++p) offset += f.parts[p];
          const CMatrix& u = point.unitaries[block - 1];
          return u * diagonal_w_sigma_power(f.k, point.permutations[offset + gen - 1], 1) *
                 u.adjoint();
        } else if constexpr (std::is_same_v<T, FreePairWithCenterFamily>) {
          const CMatrix& u = point.unitaries[0];
          if (block == 3) return u * diagonal_w_power(f.k, 1) * u.adjoint();
          const Permutation inv = point.permutations[block - 1].inverse();
          CMatrix d = CMatrix::Zero(f.k, f.k);
          for (int j = 1; j <= f.k; ++j) d(j - 1, j - 1) = root_power(f.k, inv(j));
          return u * d * u.adjoint();
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          const InducedModel model = prepare_induced(f);
          return induced_rep(model, point.character, f.group.generators[block - 1]);
        } else {
          throw Error(ErrorCode::invalid_argument,
                      "eval_generator: family has no generator letters");
        }
      },
      family);
}

CMatrix eval_word(const ModelFamily& family, const ModelPoint& point,
                  const ReducedWord& word) {
  const int k = fiber_dimension(family);
  CMatrix acc = CMatrix::Identity(k, k);

  if (const auto* f = std::get_if<InducedFamily>(&family)) {
    Permutation gamma = Permutation::identity(f->group.degree);
    for (const auto& letter : word.letters)
      gamma = gamma.compose(f->group.generators[letter.block - 1].power(letter.exp));
    const InducedModel model = prepare_induced(*f);
    return induced_rep(model, point.character, gamma);
  }

  if (word.amalgam_exp != 0) {
    const auto* f = std::get_if<AmalgamatedFamily>(&family);
    if (!f) throw Error(ErrorCode::invalid_argument, "amalgam power outside amalgamated family");
    const CMatrix g1 = eval_generator(family, point, 1);
    for (int c = 0; c < word.amalgam_exp * f->r(); ++c) acc = acc * g1;
  }
  for (const auto& letter : word.letters) {
    const CMatrix g = eval_generator(family, point, letter.block);
    const long reps = mod_nonneg(letter.exp, fiber_dimension(family));
    for (long c = 0; c < reps; ++c) acc = acc * g;
  }
  if (const auto* f = std::get_if<DirectProductPartsFamily>(&family)) {
    for (const auto& syl : word.syllables) {
      for (std::size_t s = 0; s < syl.exps.size(); ++s) {
        const CMatrix g = eval_generator(family, point, syl.part, static_cast<int>(s) + 1);
        const long reps = mod_nonneg(syl.exps[s], f->k);
        for (long c = 0; c < reps; ++c) acc = acc * g;
      }
    }
  } else if (!word.syllables.empty()) {
    throw Error(ErrorCode::invalid_argument, "syllable word outside direct-product family");
  }
  return acc;
}

namespace {

/// R x R unitary formed by the columns of `u` that land in the coordinate
/// block starting at row (block-1)*r, taken from column positions
/// col0, col0+l, ..., col0+(r-1)l.
CMatrix restricted_block(const CMatrix& u, int l, int r, int block, int col0) {
  CMatrix c(r, r);
  for (int s = 0; s < r; ++s)
    for (int row = 0; row < r; ++row) c(row, s) = u((block - 1) * r + row, (col0 - 1) + s * l);
  return c;
}

/// diag((w^L)^(s*exp)) for s = 0..R-1, the block form of W^(L*exp).
CMatrix block_diagonal_power(int r, long exp) {
  CMatrix d = CMatrix::Zero(r, r);
  for (int s = 0; s < r; ++s) d(s, s) = root_power(r, static_cast<long>(s) * exp);
  return d;
}

}  // namespace

Complex word_trace(const ModelFamily& family, const ModelPoint& point,
                   const ReducedWord& word) {
  return std::visit(
      [&](const auto& f) -> Complex {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) {
          long exp = 0;
          for (const auto& letter : word.letters) exp += letter.exp;
          Complex sum = 0.0;
          for (int j = 1; j <= f.k; ++j)
            sum += root_power(f.k, static_cast<long>(j) * exp) *
                   point.frame.projections[j - 1].trace();
          return sum / static_cast<double>(f.k);
        } else if constexpr (std::is_same_v<T, FreeProductFamily>) {
          CMatrix acc = CMatrix::Identity(f.k, f.k);
          for (const auto& letter : word.letters) {
            const CMatrix& u = point.unitaries[letter.block - 1];
            acc = acc * (u * diagonal_w_power(f.k, letter.exp) * u.adjoint());
          }
          return acc.trace() / static_cast<double>(f.k);
        } else if constexpr (std::is_same_v<T, DirectProductPartsFamily>) {
          CMatrix acc = CMatrix::Identity(f.k, f.k);
          for (const auto& syl : word.syllables) {
            int offset = 0;
            for (int p = 0; p < syl.part - 1; ++p) offset += f.parts[p];
            CMatrix d = CMatrix::Identity(f.k, f.k);
            for (std::size_t s = 0; s < syl.exps.size(); ++s)
              d = d * diagonal_w_sigma_power(
                          f.k, point.permutations[offset + static_cast<int>(s)], syl.exps[s]);
            const CMatrix& u = point.unitaries[syl.part - 1];
            acc = acc * (u * d * u.adjoint());
          }
          return acc.trace() / static_cast<double>(f.k);
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily>) {
          const int r = f.r();
          long exp_sum = static_cast<long>(word.amalgam_exp) * r;
          for (const auto& letter : word.letters) exp_sum += letter.exp;
          Complex total = 0.0;
          for (int t = 1; t <= f.l; ++t) {
            CMatrix acc = CMatrix::Identity(r, r);
            for (const auto& letter : word.letters) {
              const CMatrix c =
                  restricted_block(point.unitaries[letter.block - 1], f.l, r, t, t);
              acc = acc * (c * block_diagonal_power(r, letter.exp) * c.adjoint());
            }
            total += root_power(f.k, static_cast<long>(t) * exp_sum) * acc.trace() /
                     static_cast<double>(r);
          }
          return total / static_cast<double>(f.l);
        } else if constexpr (std::is_same_v<T, CommutingPowersFamily>) {
          const int r = f.r();
          Complex total = 0.0;
          for (int tau = 1; tau <= f.l; ++tau) {
            long phase = 0;
            CMatrix acc = CMatrix::Identity(r, r);
            for (const auto& letter : word.letters) {
              const Permutation& sigma = point.permutations[letter.block - 1];
              phase += static_cast<long>(sigma(tau)) * letter.exp;
              const CMatrix c = restricted_block(point.unitaries[letter.block - 1], f.l, r,
                                                 tau, sigma(tau));
              acc = acc * (c * block_diagonal_power(r, letter.exp) * c.adjoint());
            }
            total += root_power(f.k, phase) * acc.trace() / static_cast<double>(r);
          }
          return total / static_cast<double>(f.l);
        } else if constexpr (std::is_same_v<T, FreePairWithCenterFamily>) {
          Complex total = 0.0;
          for (int m = 1; m <= f.k; ++m) {
            long phase = 0;
            for (const auto& letter : word.letters) {
              const int pos = letter.block == 3
                                  ? m
                                  : point.permutations[letter.block - 1].inverse()(m);
              phase += static_cast<long>(pos) * letter.exp;
            }
            total += root_power(f.k, phase);
          }
          return total / static_cast<double>(f.k);
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          const CMatrix rep = eval_word(family, point, word);
          return rep.trace() / static_cast<double>(rep.rows());
        } else {
          throw Error(ErrorCode::invalid_argument, "word_trace: family has no word trace");
        }
      },
      family);
}

CMatrix eval_classical_coordinate(const SparseLatinSquare& square,
                                  const ProjectionFrame& frame, int i, int j) {
  if (frame.dimension != square.k)
    throw Error(ErrorCode::degree_mismatch,
                "eval_classical_coordinate: frame dimension != K");
  const int symbol = square.at(i, j);
  if (symbol == 0) return CMatrix::Zero(square.k, square.k);
  return frame.projections[symbol - 1];
}

CMatrix eval_cyclic_coordinate(const ProjectionFrame& frame, int i, int j) {
  const int n = frame.dimension;
  int index = (j - i) % n;
  if (index <= 0) index += n;  // index 0 means P_N
  return frame.projections[index - 1];
}

NumericMagicUnitary classical_magic(const SparseLatinSquare& square,
                                    const ProjectionFrame& frame) {
  NumericMagicUnitary m;
  m.size = square.n;
  m.fiber = square.k;
  m.entries.assign(square.n, std::vector<CMatrix>(square.n));
  for (int i = 1; i <= square.n; ++i)
    for (int j = 1; j <= square.n; ++j)
      m.entries[i - 1][j - 1] = eval_classical_coordinate(square, frame, i, j);
  return m;
}

NumericMagicUnitary cyclic_magic(const ProjectionFrame& frame) {
  const int n = frame.dimension;
  NumericMagicUnitary m;
  m.size = n;
  m.fiber = n;
  m.entries.assign(n, std::vector<CMatrix>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.entries[i - 1][j - 1] = eval_cyclic_coordinate(frame, i, j);
  return m;
}

// ---------------------------------------------------------------------------
// Characters and induced representations
// ---------------------------------------------------------------------------

Complex CharacterTable::value(int character, int element_index) const {
  return root_power(exponent, exponents[character][element_index]);
}

int CharacterTable::element_index(const Permutation& p) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p)
    throw Error(ErrorCode::invalid_argument, "character table: element not in group");
  return static_cast<int>(it - elements.begin());
}

CharacterTable character_table(const PermutationGroup& abelian_group) {
  if (!abelian_group.is_abelian())
    throw Error(ErrorCode::invalid_argument, "character_table: group is not abelian");

  CharacterTable table;
  table.elements = abelian_group.elements;

  long long exponent = 1;
  for (const auto& e : table.elements) exponent = lcm_ll(exponent, e.order());
  table.exponent = static_cast<int>(exponent);

  // A short generating sequence keeps the assignment search small.
  std::vector<Permutation> gens;
  {
    PermutationGroup span = trivial_group(abelian_group.degree);
    for (const auto& g : abelian_group.generators) {
      if (span.contains(g)) continue;
      gens.push_back(g);
      span = generate_group(gens);
    }
    for (const auto& g : abelian_group.elements) {
      if (span.order() == abelian_group.order()) break;
      if (span.contains(g)) continue;
      gens.push_back(g);
      span = generate_group(gens);
    }
  }

  const int n = static_cast<int>(table.elements.size());
  std::vector<int> orders;
  for (const auto& g : gens) orders.push_back(g.order());

  std::vector<int> choice(gens.size(), 0);
  std::function<void(std::size_t)> search = [&](std::size_t pos) {
    if (pos == gens.size()) {
      // extend the generator assignment multiplicatively; reject on conflict
      std::vector<int> exps(n, -1);
      const int id_index = table.element_index(Permutation::identity(abelian_group.degree));
      exps[id_index] = 0;
      std::deque<int> queue{id_index};
      while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          const Permutation next = table.elements[at].compose(gens[gi]);
          const int ni = table.element_index(next);
          const int step = (table.exponent / orders[gi]) * choice[gi];
          const int val = static_cast<int>(mod_nonneg(exps[at] + step, table.exponent));
          if (exps[ni] == -1) {
            exps[ni] = val;
            queue.push_back(ni);
          } else if (exps[ni] != val) {
            return;
          }
        }
      }
      table.exponents.push_back(std::move(exps));
      return;
    }
    for (int b = 0; b < orders[pos]; ++b) {
      choice[pos] = b;
      search(pos + 1);
    }
  };
  search(0);

  if (static_cast<int>(table.exponents.size()) != n)
    throw Error(ErrorCode::numeric, "character_table: dual size mismatch");
  return table;
}

InducedModel prepare_induced(const InducedFamily& family) {
  validate_family(ModelFamily{family});
  InducedModel model;
  model.group = family.group;
  model.subgroup = family.subgroup;
  model.coset_reps = left_coset_representatives(family.group, family.subgroup);
  model.table = character_table(family.subgroup);
  return model;
}

CMatrix induced_rep(const InducedModel& model, int character, const Permutation& gamma) {
  if (!model.group.contains(gamma))
    throw Error(ErrorCode::invalid_argument, "induced_rep: element not in the group");
  if (character < 0 || character >= static_cast<int>(model.table.exponents.size()))
    throw Error(ErrorCode::invalid_argument, "induced_rep: character index out of range");
  const int d = model.index();
  CMatrix rep = CMatrix::Zero(d, d);
  for (int y = 0; y < d; ++y) {
    for (int x = 0; x < d; ++x) {
      const Permutation u =
          model.coset_reps[x].inverse().compose(gamma).compose(model.coset_reps[y]);
      if (!model.subgroup.contains(u)) continue;
      rep(x, y) = model.table.value(character, model.table.element_index(u));
    }
  }
  return rep;
}

}  // namespace qf
