#include "core/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/analysis.hpp"
#include "core/latin.hpp"
#include "core/magic.hpp"
#include "core/models.hpp"
#include "core/perm.hpp"

namespace qf {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

PermutationGroup diagonal_s2_in_s4() {
  return generate_group({Permutation::from_cycles(4, {{1, 2}, {3, 4}})});
}

PermutationGroup dihedral_d4() {
  return generate_group({Permutation::from_cycles(4, {{1, 2, 3, 4}}),
                         Permutation::from_cycles(4, {{1, 3}})});
}

// Independent tuple criterion: K elements of G whose values at every point
// are pairwise distinct.
bool tuple_criterion(const PermutationGroup& group, int k) {
  std::vector<std::size_t> idx(k, 0);
  const std::size_t order = group.order();
  while (true) {
    bool ok = true;
    for (int point = 1; point <= group.degree && ok; ++point) {
      for (int a = 0; a < k && ok; ++a)
        for (int b = a + 1; b < k && ok; ++b)
          if (group.elements[idx[a]](point) == group.elements[idx[b]](point)) ok = false;
    }
    if (ok) return true;
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == order) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return false;
  }
}

CriterionResult criterion_latin_dictionary(const AcceptanceOptions&) {
  CriterionResult result{1, "latin-dictionary", true, ""};
  long long round_trips = 0;

  for (int n = 1; n <= 4 && result.passed; ++n) {
    for (int k = 1; k <= std::min(n, 3) && result.passed; ++k) {
      for (const auto& square : enumerate_squares(n, k)) {
        const auto sigmas = to_permutations(square);
        const auto rebuilt = from_permutations(sigmas);
        const auto inverses = to_permutations(rebuilt);
        for (int x = 0; x < k; ++x) {
          if (inverses[x] != sigmas[x].inverse()) {
            result.passed = false;
            result.details = "round trip failed at N=" + std::to_string(n) +
                             " K=" + std::to_string(k);
            break;
          }
        }
        ++round_trips;
        if (!result.passed) break;
      }
    }
  }

  long long equivalences = 0;
  for (int degree : {3, 4}) {
    for (const auto& group : all_subgroups(degree)) {
      for (int k = 1; k <= 3 && result.passed; ++k) {
        if (k > degree) continue;
        const bool has_square = !admissible_squares(degree, k, group).empty();
        const bool has_tuple = tuple_criterion(group, k);
        if (has_square != has_tuple) {
          result.passed = false;
          result.details = "existence mismatch at degree " + std::to_string(degree) +
                           " |G|=" + std::to_string(group.order()) + " K=" + std::to_string(k);
        }
        ++equivalences;
      }
      if (!result.passed) break;
    }
    if (!result.passed) break;
  }

  if (result.passed)
    result.details = std::to_string(round_trips) + " round trips, " +
                     std::to_string(equivalences) + " existence equivalences";
  return result;
}

CriterionResult criterion_exact_stationarity(const AcceptanceOptions& options) {
  CriterionResult result{2, "exact-stationarity", true, ""};
  struct Config {
    PermutationGroup group;
    int k;
    std::string name;
  };
  const std::vector<Config> configs = {
      {symmetric_group(2), 2, "S2"},
      {symmetric_group(3), 3, "S3"},
      {diagonal_s2_in_s4(), 2, "diagonal S2 in S4"},
  };

  std::ostringstream detail;
  for (const auto& config : configs) {
    const auto words = all_coordinate_words(config.group.degree, 3);
    const auto exact = stationarity_check_classical(config.group, config.k, words,
                                                    StationarityMode::exact);
    const auto mc = stationarity_check_classical(config.group, config.k, words,
                                                 StationarityMode::monte_carlo, 100000,
                                                 options.seed);
    if (!exact.pass || !mc.pass) {
      result.passed = false;
      result.details = config.name + (exact.pass ? " monte-carlo" : " exact") + " mode failed";
      return result;
    }
    detail << config.name << ": " << words.size() << " words exact+mc; ";
  }
  result.details = detail.str();
  return result;
}

CriterionResult criterion_cesaro(const AcceptanceOptions&) {
  CriterionResult result{3, "cesaro-hopf-image", false, ""};
  const auto square = make_square({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, 2);
  const auto report = classical_cesaro_hopf_image(square, 10000, 1e-6);
  result.passed = report.passed;
  std::ostringstream detail;
  if (report.passed) {
    detail << "TV < 1e-6 reached at k=" << report.k_reached;
  } else {
    detail << "TV at k=10^4 is " << format_double(report.tv_at_kmax)
           << " (> 1e-6; the Cesaro average of this parity-periodic walk converges at rate "
              "2/(3k), first passage of 1e-6 at k=";
    const auto longrun = classical_cesaro_hopf_image(square, 1000000, 1e-6);
    detail << (longrun.passed ? std::to_string(longrun.k_reached) : std::string(">1e6")) << ")";
  }
  result.details = detail.str();
  return result;
}

CriterionResult criterion_free_product_faithful(const AcceptanceOptions& options) {
  CriterionResult result{4, "free-product-inner-faithful", true, ""};
  const ModelFamily family = FreeProductFamily{3, 2};

  const auto scan = inner_faithfulness_scan(family, 6, 100, options.survival_tol, options.seed);
  if (!scan.all_survive) {
    for (const auto& row : scan.words) {
      if (row.stats.verdict != Survival::survives) {
        result.passed = false;
        result.details = "word " + word_to_string(row.word) + " not separated";
        return result;
      }
    }
  }

  // Closed-form trace against direct evaluation on random word/point pairs.
  Rng rng = Rng::derive(options.seed, 999);
  double worst = 0.0;
  for (int pair = 0; pair < 200; ++pair) {
    const int len = 1 + rng.uniform_int(6);
    std::vector<WordLetter> raw;
    for (int t = 0; t < len; ++t)
      raw.push_back({1 + rng.uniform_int(2), 1 + static_cast<long>(rng.uniform_int(2))});
    const ReducedWord word = canonical_word(family, raw);
    if (word.is_identity()) continue;
    const ModelPoint point = sample_point(family, rng);
    const Complex direct = eval_word(family, point, word).trace() / 3.0;
    const Complex closed = word_trace(family, point, word);
    worst = std::max(worst, std::abs(direct - closed));
  }
  if (worst > options.match_tol) {
    result.passed = false;
    result.details = "closed form deviates from direct evaluation by " + format_double(worst);
    return result;
  }
  result.details = std::to_string(scan.words.size()) +
                   " words survive; trace match defect " + format_double(worst);
  return result;
}

CriterionResult criterion_amalgamated(const AcceptanceOptions& options) {
  CriterionResult result{5, "amalgamated-family", true, ""};
  const AmalgamatedFamily fam{4, 2, 2};
  const ModelFamily family = fam;

  Rng rng = Rng::derive(options.seed, 5);
  double worst_relation = 0.0;
  for (int s = 0; s < 100; ++s) {
    const ModelPoint point = sample_point(family, rng);
    const CMatrix a = eval_generator(family, point, 1);
    const CMatrix b = eval_generator(family, point, 2);
    const CMatrix a2 = a * a;
    const CMatrix b2 = b * b;
    worst_relation = std::max(worst_relation, (a2 - b2).norm());
  }
  if (worst_relation >= 1e-12) {
    result.passed = false;
    result.details = "relation residual " + format_double(worst_relation);
    return result;
  }

  const auto scan = inner_faithfulness_scan(family, 4, 100, options.survival_tol, options.seed);
  if (!scan.all_survive) {
    result.passed = false;
    result.details = "some normal-form word failed to survive";
    return result;
  }
  result.details = "relation residual " + format_double(worst_relation) + "; " +
                   std::to_string(scan.words.size()) + " words survive";
  return result;
}

CriterionResult criterion_commuting_powers(const AcceptanceOptions& options) {
  CriterionResult result{6, "commuting-powers-family", true, ""};
  const CommutingPowersFamily fam{4, 2, 2};
  const ModelFamily family = fam;

  Rng rng = Rng::derive(options.seed, 6);
  double worst_comm = 0.0;
  for (int s = 0; s < 100; ++s) {
    const ModelPoint point = sample_point(family, rng);
    const CMatrix a = eval_generator(family, point, 1);
    const CMatrix b = eval_generator(family, point, 2);
    const CMatrix a2 = a * a;
    const CMatrix b2 = b * b;
    worst_comm = std::max(worst_comm, (a2 * b2 - b2 * a2).norm());
  }
  if (worst_comm >= 1e-12) {
    result.passed = false;
    result.details = "commutator residual " + format_double(worst_comm);
    return result;
  }

  const auto scan = inner_faithfulness_scan(family, 4, 100, options.survival_tol, options.seed);
  if (!scan.all_survive) {
    result.passed = false;
    result.details = "some normal-form word failed to survive";
    return result;
  }
  result.details = "commutator residual " + format_double(worst_comm) + "; " +
                   std::to_string(scan.words.size()) + " words survive";
  return result;
}

CriterionResult criterion_obstruction(const AcceptanceOptions& options) {
  CriterionResult result{7, "negative-control", true, ""};
  std::ostringstream detail;
  for (int k : {2, 3}) {
    const auto report =
        commutation_obstruction_check(k, 100, options.seed + k, 1e-10, options.survival_tol);
    if (!report.pass) {
      result.passed = false;
      result.details = "K=" + std::to_string(k) + " failed (commutator norm " +
                       format_double(report.max_commutator_norm) + ")";
      return result;
    }
    detail << "K=" << k << " commutator norm " << format_double(report.max_commutator_norm)
           << "; ";
  }
  result.details = detail.str();
  return result;
}

CriterionResult criterion_thoma(const AcceptanceOptions&) {
  CriterionResult result{8, "thoma-model", true, ""};
  const auto s3 = symmetric_group(3);
  const auto a3 = generate_group({Permutation::from_cycles(3, {{1, 2, 3}})});
  const auto d4 = dihedral_d4();
  const auto z4 = generate_group({Permutation::from_cycles(4, {{1, 2, 3, 4}})});

  double worst = 0.0;
  for (const auto& [group, sub] :
       std::vector<std::pair<PermutationGroup, PermutationGroup>>{{s3, a3}, {d4, z4}}) {
    const auto report = thoma_stationarity_check(group, sub, 1e-12);
    if (!report.pass) {
      result.passed = false;
      result.details = "delta defect above 1e-12";
      return result;
    }
    for (const auto& row : report.rows) worst = std::max(worst, row.defect);
  }
  result.details = "S3/A3 and D4/Z4 exact within 1e-12 (max defect " + format_double(worst) +
                   ")";
  return result;
}

CriterionResult criterion_rank_orbits(const AcceptanceOptions& options) {
  CriterionResult result{9, "rank-pattern-and-orbits", true, ""};

  // Group-dual model of Z_2 * Z_2 inside S_4^+: two circulant 2x2 blocks.
  Rng rng = Rng::derive(options.seed, 9);
  std::vector<NumericMagicUnitary> samples;
  for (int s = 0; s < 10; ++s) {
    const auto frame1 = frame_from_unitary(haar_unitary(2, rng));
    const auto frame2 = frame_from_unitary(haar_unitary(2, rng));
    samples.push_back(assemble_block_magic({cyclic_magic(frame1), cyclic_magic(frame2)}));
  }
  const auto orbits = orbit_decomposition(std::span<const NumericMagicUnitary>(samples), 1e-8);
  const std::vector<std::vector<int>> expected_blocks{{1, 2}, {3, 4}};
  if (orbits.blocks != expected_blocks || quasi_transitivity(orbits) != std::optional<int>(2)) {
    result.passed = false;
    result.details = "orbit decomposition of the block model is not 2+2";
    return result;
  }
  for (const auto& sample : samples) {
    const BMatrix pattern = rank_pattern(sample, 1e-8, true);
    if (pattern != orbits.epsilon) {
      result.passed = false;
      result.details = "rank pattern differs from the epsilon matrix";
      return result;
    }
  }

  // Normal subgroups of transitive subgroups of S_4 have equal orbit sizes.
  int checked = 0;
  const auto subgroups = all_subgroups(4);
  for (const auto& group : subgroups) {
    if (!is_transitive(group)) continue;
    for (const auto& sub : subgroups) {
      if (!sub.is_subgroup_of(group) || !is_normal_in(sub, group)) continue;
      const auto verdict = check_normal_orbits(group, sub);
      if (!verdict.equal_orbit_sizes) {
        result.passed = false;
        result.details = "normal subgroup with unequal orbit sizes found";
        return result;
      }
      ++checked;
    }
  }
  result.details = "block model pattern = 2+2 epsilon, K=2; " + std::to_string(checked) +
                   " normal-subgroup checks";
  return result;
}

CriterionResult criterion_haar_moment(const AcceptanceOptions& options) {
  CriterionResult result{10, "haar-moment-oracle", true, ""};
  Rng rng = Rng::derive(options.seed, 10);
  long long comparisons = 0;
  for (int degree : {3, 4}) {
    for (const auto& group : all_subgroups(degree)) {
      for (int trial = 0; trial < 40; ++trial) {
        const int len = 1 + rng.uniform_int(4);
        CoordinateWord word;
        for (int t = 0; t < len; ++t)
          word.push_back({1 + rng.uniform_int(degree), 1 + rng.uniform_int(degree)});

        // independent oracle: entry products of the permutation matrices
        long long count = 0;
        for (const auto& g : group.elements) {
          long long prod = 1;
          for (const auto& [i, j] : word) prod *= (g(j) == i) ? 1 : 0;
          count += prod;
        }
        const Rational oracle(count, static_cast<long long>(group.order()));
        if (haar_moment_classical(group, word) != oracle) {
          result.passed = false;
          result.details = "moment mismatch at degree " + std::to_string(degree);
          return result;
        }
        ++comparisons;
      }
    }
  }
  result.details = std::to_string(comparisons) + " exact comparisons";
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, int criterion) {
  std::vector<CriterionResult> results;
  const auto want = [&](int id) { return criterion == 0 || criterion == id; };
  if (want(1)) results.push_back(criterion_latin_dictionary(options));
  if (want(2)) results.push_back(criterion_exact_stationarity(options));
  if (want(3)) results.push_back(criterion_cesaro(options));
  if (want(4)) results.push_back(criterion_free_product_faithful(options));
  if (want(5)) results.push_back(criterion_amalgamated(options));
  if (want(6)) results.push_back(criterion_commuting_powers(options));
  if (want(7)) results.push_back(criterion_obstruction(options));
  if (want(8)) results.push_back(criterion_thoma(options));
  if (want(9)) results.push_back(criterion_rank_orbits(options));
  if (want(10)) results.push_back(criterion_haar_moment(options));
  return results;
}

}  // namespace qf
