#include "core/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qf {

namespace {

constexpr double kMcAbsoluteFloor = 1e-12;

}  // namespace

StateEstimate mc_trace_state(const ModelFamily& family, const ReducedWord& word, long n,
                             std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "mc_trace_state: n must be >= 1");
  Rng rng = Rng::derive(seed, 0);
  Complex sum{0.0, 0.0};
  double sumsq = 0.0;
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(n));
  for (long s = 0; s < n; ++s) {
    const ModelPoint point = sample_point(family, rng);
    const Complex v = word_trace(family, point, word);
    values.push_back(v);
    sum += v;
  }
  StateEstimate estimate;
  estimate.samples = n;
  estimate.seed = seed;
  estimate.mean = sum / static_cast<double>(n);
  for (const Complex& v : values) sumsq += std::norm(v - estimate.mean);
  if (n > 1)
    estimate.stderr_of_mean = std::sqrt(sumsq / (static_cast<double>(n) *
                                                 static_cast<double>(n - 1)));
  return estimate;
}

SurvivalStats word_survival_test(const ModelFamily& family, const ReducedWord& word, long n,
                                 double tol, std::uint64_t seed) {
  if (word.is_identity())
    throw Error(ErrorCode::invalid_argument, "word_survival_test: word is the identity");
  if (n < 1) throw Error(ErrorCode::invalid_argument, "word_survival_test: n must be >= 1");
  Rng rng = Rng::derive(seed, 0);
  SurvivalStats stats;
  for (long s = 0; s < n; ++s) {
    const ModelPoint point = sample_point(family, rng);
    const double dev = std::abs(word_trace(family, point, word) - Complex(1.0, 0.0));
    if (dev > stats.max_deviation) stats.max_deviation = dev;
    if (dev > tol && stats.witness_sample < 0) stats.witness_sample = s;
  }
  stats.verdict = stats.witness_sample >= 0 ? Survival::survives : Survival::not_separated;
  return stats;
}

FaithfulnessReport inner_faithfulness_scan(const ModelFamily& family, int max_len, long n,
                                           double tol, std::uint64_t seed,
                                           std::size_t word_cap) {
  FaithfulnessReport report;
  report.family = family_name(family);
  report.max_length = max_len;
  report.samples = n;
  report.tol = tol;
  report.seed = seed;

  const std::vector<ReducedWord> words = enumerate_words(family, max_len, word_cap);
  report.words.reserve(words.size());
  report.all_survive = true;
  std::uint64_t stream = 1;
  for (const auto& word : words) {
    WordReport row;
    row.word = word;
    row.stats = word_survival_test(family, word, n, tol, seed + stream);
    ++stream;
    if (row.stats.verdict != Survival::survives) report.all_survive = false;
    report.words.push_back(std::move(row));
  }
  return report;
}

CesaroReport classical_cesaro_hopf_image(const SparseLatinSquare& square, long k_max,
                                         double tol, std::size_t group_cap) {
  if (k_max < 1)
    throw Error(ErrorCode::invalid_argument, "classical_cesaro_hopf_image: k_max >= 1");
  const std::vector<Permutation> sigmas = to_permutations(square);
  const PermutationGroup hopf = generate_group(sigmas, group_cap);
  const GroupMeasure target = GroupMeasure::uniform(hopf);
  const GroupMeasure mu = GroupMeasure::uniform(sigmas);

  CesaroReport report;
  report.k_max = k_max;
  report.tol = tol;
  report.group_order = hopf.order();

  // Every convolution power stays supported inside the generated group, so
  // the total-variation distance can be read off the group's element list.
  std::map<Permutation, double> sum;
  GroupMeasure power = mu;
  long next_checkpoint = 10;
  for (long k = 1; k <= k_max; ++k) {
    if (k > 1) power = convolve(power, mu);
    for (const auto& [p, w] : power.weights()) sum[p] += w;
    double tv = 0.0;
    const double uniform_weight = 1.0 / static_cast<double>(hopf.order());
    for (const auto& g : hopf.elements) {
      const auto it = sum.find(g);
      const double have = it == sum.end() ? 0.0 : it->second / static_cast<double>(k);
      tv += std::abs(have - uniform_weight);
    }
    tv *= 0.5;
    if (k == next_checkpoint || k == k_max || k == 1) {
      report.trajectory.push_back({k, tv});
      if (k == next_checkpoint) next_checkpoint *= 10;
    }
    if (tv < tol) {
      report.passed = true;
      report.k_reached = k;
      report.tv_at_kmax = tv;
      return report;
    }
    if (k == k_max) report.tv_at_kmax = tv;
  }
  return report;
}

std::vector<CoordinateWord> all_coordinate_words(int n, int max_len) {
  std::vector<CoordinateWord> out;
  CoordinateWord current;
  std::function<void(int)> walk = [&](int remaining) {
    if (!current.empty()) out.push_back(current);
    if (remaining == 0) return;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        current.push_back({i, j});
        walk(remaining - 1);
        current.pop_back();
      }
    }
  };
  walk(max_len);
  std::stable_sort(out.begin(), out.end(),
                   [](const CoordinateWord& a, const CoordinateWord& b) {
                     return a.size() < b.size();
                   });
  return out;
}

StationarityReport stationarity_check_classical(const PermutationGroup& group, int k,
                                                const std::vector<CoordinateWord>& words,
                                                StationarityMode mode, long mc_samples,
                                                std::uint64_t seed) {
  const int n = group.degree;
  const std::vector<SparseLatinSquare> squares = admissible_squares(n, k, group);
  if (squares.empty())
    throw Error(ErrorCode::empty_model_space,
                "stationarity check: no admissible square for this group");

  StationarityReport report;
  report.mode = mode;
  report.square_count = squares.size();
  report.pass = true;

  if (mode == StationarityMode::exact) {
    // Point evaluation at the standard-basis frame: a product of coordinates
    // is the rank-one projection P_x when every symbol along the word equals
    // x != *, zero otherwise, so its normalized trace is 1/K.
    for (const auto& word : words) {
      const Rational haar = haar_moment_classical(group, word);
      long long hits = 0;
      for (const auto& square : squares) {
        int symbol = -1;
        bool ok = true;
        for (const auto& [i, j] : word) {
          const int s = square.at(i, j);
          if (s == 0 || (symbol != -1 && s != symbol)) {
            ok = false;
            break;
          }
          symbol = s;
        }
        if (ok) ++hits;
      }
      const Rational model(hits, static_cast<long long>(squares.size()) * k);
      StationarityRow row;
      row.word = word;
      row.haar_value = boost::rational_cast<double>(haar);
      row.model_value = boost::rational_cast<double>(model);
      row.exact_zero = (haar == model);
      row.defect = std::abs(row.haar_value - row.model_value);
      if (!row.exact_zero) report.pass = false;
      report.rows.push_back(std::move(row));
    }
    return report;
  }

  if (mc_samples < 2)
    throw Error(ErrorCode::invalid_argument, "stationarity mc mode: need samples >= 2");

  // One shared sample set of Haar frames; per-word traces through the
  // rank-one contraction tr(P_{x_1}...P_{x_p}) = prod_t <v_{x_t}, v_{x_t+1}>.
  report.rows.resize(words.size());
  std::vector<Complex> sums(words.size(), Complex{0.0, 0.0});
  std::vector<double> sumsq(words.size(), 0.0);
  std::vector<std::vector<std::vector<int>>> symbols(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (const auto& square : squares) {
      std::vector<int> sym;
      sym.reserve(words[w].size());
      for (const auto& [i, j] : words[w]) sym.push_back(square.at(i, j));
      symbols[w].push_back(std::move(sym));
    }
  }

  Rng rng = Rng::derive(seed, 0);
  std::vector<std::vector<Complex>> values(words.size());
  for (auto& v : values) v.reserve(static_cast<std::size_t>(mc_samples));
  for (long s = 0; s < mc_samples; ++s) {
    const CMatrix u = haar_unitary(k, rng);
    // gram(a, b) = v_a^* v_b
    CMatrix gram = u.adjoint() * u;
    for (std::size_t w = 0; w < words.size(); ++w) {
      Complex acc{0.0, 0.0};
      for (const auto& sym : symbols[w]) {
        bool zero = false;
        for (int x : sym)
          if (x == 0) zero = true;
        if (zero) continue;
        Complex prod{1.0, 0.0};
        for (std::size_t t = 0; t + 1 < sym.size(); ++t)
          prod *= gram(sym[t] - 1, sym[t + 1] - 1);
        if (sym.size() > 1) prod *= gram(sym.back() - 1, sym.front() - 1);
        acc += prod / static_cast<double>(k);
      }
      acc /= static_cast<double>(squares.size());
      values[w].push_back(acc);
      sums[w] += acc;
    }
  }

  for (std::size_t w = 0; w < words.size(); ++w) {
    StationarityRow& row = report.rows[w];
    row.word = words[w];
    row.haar_value = boost::rational_cast<double>(haar_moment_classical(group, words[w]));
    const Complex mean = sums[w] / static_cast<double>(mc_samples);
    row.model_value = mean.real();
    for (const Complex& v : values[w]) sumsq[w] += std::norm(v - mean);
    row.stderr_of_mean = std::sqrt(
        sumsq[w] / (static_cast<double>(mc_samples) * static_cast<double>(mc_samples - 1)));
    row.defect = std::abs(mean - Complex(row.haar_value, 0.0));
    if (row.defect > 3.0 * row.stderr_of_mean + kMcAbsoluteFloor) report.pass = false;
  }
  return report;
}

ThomaReport thoma_stationarity_check(const PermutationGroup& group,
                                     const PermutationGroup& subgroup, double tol) {
  const InducedModel model = prepare_induced(InducedFamily{group, subgroup});
  ThomaReport report;
  report.index = model.index();
  report.pass = true;
  const double dual_size = static_cast<double>(model.table.exponents.size());
  for (const auto& gamma : group.elements) {
    Complex total{0.0, 0.0};
    for (std::size_t chi = 0; chi < model.table.exponents.size(); ++chi) {
      // character of the induced representation
      for (const auto& rep : model.coset_reps) {
        const Permutation u = rep.inverse().compose(gamma).compose(rep);
        if (!subgroup.contains(u)) continue;
        total += model.table.value(static_cast<int>(chi), model.table.element_index(u));
      }
    }
    const Complex value = total / (static_cast<double>(model.index()) * dual_size);
    const double expected = gamma.is_identity() ? 1.0 : 0.0;
    ThomaRow row{gamma, value, std::abs(value - Complex(expected, 0.0))};
    if (row.defect > tol) report.pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ObstructionReport commutation_obstruction_check(int k, long n, std::uint64_t seed,
                                                double comm_tol, double survival_tol) {
  if (k < 2)
    throw Error(ErrorCode::invalid_argument, "obstruction check: K >= 2 required");
  const ModelFamily family = FreePairWithCenterFamily{k};

  ObstructionReport report;
  report.k = k;
  report.samples = n;

  Rng rng = Rng::derive(seed, 0);
  for (long s = 0; s < n; ++s) {
    const ModelPoint point = sample_point(family, rng);
    const CMatrix a = eval_generator(family, point, 1);
    const CMatrix b = eval_generator(family, point, 2);
    report.max_commutator_norm =
        std::max(report.max_commutator_norm, (a * b - b * a).norm());
  }

  const long kk = k;
  const ReducedWord comm_free =
      canonical_word(family, std::vector<WordLetter>{{1, 1}, {2, 1}, {1, -1}, {2, -1}});
  const ReducedWord comm_central =
      canonical_word(family, std::vector<WordLetter>{{1, 1}, {3, 1}, {1, -1}, {3, -1}});
  report.commutator_free = word_survival_test(family, comm_free, n, survival_tol, seed + 1);
  report.commutator_central =
      word_survival_test(family, comm_central, n, survival_tol, seed + 2);

  bool singles_survive = true;
  std::uint64_t stream = 3;
  for (int block = 1; block <= 3; ++block) {
    for (long e = 1; e < kk; ++e) {
      WordReport row;
      row.word = canonical_word(family, std::vector<WordLetter>{{block, e}});
      row.stats = word_survival_test(family, row.word, n, survival_tol, seed + stream);
      ++stream;
      if (row.stats.verdict != Survival::survives) singles_survive = false;
      report.single_generators.push_back(std::move(row));
    }
  }

  report.pass = report.max_commutator_norm < comm_tol &&
                report.commutator_free.verdict == Survival::not_separated &&
                report.commutator_central.verdict == Survival::not_separated &&
                singles_survive;
  return report;
}

}  // namespace qf
