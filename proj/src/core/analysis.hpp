#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "core/latin.hpp"
#include "core/models.hpp"
#include "core/perm.hpp"

namespace qf {

/// Monte Carlo estimate of the trace state phi(pi(gamma)) over random model
/// points. Reproducible: the same (seed, family, word, n) gives bit-identical
/// results in sequential mode.
struct StateEstimate {
  Complex mean{0.0, 0.0};
  double stderr_of_mean = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

StateEstimate mc_trace_state(const ModelFamily& family, const ReducedWord& word, long n,
                             std::uint64_t seed);

enum class Survival { survives, not_separated };

struct SurvivalStats {
  Survival verdict = Survival::not_separated;
  double max_deviation = 0.0;  // max over samples of |trace - 1|
  long witness_sample = -1;    // first sample index past tol, -1 if none
};

/// One-sided test: "survives" when some sample separates the word from the
/// identity; "not_separated" is evidence, not proof, of kernel membership.
/// Throws on the identity word.
SurvivalStats word_survival_test(const ModelFamily& family, const ReducedWord& word, long n,
                                 double tol, std::uint64_t seed);

struct WordReport {
  ReducedWord word;
  SurvivalStats stats;
};

struct FaithfulnessReport {
  std::string family;
  int max_length = 0;
  long samples = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<WordReport> words;
  bool all_survive = false;
};

/// Enumerates canonical nontrivial words up to max_len (cap guards the
/// combinatorial explosion) and runs the survival test on each.
FaithfulnessReport inner_faithfulness_scan(const ModelFamily& family, int max_len, long n,
                                           double tol, std::uint64_t seed,
                                           std::size_t word_cap = 100000);

struct CesaroCheckpoint {
  long k = 0;
  double tv_to_uniform = 0.0;
};

struct CesaroReport {
  bool passed = false;
  long k_reached = -1;  // first k with TV < tol, -1 when never
  double tv_at_kmax = 0.0;
  long k_max = 0;
  double tol = 0.0;
  std::size_t group_order = 0;
  std::vector<CesaroCheckpoint> trajectory;  // at powers of 10
};

/// Convolution walk of the uniform measure on the support permutations of the
/// square; reports the total-variation distance of the running Cesaro average
/// from the uniform measure on the generated group.
CesaroReport classical_cesaro_hopf_image(const SparseLatinSquare& square, long k_max,
                                         double tol, std::size_t group_cap = 1000000);

enum class StationarityMode { exact, monte_carlo };

struct StationarityRow {
  CoordinateWord word;
  double haar_value = 0.0;
  double model_value = 0.0;
  double defect = 0.0;
  double stderr_of_mean = 0.0;  // monte carlo mode only
  bool exact_zero = false;      // exact mode: defect is 0 as a rational
};

struct StationarityReport {
  StationarityMode mode = StationarityMode::exact;
  bool pass = false;
  std::size_t square_count = 0;
  std::vector<StationarityRow> rows;
};

/// Compares Haar moments of G against the model average over its admissible
/// squares. Exact mode evaluates at the standard-basis frame in rational
/// arithmetic; Monte Carlo mode draws Haar frames. Throws empty_model_space
/// when no admissible square exists.
StationarityReport stationarity_check_classical(const PermutationGroup& group, int k,
                                                const std::vector<CoordinateWord>& words,
                                                StationarityMode mode, long mc_samples = 0,
                                                std::uint64_t seed = 0);

/// All coordinate words over {1..n}^2 of length 1..max_len.
std::vector<CoordinateWord> all_coordinate_words(int n, int max_len);

struct ThomaRow {
  Permutation element;
  Complex value{0.0, 0.0};
  double defect = 0.0;
};

struct ThomaReport {
  bool pass = false;
  int index = 0;
  std::vector<ThomaRow> rows;
};

/// Exact check that (tr (x) integral over the dual) of the induced model is
/// the delta at the identity, element by element.
ThomaReport thoma_stationarity_check(const PermutationGroup& group,
                                     const PermutationGroup& subgroup,
                                     double tol = 1e-12);

struct ObstructionReport {
  bool pass = false;
  int k = 0;
  long samples = 0;
  double max_commutator_norm = 0.0;
  SurvivalStats commutator_free;     // [g1, g2]: expected not separated
  SurvivalStats commutator_central;  // [g1, g3]: trivial in the group
  std::vector<WordReport> single_generators;
};

/// Negative control: in the (Z_K * Z_K) x Z_K model the images of the two
/// free generators commute at every point, so their commutator never
/// separates, while single-generator words always do.
ObstructionReport commutation_obstruction_check(int k, long n, std::uint64_t seed,
                                                double comm_tol = 1e-10,
                                                double survival_tol = 1e-6);

}  // namespace qf
