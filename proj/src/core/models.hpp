#pragma once

#include <string>
#include <variant>
#include <vector>

#include "core/latin.hpp"
#include "core/magic.hpp"
#include "core/perm.hpp"
#include "core/rng.hpp"

namespace qf {

// ---------------------------------------------------------------------------
// Model families
// ---------------------------------------------------------------------------

/// Flat model of the cyclic group of order K: a point is a projection frame,
/// the generator maps to sum_j w^j P_j with w = exp(2*pi*i/K).
struct CyclicFlatFamily {
  int k = 0;
};

/// Free product of M cyclic groups of order K, evaluated through the affine
/// lift: a point is an M-tuple of K x K unitaries, the i-th generator maps to
/// U^i diag(w^1..w^K) U^i*.
struct FreeProductFamily {
  int k = 0;
  int m = 0;
};

/// Free product of direct products Z_K^{M_1} * ... * Z_K^{M_n}; a point holds
/// one unitary and M_p permutations of {1..K} per part.
struct DirectProductPartsFamily {
  int k = 0;
  std::vector<int> parts;
};

/// Free product of M copies of Z_K with all g_i^R identified (K = L*R); a
/// point is an M-tuple of unitaries whose interleaved column groups
/// (t, t+L, ..., t+(R-1)L) span the coordinate blocks V_t.
struct AmalgamatedFamily {
  int k = 0;
  int l = 0;
  int m = 0;
  int r() const { return k / l; }
};

/// Same block structure but the powers g_i^R are only made to commute; a
/// point additionally carries one permutation of {1..L} per block, and the
/// column groups of U^i span V at the permuted position.
struct CommutingPowersFamily {
  int k = 0;
  int l = 0;
  int m = 0;
  int r() const { return k / l; }
};

/// (Z_K * Z_K) x Z_K with generators g_1, g_2, g_3 (g_3 central). Sampled
/// through the commutant structure: pi(g_3) is diagonalized by a Haar frame
/// and pi(g_1), pi(g_2) are diagonal in the same eigenbasis, so they commute
/// at every point.
struct FreePairWithCenterFamily {
  int k = 0;
};

/// Quasi-flat representation attached to one sparse Latin square; a point is
/// a projection frame, coordinates map to P_{L_ij} with P_* = 0.
struct ClassicalFamily {
  SparseLatinSquare square;
};

/// Finite group with an abelian subgroup of finite index; a point is a
/// character of the subgroup and elements act by the induced representation
/// in the coset basis.
struct InducedFamily {
  PermutationGroup group;
  PermutationGroup subgroup;
};

using ModelFamily =
    std::variant<CyclicFlatFamily, FreeProductFamily, DirectProductPartsFamily,
                 AmalgamatedFamily, CommutingPowersFamily, FreePairWithCenterFamily,
                 ClassicalFamily, InducedFamily>;

/// Dimension of the target matrix algebra.
int fiber_dimension(const ModelFamily& family);
/// Number of generator blocks addressable in words.
int block_count(const ModelFamily& family);
void validate_family(const ModelFamily& family);
std::string family_name(const ModelFamily& family);

// ---------------------------------------------------------------------------
// Reduced words
// ---------------------------------------------------------------------------

struct WordLetter {
  int block = 0;  // one-based generator block
  long exp = 0;
  auto operator<=>(const WordLetter&) const = default;
};

struct WordSyllable {
  int part = 0;  // one-based part of a direct-product free factor
  std::vector<long> exps;
  auto operator<=>(const WordSyllable&) const = default;
};

/// A word in the family's generator-quotient normal form. Letter-based
/// families use `letters` (with the leading amalgam power in `amalgam_exp`
/// for the amalgamated family); the direct-product-parts family uses
/// `syllables`. The empty word is the identity.
struct ReducedWord {
  int amalgam_exp = 0;
  std::vector<WordLetter> letters;
  std::vector<WordSyllable> syllables;

  bool is_identity() const { return amalgam_exp == 0 && letters.empty() && syllables.empty(); }
  int length() const {
    return static_cast<int>(letters.size() + syllables.size());
  }
  auto operator<=>(const ReducedWord&) const = default;
};

/// Family-specific normal form of a raw letter sequence: free reduction with
/// exponents mod K; the amalgamated family additionally commutes every g_i^R
/// factor into a single leading power with residues in 1..R-1.
ReducedWord canonical_word(const ModelFamily& family, const std::vector<WordLetter>& raw);
ReducedWord canonical_word(const ModelFamily& family, const std::vector<WordSyllable>& raw);

ReducedWord word_inverse(const ModelFamily& family, const ReducedWord& word);
std::string word_to_string(const ReducedWord& word);
/// Parse "1:2,2:1" (block:exponent), "h:1,..." for the amalgam power, or
/// "1:2.0,2:1.1" with dotted exponent vectors for direct-product parts.
ReducedWord word_from_string(const ModelFamily& family, const std::string& text);

/// Exact word problem for the commuting-powers quotient, through its
/// decomposition as a star of finite groups (center Z_L^M spanned by the
/// powers g_i^R, one Z_K leaf per block, edge groups Z_L). A freely reduced
/// word is trivial iff the reduced syllable sequence is empty.
bool commuting_powers_is_identity(const CommutingPowersFamily& family,
                                  const std::vector<WordLetter>& letters);
bool commuting_powers_equal(const CommutingPowersFamily& family,
                            const std::vector<WordLetter>& a,
                            const std::vector<WordLetter>& b);

/// All canonical nontrivial words with at most `max_len` letters (syllables),
/// deduplicated modulo the family's relations; by length, then lexicographic.
/// Throws cap_exceeded past `cap` words.
std::vector<ReducedWord> enumerate_words(const ModelFamily& family, int max_len,
                                         std::size_t cap = 100000);

// ---------------------------------------------------------------------------
// Model points and evaluation
// ---------------------------------------------------------------------------

struct ModelPoint {
  std::vector<CMatrix> unitaries;
  std::vector<Permutation> permutations;
  ProjectionFrame frame;
  int character = -1;  // index into the subgroup dual, induced family only
};

ModelPoint sample_point(const ModelFamily& family, Rng& rng);
/// Largest violation of the family's point invariants (unitarity, block
/// spans, frame laws).
double point_defect(const ModelFamily& family, const ModelPoint& point);

/// W^k with W = diag(w^1, ..., w^K), w = exp(2*pi*i/K).
CMatrix diagonal_w_power(int k_order, long exp);
/// W_sigma^k with (W_sigma)_jj = w^{sigma(j)}.
CMatrix diagonal_w_sigma_power(int k_order, const Permutation& sigma, long exp);

/// Image of one generator: block `i`, generator `gen` within the block (only
/// the direct-product-parts family has more than one generator per block).
CMatrix eval_generator(const ModelFamily& family, const ModelPoint& point, int block,
                       int gen = 1);

/// Ordered product of generator images, one factor per letter exponent step.
CMatrix eval_word(const ModelFamily& family, const ModelPoint& point,
                  const ReducedWord& word);

/// Normalized trace of the word image by the family's closed form; agrees
/// with the normalized trace of eval_word.
Complex word_trace(const ModelFamily& family, const ModelPoint& point,
                   const ReducedWord& word);

/// P_{L_ij} from the frame, the zero matrix for a * entry.
CMatrix eval_classical_coordinate(const SparseLatinSquare& square,
                                  const ProjectionFrame& frame, int i, int j);
/// Circulant coordinate P_{j-i mod N} (index 0 means P_N).
CMatrix eval_cyclic_coordinate(const ProjectionFrame& frame, int i, int j);

/// The full magic grid of a classical/cyclic point.
NumericMagicUnitary classical_magic(const SparseLatinSquare& square,
                                    const ProjectionFrame& frame);
NumericMagicUnitary cyclic_magic(const ProjectionFrame& frame);

// ---------------------------------------------------------------------------
// Induced representations
// ---------------------------------------------------------------------------

/// Characters of a finite abelian group: chi_c(element e) =
/// exp(2*pi*i*exponents[c][e] / exponent).
struct CharacterTable {
  int exponent = 1;  // lcm of element orders
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> exponents;  // one row per character

  Complex value(int character, int element_index) const;
  int element_index(const Permutation& p) const;
};

/// Throws when the group is not abelian. The table has exactly |group|
/// characters.
CharacterTable character_table(const PermutationGroup& abelian_group);

/// Prepared data for the induced-representation model.
struct InducedModel {
  PermutationGroup group;
  PermutationGroup subgroup;
  std::vector<Permutation> coset_reps;  // left cosets, identity first
  CharacterTable table;

  int index() const { return static_cast<int>(coset_reps.size()); }
};

InducedModel prepare_induced(const InducedFamily& family);

/// Matrix of gamma in the coset basis: entry (x, y) is chi(r_x^{-1} gamma r_y)
/// when that element lies in the subgroup, 0 otherwise. Unitary and
/// multiplicative in gamma.
CMatrix induced_rep(const InducedModel& model, int character, const Permutation& gamma);

}  // namespace qf
