#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/perm.hpp"

namespace qf {

/// An N x N grid over {*, 1..K} in which every row and every column contains
/// each of 1..K exactly once, padded with * elsewhere. The * entry is stored
/// as 0, so grids are plain integer matrices.
struct SparseLatinSquare {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> grid;

  int at(int i, int j) const { return grid[i - 1][j - 1]; }
  auto operator<=>(const SparseLatinSquare&) const = default;
};

struct LatinValidation {
  bool valid = false;
  std::vector<std::string> defects;
};

/// Verdict on the row/column law. Throws on a non-square grid or an
/// out-of-range symbol.
LatinValidation validate_square(const std::vector<std::vector<int>>& grid, int k);

/// Construct after validation; throws invalid_square when the law fails.
SparseLatinSquare make_square(std::vector<std::vector<int>> grid, int k);

/// Every valid square exactly once, in row-major backtracking order with
/// * < 1 < ... < K. The callback returns false to stop early.
void enumerate_squares(int n, int k, const std::function<bool(const SparseLatinSquare&)>& emit);
std::vector<SparseLatinSquare> enumerate_squares(int n, int k);
long long count_squares(int n, int k);

/// The K permutations with sigma_x(j) = i exactly when L_{ij} = x.
std::vector<Permutation> to_permutations(const SparseLatinSquare& square);

/// Square with L_{ij} = x when sigma_x(i) = j. Requires the tuple values
/// sigma_1(i), ..., sigma_K(i) pairwise distinct for every i; the round trip
/// through to_permutations yields the inverse tuple. Throws with the witness
/// point i when distinctness fails.
SparseLatinSquare from_permutations(const std::vector<Permutation>& perms);

/// Group generated by the support permutations of the square.
PermutationGroup hopf_image_group(const SparseLatinSquare& square, std::size_t cap = 1000000);

/// All squares L of size n over k symbols with G_L contained in `group`.
/// The empty list is a legal outcome.
std::vector<SparseLatinSquare> admissible_squares(int n, int k, const PermutationGroup& group);

/// Row action (L^tau)_{ij} = L_{tau^{-1}(i) j}; a left group action.
SparseLatinSquare act(const Permutation& tau, const SparseLatinSquare& square);

}  // namespace qf
