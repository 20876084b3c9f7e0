#include "core/latin.hpp"

#include <algorithm>
#include <bit>

namespace qf {

namespace {

int popcount(unsigned mask) { return std::popcount(mask); }

}  // namespace

LatinValidation validate_square(const std::vector<std::vector<int>>& grid, int k) {
  const int n = static_cast<int>(grid.size());
  if (n == 0) throw Error(ErrorCode::invalid_argument, "validate_square: empty grid");
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::invalid_argument, "validate_square: grid is not square");
  if (k < 0 || k > n)
    throw Error(ErrorCode::invalid_argument, "validate_square: K out of range");
  for (const auto& row : grid)
    for (int v : row)
      if (v < 0 || v > k)
        throw Error(ErrorCode::invalid_argument, "validate_square: symbol out of range");

  LatinValidation result;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row_count(k + 1, 0), col_count(k + 1, 0);
    for (int j = 0; j < n; ++j) {
      row_count[grid[i][j]]++;
      col_count[grid[j][i]]++;
    }
    for (int x = 1; x <= k; ++x) {
      if (row_count[x] != 1)
        result.defects.push_back("row " + std::to_string(i + 1) + " has symbol " +
                                 std::to_string(x) + " " + std::to_string(row_count[x]) +
                                 " times");
      if (col_count[x] != 1)
        result.defects.push_back("column " + std::to_string(i + 1) + " has symbol " +
                                 std::to_string(x) + " " + std::to_string(col_count[x]) +
                                 " times");
    }
  }
  result.valid = result.defects.empty();
  return result;
}

SparseLatinSquare make_square(std::vector<std::vector<int>> grid, int k) {
  auto verdict = validate_square(grid, k);
  if (!verdict.valid)
    throw Error(ErrorCode::invalid_square,
                "not a sparse Latin square: " + verdict.defects.front());
  return SparseLatinSquare{static_cast<int>(grid.size()), k, std::move(grid)};
}

void enumerate_squares(int n, int k,
                       const std::function<bool(const SparseLatinSquare&)>& emit) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorCode::invalid_argument, "enumerate_squares: need 1 <= K <= N");

  std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
  std::vector<unsigned> row_mask(n, 0), col_mask(n, 0);
  bool stopped = false;

  // Cells row-major; at each cell try * then 1..K. Masks record symbols
  // already used per row/column; counting prunes keep every completed grid
  // valid by construction.
  std::function<void(int)> walk = [&](int cell) {
    if (stopped) return;
    if (cell == n * n) {
      SparseLatinSquare square{n, k, grid};
      if (!emit(square)) stopped = true;
      return;
    }
    const int r = cell / n;
    const int c = cell % n;
    const int row_left = n - c - 1;
    const int col_left = n - r - 1;

    // Option *: possible only if the row/column can still fit what they need.
    if (k - popcount(row_mask[r]) <= row_left && k - popcount(col_mask[c]) <= col_left) {
      grid[r][c] = 0;
      walk(cell + 1);
    }
    for (int x = 1; x <= k && !stopped; ++x) {
      const unsigned bit = 1u << x;
      if ((row_mask[r] & bit) || (col_mask[c] & bit)) continue;
      if (k - popcount(row_mask[r]) - 1 > row_left) continue;
      if (k - popcount(col_mask[c]) - 1 > col_left) continue;
      row_mask[r] |= bit;
      col_mask[c] |= bit;
      grid[r][c] = x;
      walk(cell + 1);
      row_mask[r] &= ~bit;
      col_mask[c] &= ~bit;
    }
    grid[r][c] = 0;
  };
  walk(0);
}

std::vector<SparseLatinSquare> enumerate_squares(int n, int k) {
  std::vector<SparseLatinSquare> out;
  enumerate_squares(n, k, [&](const SparseLatinSquare& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

long long count_squares(int n, int k) {
  long long count = 0;
  enumerate_squares(n, k, [&](const SparseLatinSquare&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Permutation> to_permutations(const SparseLatinSquare& square) {
  auto verdict = validate_square(square.grid, square.k);
  if (!verdict.valid)
    throw Error(ErrorCode::invalid_square, "to_permutations: invalid square");
  std::vector<Permutation> perms;
  perms.reserve(square.k);
  for (int x = 1; x <= square.k; ++x) {
    std::vector<int> images(square.n, 0);
    for (int j = 1; j <= square.n; ++j) {
      for (int i = 1; i <= square.n; ++i) {
        if (square.at(i, j) == x) {
          images[j - 1] = i;
          break;
        }
      }
    }
    // Columns without x map j to itself; that cannot happen for a valid
    // square, every column holds each symbol exactly once.
    perms.emplace_back(std::move(images));
  }
  return perms;
}

SparseLatinSquare from_permutations(const std::vector<Permutation>& perms) {
  if (perms.empty())
    throw Error(ErrorCode::invalid_argument, "from_permutations: empty tuple");
  const int n = perms.front().degree();
  const int k = static_cast<int>(perms.size());
  for (const auto& p : perms)
    if (p.degree() != n)
      throw Error(ErrorCode::degree_mismatch, "from_permutations: degree mismatch");

  std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    for (int x = 1; x <= k; ++x) {
      const int j = perms[x - 1](i);
      if (grid[i - 1][j - 1] != 0)
        throw Error(ErrorCode::invalid_argument,
                    "from_permutations: tuple values coincide at point i=" + std::to_string(i));
      grid[i - 1][j - 1] = x;
    }
  }
  return make_square(std::move(grid), k);
}

PermutationGroup hopf_image_group(const SparseLatinSquare& square, std::size_t cap) {
  return generate_group(to_permutations(square), cap);
}

std::vector<SparseLatinSquare> admissible_squares(int n, int k,
                                                  const PermutationGroup& group) {
  if (group.degree != n)
    throw Error(ErrorCode::degree_mismatch, "admissible_squares: group degree != N");
  std::vector<SparseLatinSquare> out;
  enumerate_squares(n, k, [&](const SparseLatinSquare& square) {
    // Generating past |G| elements proves non-containment early.
    try {
      PermutationGroup image = hopf_image_group(square, group.order() + 1);
      if (image.is_subgroup_of(group)) out.push_back(square);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded) throw;
    }
    return true;
  });
  return out;
}

SparseLatinSquare act(const Permutation& tau, const SparseLatinSquare& square) {
  if (tau.degree() != square.n)
    throw Error(ErrorCode::degree_mismatch, "act: degree mismatch");
  const Permutation inv = tau.inverse();
  std::vector<std::vector<int>> grid(square.n);
  for (int i = 1; i <= square.n; ++i) grid[i - 1] = square.grid[inv(i) - 1];
  return make_square(std::move(grid), square.k);
}

}  // namespace qf
