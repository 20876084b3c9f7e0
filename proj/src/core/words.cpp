#include <algorithm>
#include <charconv>
#include <sstream>
#include <variant>

#include "core/models.hpp"

namespace qf {

namespace {

long mod_nonneg(long value, long modulus) {
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// Free reduction over generator blocks, exponents mod `order`.
std::vector<WordLetter> free_reduce(const std::vector<WordLetter>& raw, int order,
                                    int blocks) {
  std::vector<WordLetter> stack;
  for (const auto& letter : raw) {
    if (letter.block < 1 || letter.block > blocks)
      throw Error(ErrorCode::invalid_argument, "word letter block out of range");
    long exp = mod_nonneg(letter.exp, order);
    if (exp == 0) continue;
    if (!stack.empty() && stack.back().block == letter.block) {
      stack.back().exp = mod_nonneg(stack.back().exp + exp, order);
      if (stack.back().exp == 0) stack.pop_back();
      continue;
    }
    stack.push_back({letter.block, exp});
  }
  // popping can expose a new same-block pair; iterate to a fixed point
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<WordLetter> next;
    for (const auto& letter : stack) {
      if (!next.empty() && next.back().block == letter.block) {
        next.back().exp = mod_nonneg(next.back().exp + letter.exp, order);
        if (next.back().exp == 0) next.pop_back();
        changed = true;
      } else {
        next.push_back(letter);
      }
    }
    stack = std::move(next);
  }
  return stack;
}

ReducedWord amalgamated_canonical(const AmalgamatedFamily& family,
                                  const std::vector<WordLetter>& raw) {
  const int K = family.k;
  const int L = family.l;
  const int R = family.r();
  long amalgam = 0;
  std::vector<WordLetter> stack;
  auto push_residue = [&](int block, long exp) {
    exp = mod_nonneg(exp, K);
    amalgam += exp / R;
    long residue = exp % R;
    while (residue != 0 && !stack.empty() && stack.back().block == block) {
      long combined = stack.back().exp + residue;
      stack.pop_back();
      amalgam += combined / R;
      residue = combined % R;
    }
    if (residue != 0) stack.push_back({block, residue});
  };
  for (const auto& letter : raw) {
    if (letter.block < 1 || letter.block > family.m)
      throw Error(ErrorCode::invalid_argument, "word letter block out of range");
    push_residue(letter.block, letter.exp);
  }
  ReducedWord word;
  word.amalgam_exp = static_cast<int>(mod_nonneg(amalgam, L));
  word.letters = std::move(stack);
  return word;
}

// --- word problem for the commuting-powers quotient ------------------------
//
// The group is the fundamental group of a star of finite groups: center
// Z_L^M spanned by the powers g_i^R, one Z_K leaf per generator, edge groups
// Z_L identifying g_i^R with the i-th center coordinate. A syllable sequence
// with no leaf syllable inside an edge group and no pinch is reduced, and
// reduced sequences of positive length are nontrivial.

struct LeafSyllable {
  int block;
  long exp;  // in 1..K-1
};
struct CenterSyllable {
  std::vector<long> coords;  // mod L, not all zero
};
using Syllable = std::variant<LeafSyllable, CenterSyllable>;

bool center_is_zero(const CenterSyllable& c) {
  return std::all_of(c.coords.begin(), c.coords.end(), [](long v) { return v == 0; });
}

int center_support_block(const CenterSyllable& c) {
  // one-based block when the support is a single coordinate, 0 otherwise
  int found = 0;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] != 0) {
      if (found != 0) return 0;
      found = static_cast<int>(i) + 1;
    }
  }
  return found;
}

std::vector<Syllable> reduce_star_word(const CommutingPowersFamily& family,
                                       const std::vector<WordLetter>& letters) {
  const int K = family.k;
  const int L = family.l;
  const int R = family.r();
  const int M = family.m;

  std::vector<Syllable> seq;
  for (const auto& letter : letters) {
    long exp = mod_nonneg(letter.exp, K);
    if (exp == 0) continue;
    seq.push_back(LeafSyllable{letter.block, exp});
  }

  bool changed = true;
  while (changed) {
    changed = false;

    // leaves inside the edge group become center syllables
    for (std::size_t t = 0; t < seq.size(); ++t) {
      if (auto* leaf = std::get_if<LeafSyllable>(&seq[t]); leaf && leaf->exp % R == 0) {
        CenterSyllable c{std::vector<long>(M, 0)};
        c.coords[leaf->block - 1] = mod_nonneg(leaf->exp / R, L);
        if (center_is_zero(c))
          seq.erase(seq.begin() + static_cast<long>(t));
        else
          seq[t] = std::move(c);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // merge adjacent syllables of the same vertex group
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
      auto* a_leaf = std::get_if<LeafSyllable>(&seq[t]);
      auto* b_leaf = std::get_if<LeafSyllable>(&seq[t + 1]);
      if (a_leaf && b_leaf && a_leaf->block == b_leaf->block) {
        a_leaf->exp = mod_nonneg(a_leaf->exp + b_leaf->exp, K);
        seq.erase(seq.begin() + static_cast<long>(t) + 1);
        if (a_leaf->exp == 0) seq.erase(seq.begin() + static_cast<long>(t));
        changed = true;
        break;
      }
      auto* a_center = std::get_if<CenterSyllable>(&seq[t]);
      auto* b_center = std::get_if<CenterSyllable>(&seq[t + 1]);
      if (a_center && b_center) {
        for (int i = 0; i < M; ++i)
          a_center->coords[i] = mod_nonneg(a_center->coords[i] + b_center->coords[i], L);
        seq.erase(seq.begin() + static_cast<long>(t) + 1);
        if (center_is_zero(*a_center)) seq.erase(seq.begin() + static_cast<long>(t));
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // pinch: a center supported on one block absorbs into an adjacent leaf of
    // that block
    for (std::size_t t = 0; t < seq.size(); ++t) {
      auto* center = std::get_if<CenterSyllable>(&seq[t]);
      if (!center) continue;
      const int block = center_support_block(*center);
      if (block == 0) continue;
      const long lifted = center->coords[block - 1] * R;
      auto absorb = [&](std::size_t leaf_at) {
        auto& leaf = std::get<LeafSyllable>(seq[leaf_at]);
        leaf.exp = mod_nonneg(leaf.exp + lifted, K);
        seq.erase(seq.begin() + static_cast<long>(t));
        if (leaf.exp == 0) {
          const std::size_t adjusted = leaf_at > t ? leaf_at - 1 : leaf_at;
          seq.erase(seq.begin() + static_cast<long>(adjusted));
        }
      };
      if (t > 0) {
        if (auto* leaf = std::get_if<LeafSyllable>(&seq[t - 1]); leaf && leaf->block == block) {
          absorb(t - 1);
          changed = true;
          break;
        }
      }
      if (t + 1 < seq.size()) {
        if (auto* leaf = std::get_if<LeafSyllable>(&seq[t + 1]); leaf && leaf->block == block) {
          absorb(t + 1);
          changed = true;
          break;
        }
      }
    }
  }
  return seq;
}

std::vector<WordLetter> letters_inverse(const std::vector<WordLetter>& letters) {
  std::vector<WordLetter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.push_back({it->block, -it->exp});
  return out;
}

template <typename F>
void enumerate_letter_words(int blocks, long min_exp, long max_exp, int max_len,
                            bool adjacent_distinct, const F& visit) {
  std::vector<WordLetter> current;
  std::function<void(int)> walk = [&](int remaining) {
    if (!current.empty()) visit(current);
    if (remaining == 0) return;
    for (int b = 1; b <= blocks; ++b) {
      if (adjacent_distinct && !current.empty() && current.back().block == b) continue;
      for (long e = min_exp; e <= max_exp; ++e) {
        current.push_back({b, e});
        walk(remaining - 1);
        current.pop_back();
      }
    }
  };
  walk(max_len);
}

}  // namespace

ReducedWord canonical_word(const ModelFamily& family, const std::vector<WordLetter>& raw) {
  return std::visit(
      [&](const auto& f) -> ReducedWord {
        using T = std::decay_t<decltype(f)>;
        ReducedWord word;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) {
          word.letters = free_reduce(raw, f.k, 1);
        } else if constexpr (std::is_same_v<T, FreeProductFamily>) {
          word.letters = free_reduce(raw, f.k, f.m);
        } else if constexpr (std::is_same_v<T, CommutingPowersFamily>) {
          word.letters = free_reduce(raw, f.k, f.m);
        } else if constexpr (std::is_same_v<T, FreePairWithCenterFamily>) {
          word.letters = free_reduce(raw, f.k, 3);
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily>) {
          word = amalgamated_canonical(f, raw);
        } else if constexpr (std::is_same_v<T, InducedFamily>) {
          word.letters =
              free_reduce(raw, static_cast<int>(f.group.order()),
                          static_cast<int>(f.group.generators.size()));
        } else {
          throw Error(ErrorCode::invalid_argument,
                      "canonical_word: family has no letter words");
        }
        return word;
      },
      family);
}

ReducedWord canonical_word(const ModelFamily& family, const std::vector<WordSyllable>& raw) {
  const auto* f = std::get_if<DirectProductPartsFamily>(&family);
  if (!f)
    throw Error(ErrorCode::invalid_argument,
                "syllable words only apply to direct-product parts families");
  ReducedWord word;
  for (const auto& syl : raw) {
    if (syl.part < 1 || syl.part > static_cast<int>(f->parts.size()))
      throw Error(ErrorCode::invalid_argument, "word syllable part out of range");
    if (static_cast<int>(syl.exps.size()) != f->parts[syl.part - 1])
      throw Error(ErrorCode::invalid_argument, "word syllable arity mismatch");
    std::vector<long> exps(syl.exps.size());
    for (std::size_t s = 0; s < syl.exps.size(); ++s) exps[s] = mod_nonneg(syl.exps[s], f->k);
    const bool zero = std::all_of(exps.begin(), exps.end(), [](long v) { return v == 0; });
    if (!word.syllables.empty() && word.syllables.back().part == syl.part) {
      auto& back = word.syllables.back();
      for (std::size_t s = 0; s < exps.size(); ++s)
        back.exps[s] = mod_nonneg(back.exps[s] + exps[s], f->k);
      if (std::all_of(back.exps.begin(), back.exps.end(), [](long v) { return v == 0; }))
        word.syllables.pop_back();
    } else if (!zero) {
      word.syllables.push_back({syl.part, std::move(exps)});
    }
  }
  return word;
}

ReducedWord word_inverse(const ModelFamily& family, const ReducedWord& word) {
  if (!word.syllables.empty()) {
    std::vector<WordSyllable> raw;
    for (auto it = word.syllables.rbegin(); it != word.syllables.rend(); ++it) {
      WordSyllable syl{it->part, it->exps};
      for (auto& e : syl.exps) e = -e;
      raw.push_back(std::move(syl));
    }
    return canonical_word(family, raw);
  }
  std::vector<WordLetter> raw = letters_inverse(word.letters);
  if (const auto* f = std::get_if<AmalgamatedFamily>(&family); f && word.amalgam_exp != 0) {
    // h = g_1^R is central, so the inverse prefix commutes to the front
    raw.push_back({1, -static_cast<long>(word.amalgam_exp) * f->r()});
  }
  return canonical_word(family, raw);
}

std::string word_to_string(const ReducedWord& word) {
  std::ostringstream out;
  bool first = true;
  if (word.amalgam_exp != 0) {
    out << "h:" << word.amalgam_exp;
    first = false;
  }
  for (const auto& letter : word.letters) {
    if (!first) out << ",";
    out << letter.block << ":" << letter.exp;
    first = false;
  }
  for (const auto& syl : word.syllables) {
    if (!first) out << ",";
    out << syl.part << ":";
    for (std::size_t s = 0; s < syl.exps.size(); ++s) {
      if (s) out << ".";
      out << syl.exps[s];
    }
    first = false;
  }
  if (first) out << "e";
  return out.str();
}

ReducedWord word_from_string(const ModelFamily& family, const std::string& text) {
  std::vector<WordLetter> letters;
  std::vector<WordSyllable> syllables;
  long amalgam = 0;
  const bool parts_family = std::holds_alternative<DirectProductPartsFamily>(family);

  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty() || token == "e") continue;
    const auto colon = token.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::parse_error, "word token missing ':': " + token);
    const std::string head = token.substr(0, colon);
    const std::string tail = token.substr(colon + 1);
    if (head == "h") {
      if (!std::holds_alternative<AmalgamatedFamily>(family))
        throw Error(ErrorCode::parse_error, "amalgam letter h in a non-amalgamated family");
      amalgam += std::stol(tail);
      continue;
    }
    const int block = std::stoi(head);
    if (parts_family) {
      WordSyllable syl;
      syl.part = block;
      std::stringstream exps(tail);
      std::string piece;
      while (std::getline(exps, piece, '.')) syl.exps.push_back(std::stol(piece));
      syllables.push_back(std::move(syl));
    } else {
      letters.push_back({block, std::stol(tail)});
    }
  }

  if (parts_family) return canonical_word(family, syllables);
  if (const auto* f = std::get_if<AmalgamatedFamily>(&family); f && amalgam != 0)
    letters.insert(letters.begin(), {1, amalgam * f->r()});
  return canonical_word(family, letters);
}

bool commuting_powers_is_identity(const CommutingPowersFamily& family,
                                  const std::vector<WordLetter>& letters) {
  return reduce_star_word(family, letters).empty();
}

bool commuting_powers_equal(const CommutingPowersFamily& family,
                            const std::vector<WordLetter>& a,
                            const std::vector<WordLetter>& b) {
  std::vector<WordLetter> joined = a;
  const auto inv = letters_inverse(b);
  joined.insert(joined.end(), inv.begin(), inv.end());
  return commuting_powers_is_identity(family, joined);
}

std::vector<ReducedWord> enumerate_words(const ModelFamily& family, int max_len,
                                         std::size_t cap) {
  if (max_len < 1)
    throw Error(ErrorCode::invalid_argument, "enumerate_words: max_len must be >= 1");
  std::vector<ReducedWord> out;
  auto guard = [&](std::size_t next_size) {
    if (next_size > cap)
      throw Error(ErrorCode::cap_exceeded, "enumerate_words: word cap exceeded");
  };

  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CyclicFlatFamily>) {
          for (long e = 1; e < f.k; ++e) {
            guard(out.size() + 1);
            out.push_back(ReducedWord{0, {{1, e}}, {}});
          }
        } else if constexpr (std::is_same_v<T, FreeProductFamily> ||
                             std::is_same_v<T, FreePairWithCenterFamily>) {
          int blocks = 3;
          if constexpr (std::is_same_v<T, FreeProductFamily>) blocks = f.m;
          for (int len = 1; len <= max_len; ++len) {
            enumerate_letter_words(blocks, 1, f.k - 1, len, true,
                                   [&](const std::vector<WordLetter>& w) {
                                     if (static_cast<int>(w.size()) != len) return;
                                     guard(out.size() + 1);
                                     out.push_back(ReducedWord{0, w, {}});
                                   });
          }
        } else if constexpr (std::is_same_v<T, AmalgamatedFamily>) {
          for (int l = 1; l < f.l; ++l) {
            guard(out.size() + 1);
            out.push_back(ReducedWord{l, {}, {}});
          }
          for (int len = 1; len <= max_len; ++len) {
            for (int l = 0; l < f.l; ++l) {
              enumerate_letter_words(f.m, 1, f.r() - 1, len, true,
                                     [&](const std::vector<WordLetter>& w) {
                                       if (static_cast<int>(w.size()) != len) return;
                                       guard(out.size() + 1);
                                       out.push_back(ReducedWord{l, w, {}});
                                     });
            }
          }
        } else if constexpr (std::is_same_v<T, CommutingPowersFamily>) {
          std::vector<std::vector<WordLetter>> kept;
          std::size_t raw_count = 0;
          constexpr std::size_t kDedupLimit = 4000;
          for (int len = 1; len <= max_len; ++len) {
            enumerate_letter_words(f.m, 1, f.k - 1, len, true,
                                   [&](const std::vector<WordLetter>& w) {
                                     if (static_cast<int>(w.size()) != len) return;
                                     if (++raw_count > kDedupLimit)
                                       throw Error(ErrorCode::cap_exceeded,
                                                   "enumerate_words: combinatorial "
                                                   "explosion guard");
                                     if (commuting_powers_is_identity(f, w)) return;
                                     for (const auto& prev : kept)
                                       if (commuting_powers_equal(f, prev, w)) return;
                                     guard(kept.size() + 1);
                                     kept.push_back(w);
                                   });
          }
          for (auto& w : kept) out.push_back(ReducedWord{0, std::move(w), {}});
        } else if constexpr (std::is_same_v<T, DirectProductPartsFamily>) {
          const int parts = static_cast<int>(f.parts.size());
          std::vector<WordSyllable> current;
          std::function<void(int)> walk_len = [&](int target) {
            if (static_cast<int>(current.size()) == target) {
              guard(out.size() + 1);
              out.push_back(ReducedWord{0, {}, current});
              return;
            }
            for (int p = 1; p <= parts; ++p) {
              if (!current.empty() && current.back().part == p) continue;
              const int arity = f.parts[p - 1];
              std::vector<long> exps(arity, 0);
              std::function<void(int)> fill = [&](int pos) {
                if (pos == arity) {
                  if (std::all_of(exps.begin(), exps.end(), [](long v) { return v == 0; }))
                    return;
                  current.push_back({p, exps});
                  walk_len(target);
                  current.pop_back();
                  return;
                }
                for (long e = 0; e < f.k; ++e) {
                  exps[pos] = e;
                  fill(pos + 1);
                }
                exps[pos] = 0;
              };
              fill(0);
            }
          };
          for (int len = 1; len <= max_len; ++len) walk_len(len);
        } else {
          throw Error(ErrorCode::invalid_argument,
                      "enumerate_words: family has no word enumeration");
        }
      },
      family);
  return out;
}

}  // namespace qf
