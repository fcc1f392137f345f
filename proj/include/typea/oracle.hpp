#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "typea/diagrams.hpp"
#include "typea/symreps.hpp"

namespace typea::oracle {

// Deliberately naive verifiers. Nothing here may call the closed forms it is
// used to check.

/// r disjoint unordered pairs covering {1, ..., 2r}; each pair (a, b) has
/// a < b and pairs are sorted by their first point.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct Bounds {
  int max_matching_r = 4;
  int max_orthogonality_degree = 8;
};

std::vector<Matching> enumerate_matchings(int r, const Bounds& bounds = {});

/// Permutation with cycle type `cycle_type` acting on {1, ..., n}, cycles
/// laid out consecutively. perm[i] is the image of i (index 0 unused).
std::vector<int> representative_permutation(const Diagram& cycle_type);

/// Number of perfect matchings of 2r points fixed by each class of S_2r.
/// Throws BoundExceeded past bounds.max_matching_r.
ClassFunction matchings_character(int r, const Bounds& bounds = {});

/// Induction from the Young subgroup S_{n_1} x ... x S_{n_d} of the outer
/// product of `sub_characters`, by summing over fusing classes with
/// centralizer-order weights.
ClassFunction induced_character(std::span<const int> sub_degrees,
                                std::span<const ClassFunction> sub_characters);

/// Row and column orthogonality of the table, exactly.
bool orthogonality_check(const CharacterTable& table);
bool orthogonality_check(int n, const Bounds& bounds = {});

/// Cartesian product prod_l [0, m_l] by odometer, last coordinate fastest.
std::vector<std::vector<int>> enumerate_D_bruteforce(const RowProfile& profile);

struct CheckRecord {
  std::string check;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  std::size_t failures() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Every property sweep at sizes up to `max_size` (orthogonality and the
/// matchings oracle are additionally capped by `bounds`).
VerificationReport run_verification(int max_size, const Bounds& bounds = {});

}  // namespace typea::oracle
