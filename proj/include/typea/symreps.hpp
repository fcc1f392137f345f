#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "typea/diagrams.hpp"

namespace typea {

/// Irreducible representations of S_n are labelled by diagrams of size n,
/// normalized so that (n) is the trivial and (1^n) the sign representation.
using IrrepLabel = Diagram;

/// Multiplicity map keyed by diagram, iterated in decreasing lex order.
using Multiplicities = std::map<Diagram, std::int64_t, std::greater<>>;

std::uint64_t factorial(int n);

/// Centralizer order z_mu = prod_l l^{k_l} k_l! of a permutation of cycle type mu.
std::uint64_t centralizer_order(const Diagram& cycle_type);

/// Size of the conjugacy class of cycle type mu, n!/z_mu.
std::uint64_t class_size(const Diagram& cycle_type);

/// Dimension of the irreducible labelled by `label`, by the hook-length formula.
std::uint64_t hook_dimension(const IrrepLabel& label);

/// Exact fraction with a positive denominator, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

/// An integer-valued class function on S_n, indexed by the canonical
/// class order of partitions_of(n).
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(int degree, std::vector<std::int64_t> values);

  static ClassFunction zero(int degree);
  static ClassFunction from(int degree, const std::function<std::int64_t(const Diagram&)>& f);

  int degree() const { return degree_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t at(const Diagram& cycle_type) const;
  std::int64_t& operator[](std::size_t class_index) { return values_[class_index]; }
  std::int64_t operator[](std::size_t class_index) const { return values_[class_index]; }

  ClassFunction& operator+=(const ClassFunction& other);
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int degree_ = 0;
  std::vector<std::int64_t> values_;
};

ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction regular_character(int n);

/// Index of `cycle_type` within partitions_of(cycle_type.size()).
std::size_t class_index(const Diagram& cycle_type);

/// Full character table of S_n. Rows are labels and columns are classes, both in
/// the canonical order of partitions_of(n).
class CharacterTable {
 public:
  CharacterTable(int degree, std::vector<std::vector<std::int64_t>> rows);

  int degree() const { return degree_; }
  const std::vector<Diagram>& partitions() const { return partitions_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  std::size_t index_of(const Diagram& d) const;

  std::int64_t value(const IrrepLabel& label, const Diagram& cycle_type) const;
  ClassFunction character(const IrrepLabel& label) const;

 private:
  int degree_;
  std::vector<Diagram> partitions_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Character value by Murnaghan-Nakayama, recursing without any table. Used to
/// build tables; callers should prefer character_value.
std::int64_t murnaghan_nakayama(const IrrepLabel& label, const Diagram& cycle_type);

/// Process-wide memo of character tables keyed by degree. Tables are built
/// once under an exclusive lock and then shared read-only. When a directory is
/// configured, tables are loaded from and written to `chartable-<n>.json`.
class CharacterCache {
 public:
  std::shared_ptr<const CharacterTable> table(int n);

  void set_directory(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> directory() const;

  /// Drops the in-memory tables (files on disk are kept).
  void clear();

 private:
  std::shared_ptr<const CharacterTable> build(int n);

  mutable std::shared_mutex mutex_;
  std::unordered_map<int, std::shared_ptr<const CharacterTable>> tables_;
  std::optional<std::filesystem::path> dir_;
};

CharacterCache& character_cache();

inline std::shared_ptr<const CharacterTable> character_table(int n) {
  return character_cache().table(n);
}

/// Throws DegreeMismatch when the sizes differ.
std::int64_t character_value(const IrrepLabel& label, const Diagram& cycle_type);

/// (1/n!) sum over classes of |class| f g.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Multiplicity of the irreducible `label` in the character `f`. Throws if the
/// inner product is not an integer (f is not a virtual character).
std::int64_t multiplicity_in(const IrrepLabel& label, const ClassFunction& f);

/// Decomposes a virtual character into irreducibles, dropping zero entries.
Multiplicities decompose(const ClassFunction& f);

/// All nu with c^nu_{lambda,mu} > 0, by Littlewood-Richardson tableaux.
Multiplicities lr_product(const Diagram& lambda, const Diagram& mu);

/// c^nu_{lambda,mu}. Throws DegreeMismatch unless |nu| = |lambda| + |mu|.
std::int64_t lr_coefficient(const Diagram& lambda, const Diagram& mu, const Diagram& nu);

/// Induction from S_{n_1} x ... x S_{n_d} of an outer tensor product of
/// irreducibles. The empty sequence yields {empty: 1}.
Multiplicities induce_outer(std::span<const IrrepLabel> factors);

}  // namespace typea
