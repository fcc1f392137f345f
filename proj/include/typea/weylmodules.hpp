#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "typea/diagrams.hpp"
#include "typea/symreps.hpp"

namespace typea {

/// Degrees (n_1, ..., n_d) of the factors of S_{n_1} x ... x S_{n_d}.
/// Zero degrees are allowed; S_0 carries only the empty diagram.
struct ProductShape {
  std::vector<int> degrees;

  std::size_t factors() const { return degrees.size(); }
  friend bool operator==(const ProductShape&, const ProductShape&) = default;
};

std::string to_string(const ProductShape& shape);

/// One irreducible of a product of symmetric groups: one label per factor.
using ModuleKey = std::vector<Diagram>;

/// A finite-dimensional module over S_{n_1} x ... x S_{n_d}, stored as the
/// multiplicities of its irreducible constituents. Only positive
/// multiplicities are stored; entries iterate in decreasing lex order of keys.
class ModuleDecomp {
 public:
  using Entries = std::map<ModuleKey, std::int64_t, std::greater<>>;

  /// The zero module of the given shape.
  explicit ModuleDecomp(ProductShape shape);

  /// One copy of the trivial module of the empty product.
  static ModuleDecomp unit();

  const ProductShape& shape() const { return shape_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Adds `m` copies of `key`. Throws ShapeMismatch if the key does not fit.
  void add(const ModuleKey& key, std::int64_t m);

  /// Stored multiplicity or 0. Throws ShapeMismatch if the key does not fit.
  std::int64_t multiplicity(const ModuleKey& key) const;

  /// Sum over constituents of multiplicity times the product of dimensions.
  std::uint64_t dimension() const;

  friend bool operator==(const ModuleDecomp&, const ModuleDecomp&) = default;

 private:
  void check_key(const ModuleKey& key) const;

  ProductShape shape_;
  Entries entries_;
};

ModuleDecomp md_sum(const ModuleDecomp& a, const ModuleDecomp& b);
ModuleDecomp md_tensor(const ModuleDecomp& a, const ModuleDecomp& b);
std::int64_t md_multiplicity(const ModuleDecomp& m, const ModuleKey& key);

/// Lifts a multiplicity map on one symmetric group to a one-factor module.
ModuleDecomp single_factor(int degree, const Multiplicities& mults);

// Named modules over symmetric groups.

/// Permutation module of S_2r on the cosets of the hyperoctahedral subgroup
/// (equivalently on perfect matchings of 2r points). Every partition of 2r
/// with all parts even, each once.
ModuleDecomp hyperoctahedral_module(int r);

/// Sum over 0 <= k <= min(p,q) of the induction to S_{p+q} of
/// hyperoctahedral(k) x sgn_{p-k} x sgn_{q-k}.
ModuleDecomp signed_hyperoctahedral_module(int p, int q);

/// Induction of the trivial module from the diagonal S_r to S_r x S_r, which
/// is the sum of sigma x sigma over Irr(S_r).
ModuleDecomp diagonal_module(int r);

/// hyperoctahedral(r/2) x signed_hyperoctahedral(p - r/2, q - r/2) when r is
/// even and min(p,q) >= r/2; otherwise the zero module. Shape (r, p+q-r).
ModuleDecomp matching_first_module(int p, int q, int r);

/// Same factors in the opposite order. Shape (p+q-r, r).
ModuleDecomp matching_last_module(int p, int q, int r);

// Coherent continuation modules of the integral Weyl group.

/// Coherent continuation module of the double cover of U(p,q), split into
/// the part coming from U(p,q) and the genuine part.
struct UTildeCoherent {
  ModuleDecomp total;
  ModuleDecomp non_genuine;
  ModuleDecomp genuine;
};

/// Throws DegreeMismatch unless p + q = n_h + n_0.
UTildeCoherent coherent_u_tilde(int p, int q, CosetSignature sig);

/// SU(p,q). When p = q = n_h = n_0 two diagonal summands join the U~ terms.
ModuleDecomp coherent_su(int p, int q, CosetSignature sig);

/// GL_n(C): the regular representation of S_{n_h} x S_{n_0} written as
/// sum of (s1, s2, s1, s2). Shape (n_h, n_0, n_h, n_0).
ModuleDecomp coherent_glc(CosetSignature sig);

/// SL_n(C): coherent_glc plus, when n_h = n_0, the swapped terms (s1, s2, s2, s1).
ModuleDecomp coherent_slc(CosetSignature sig);

/// GL_n(C) or SL_n(C) for an orbit pair whose factors have signatures
/// `left` and `right`. Pairs with different signatures are never of the form
/// (O, O) and have no unipotent representations; they get the zero module.
ModuleDecomp coherent_complex(CosetSignature left, CosetSignature right, bool special_linear);

}  // namespace typea
