#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "typea/diagrams.hpp"
#include "typea/weylmodules.hpp"

namespace typea {

enum class GroupKind { GlR, SlR, GlC, SlC, UTilde, Su, GlH, SlH };

/// "gl-r", "sl-r", "gl-c", "sl-c", "u-tilde", "su", "gl-h", "sl-h".
std::string_view to_string(GroupKind kind);
std::optional<GroupKind> parse_group_kind(std::string_view text);

bool is_unitary(GroupKind kind);
bool is_complex(GroupKind kind);
bool is_quaternionic(GroupKind kind);
bool is_special(GroupKind kind);

/// A group together with its parameters: n for linear groups, (p, q) for the
/// unitary ones (then n = p + q).
class GroupSpec {
 public:
  /// Linear kinds. Throws InvalidParameter for unitary kinds, n < 1, n < 2
  /// for special linear kinds, or odd n for quaternionic kinds.
  static GroupSpec linear(GroupKind kind, int n);
  /// SU(p,q) or U~(p,q). p, q >= 0; n >= 2 for SU and n >= 1 for U~.
  static GroupSpec unitary(GroupKind kind, int p, int q);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }

  /// e.g. "sl-r(4)", "su(2,1)".
  std::string describe() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, int n, int p, int q) : kind_(kind), n_(n), p_(p), q_(q) {}

  GroupKind kind_;
  int n_;
  int p_ = 0;
  int q_ = 0;
};

/// One diagram for real and unitary groups; an ordered pair for the complex
/// groups, whose dual orbit lives in gl_n x gl_n.
struct OrbitSpec {
  Diagram first;
  std::optional<Diagram> second;

  static OrbitSpec single(Diagram d) { return {std::move(d), std::nullopt}; }
  static OrbitSpec pair(Diagram a, Diagram b) { return {std::move(a), std::move(b)}; }

  friend bool operator==(const OrbitSpec&, const OrbitSpec&) = default;
};

enum class CharacterTag { Trivial, Sign };
std::string_view to_string(CharacterTag tag);

/// One GL_r(R) factor of the Levi and the character placed on it.
struct LeviBlock {
  int size;
  CharacterTag tag;
  friend bool operator==(const LeviBlock&, const LeviBlock&) = default;
};

/// Parabolic induction from a Levi prod_l GL_{r_l}(R)^{m_l} of trivial or
/// sign characters; `a[l]` of the m_l blocks of size r_l carry the sign.
struct InducedRepDescriptor {
  std::vector<LeviBlock> blocks;
  std::vector<int> a;
  friend bool operator==(const InducedRepDescriptor&, const InducedRepDescriptor&) = default;
};

InducedRepDescriptor make_descriptor(const RowProfile& profile, const std::vector<int>& a);

enum class PairSign { Plus, Minus };

/// Restriction to SL_n(R) that stays irreducible.
struct Restricted {
  InducedRepDescriptor descriptor;
  friend bool operator==(const Restricted&, const Restricted&) = default;
};

/// One of the two constituents of a sign-twist fixed representation.
struct SignedPair {
  InducedRepDescriptor descriptor;
  PairSign sign;
  friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

using SLRParam = std::variant<Restricted, SignedPair>;

/// Lusztig left cell attached to the orbit, as a tuple of irreducible labels.
struct CellRep {
  std::vector<Diagram> labels;
  friend bool operator==(const CellRep&, const CellRep&) = default;
};

/// (n_h, n_0) labels for SU/U~; (n_h, n_0, n_h', n_0') for the complex groups.
CellRep cell_rep(GroupKind kind, const OrbitSpec& orbit);

/// One descriptor per a in D (0 <= a_l <= m_l), lexicographic in a.
std::vector<InducedRepDescriptor> gl_r_params(const Diagram& orbit);

/// a -> m - a. Throws InvalidParameter if `a` is outside D.
std::vector<int> sgn_twist(const std::vector<int>& a, const RowProfile& profile);

struct PlusMinusZero {
  std::vector<std::vector<int>> plus;
  std::vector<std::vector<int>> minus;
  std::vector<std::vector<int>> zero;
};

/// plus: 2a < m lexicographically; zero: 2a = m; minus = twist(plus) in the
/// same order as plus.
PlusMinusZero split_pmz(const Diagram& orbit);

std::vector<SLRParam> sl_r_enumerate(const Diagram& orbit);

enum class CountMethod { Enumeration, Multiplicity };
std::string_view to_string(CountMethod method);

struct CountResult {
  GroupSpec group;
  OrbitSpec orbit;
  CosetSignature sig;
  std::int64_t count;
  CountMethod method;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// Throws UnsupportedKind for the quaternionic groups and DegreeMismatch if the
/// orbit does not have size n.
CountResult count_unipotent(const GroupSpec& group, const OrbitSpec& orbit);

/// One explicit parameter of a real group: the induced representation of
/// GL_n(R), and for SL_n(R) constituents of a split restriction, its sign.
struct EnumerationEntry {
  InducedRepDescriptor descriptor;
  std::optional<PairSign> sign;
  friend bool operator==(const EnumerationEntry&, const EnumerationEntry&) = default;
};

struct Enumeration {
  GroupSpec group;
  Diagram orbit;
  std::vector<EnumerationEntry> entries;
  friend bool operator==(const Enumeration&, const Enumeration&) = default;
};

/// Explicit parameters for gl-r and sl-r; other kinds throw UnsupportedKind.
Enumeration enumerate_parameters(const GroupSpec& group, const Diagram& orbit);

/// The coherent continuation module relevant to counting for `group` at the
/// orbit's coset, with the cell representation and its multiplicity. For
/// u-tilde the genuine and non-genuine parts are filled in.
struct CoherentResult {
  GroupSpec group;
  OrbitSpec orbit;
  CosetSignature sig;
  ModuleDecomp module;
  std::optional<ModuleDecomp> non_genuine;
  std::optional<ModuleDecomp> genuine;
  CellRep cell;
  std::int64_t cell_multiplicity;
  friend bool operator==(const CoherentResult&, const CoherentResult&) = default;
};

/// Supported for su, u-tilde, gl-c and sl-c.
CoherentResult coherent_module(const GroupSpec& group, const OrbitSpec& orbit);

struct CountingEquality {
  std::int64_t su;
  std::int64_t u_tilde;
  bool holds() const { return su == u_tilde; }
};

/// Compares the SU(p,q) and U~(p,q) counts for `orbit`.
CountingEquality verify_counting_equality(int p, int q, const Diagram& orbit);

}  // namespace typea
