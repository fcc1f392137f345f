#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typea {

/// A Young diagram, stored as its row lengths in weakly decreasing order.
///
/// Diagrams label nilpotent orbits in type A (Jordan block sizes) and
/// irreducible representations of symmetric groups. The empty diagram is a
/// valid value: it is the only label of S_0.
class Diagram {
 public:
  Diagram() = default;

  /// Sorts `parts` into weakly decreasing order. Throws InvalidPartition on
  /// any entry below 1.
  explicit Diagram(std::vector<int> parts);
  Diagram(std::initializer_list<int> parts) : Diagram(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Row `i` (0-based); rows past the end have length 0.
  int row(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Diagram make_diagram(std::span<const int> parts);

/// Bracketed row-length form, e.g. "[3,1,1]"; the empty diagram is "[]".
std::string to_string(const Diagram& d);
std::ostream& operator<<(std::ostream& os, const Diagram& d);

/// Parses the orbit text format "3,1,1" (whitespace tolerated, empty string
/// is the empty diagram). Throws InvalidPartition on malformed input.
Diagram parse_diagram(std::string_view text);

/// Distinct nonzero row lengths, strictly decreasing, with multiplicities.
struct RowProfile {
  std::vector<int> lengths;
  std::vector<int> mults;

  std::size_t k() const { return lengths.size(); }
  friend bool operator==(const RowProfile&, const RowProfile&) = default;
};

/// Coset of the infinitesimal character: `n_h` half-integral coordinates
/// (from even rows) and `n_0` integral ones (from odd rows).
struct CosetSignature {
  int n_h = 0;
  int n_0 = 0;

  int n() const { return n_h + n_0; }
  friend bool operator==(const CosetSignature&, const CosetSignature&) = default;
};

/// An exact half-integer, stored as twice its value.
struct HalfInteger {
  int twice = 0;

  bool is_integral() const { return twice % 2 == 0; }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

std::string to_string(HalfInteger h);

Diagram transpose(const Diagram& d);
RowProfile row_profile(const Diagram& d);

/// (even rows, odd rows).
std::pair<Diagram, Diagram> even_odd_split(const Diagram& d);

/// Diagram whose multiset of row lengths is the union of those of `a` and `b`.
Diagram r_union(const Diagram& a, const Diagram& b);

CosetSignature infinitesimal_coset(const Diagram& d);

/// Concatenation over rows of length r of ((r-1)/2, (r-3)/2, ..., -(r-1)/2),
/// sorted weakly decreasing.
std::vector<HalfInteger> lambda_vector(const Diagram& d);

/// All partitions of n in lexicographically decreasing order, so (n) comes
/// first and (1^n) last. This is the canonical order for labels and classes.
std::vector<Diagram> partitions_of(int n);

/// Partitions of n whose every part is even.
std::vector<Diagram> even_partitions_of(int n);

/// The one-column diagram (1^n).
Diagram column(int n);

}  // namespace typea
