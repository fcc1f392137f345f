#include "typea/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "typea/error.hpp"
#include "typea/unipotent.hpp"
#include "typea/weylmodules.hpp"

namespace typea::oracle {

std::vector<Matching> enumerate_matchings(int r, const Bounds& bounds) {
  if (r > bounds.max_matching_r) {
    throw BoundExceeded("matchings oracle bound is r <= " + std::to_string(bounds.max_matching_r) +
                        ", got " + std::to_string(r));
  }
  std::vector<Matching> out;
  std::vector<bool> used(2 * r + 1, false);
  Matching current;
  auto rec = [&](auto&& self) -> void {
    int first = 1;
    while (first <= 2 * r && used[first]) ++first;
    if (first > 2 * r) {
      out.push_back(current);
      return;
    }
    used[first] = true;
    for (int second = first + 1; second <= 2 * r; ++second) {
      if (used[second]) continue;
      used[second] = true;
      current.pairs.emplace_back(first, second);
      self(self);
      current.pairs.pop_back();
      used[second] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

std::vector<int> representative_permutation(const Diagram& cycle_type) {
  std::vector<int> perm(cycle_type.size() + 1, 0);
  int start = 1;
  for (int len : cycle_type.parts()) {
    for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
    start += len;
  }
  return perm;
}

ClassFunction matchings_character(int r, const Bounds& bounds) {
  const auto matchings = enumerate_matchings(r, bounds);
  return ClassFunction::from(2 * r, [&](const Diagram& mu) {
    const auto perm = representative_permutation(mu);
    std::int64_t fixed = 0;
    for (const auto& m : matchings) {
      std::vector<int> partner(2 * r + 1, 0);
      for (auto [a, b] : m.pairs) {
        partner[a] = b;
        partner[b] = a;
      }
      bool stable = true;
      for (auto [a, b] : m.pairs) stable = stable && partner[perm[a]] == perm[b];
      fixed += stable ? 1 : 0;
    }
    return fixed;
  });
}

ClassFunction induced_character(std::span<const int> sub_degrees,
                                std::span<const ClassFunction> sub_characters) {
  if (sub_degrees.size() != sub_characters.size()) {
    throw DegreeMismatch("induced_character: " + std::to_string(sub_degrees.size()) +
                         " degrees but " + std::to_string(sub_characters.size()) + " characters");
  }
  for (std::size_t i = 0; i < sub_degrees.size(); ++i) {
    if (sub_characters[i].degree() != sub_degrees[i]) {
      throw DegreeMismatch("induced_character: factor " + std::to_string(i) + " has degree " +
                           std::to_string(sub_characters[i].degree()) + ", expected " +
                           std::to_string(sub_degrees[i]));
    }
  }
  const int n = std::accumulate(sub_degrees.begin(), sub_degrees.end(), 0);
  ClassFunction out = ClassFunction::zero(n);

  std::vector<std::vector<Diagram>> classes;
  for (int d : sub_degrees) classes.push_back(partitions_of(d));
  std::vector<Diagram> chosen(sub_degrees.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == sub_degrees.size()) {
      Diagram fused;
      std::uint64_t sub_centralizer = 1;
      std::int64_t value = 1;
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        fused = r_union(fused, chosen[j]);
        sub_centralizer *= centralizer_order(chosen[j]);
        value *= sub_characters[j].at(chosen[j]);
      }
      const auto weight = static_cast<std::int64_t>(centralizer_order(fused) / sub_centralizer);
      out[class_index(fused)] += weight * value;
      return;
    }
    for (const auto& nu : classes[i]) {
      chosen[i] = nu;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool orthogonality_check(const CharacterTable& table) {
  const auto& classes = table.partitions();
  const auto& rows = table.rows();
  const std::size_t count = classes.size();
  const auto order = static_cast<__int128>(factorial(table.degree()));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      __int128 row_sum = 0;
      __int128 col_sum = 0;
      for (std::size_t c = 0; c < count; ++c) {
        row_sum += static_cast<__int128>(class_size(classes[c])) * rows[a][c] * rows[b][c];
        col_sum += static_cast<__int128>(rows[c][a]) * rows[c][b];
      }
      if (row_sum != (a == b ? order : 0)) return false;
      if (col_sum != (a == b ? static_cast<__int128>(centralizer_order(classes[a])) : 0)) return false;
    }
  }
  return true;
}

bool orthogonality_check(int n, const Bounds& bounds) {
  if (n > bounds.max_orthogonality_degree) {
    throw BoundExceeded("orthogonality oracle bound is n <= " +
                        std::to_string(bounds.max_orthogonality_degree) + ", got " + std::to_string(n));
  }
  return orthogonality_check(*character_table(n));
}

std::vector<std::vector<int>> enumerate_D_bruteforce(const RowProfile& profile) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(profile.k(), 0);
  while (true) {
    out.push_back(a);
    std::size_t pos = a.size();
    while (pos > 0) {
      --pos;
      if (a[pos] < profile.mults[pos]) {
        ++a[pos];
        std::fill(a.begin() + pos + 1, a.end(), 0);
        break;
      }
      if (pos == 0) return out;
    }
    if (a.empty()) return out;
  }
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

namespace {

std::string join(const std::vector<std::int64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string describe(const Multiplicities& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, c] : m) {
    if (!first) out += ',';
    first = false;
    out += to_string(d) + ":" + std::to_string(c);
  }
  return out + "}";
}

std::string describe(const ModuleDecomp& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, c] : m.entries()) {
    if (!first) out += ',';
    first = false;
    out += '(';
    for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + to_string(key[i]);
    out += "):" + std::to_string(c);
  }
  return out + "}";
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  template <typename T>
  void check(std::string name, std::string instance, const T& expected, const T& actual) {
    report_.records.push_back({std::move(name), std::move(instance), str(expected), str(actual),
                               expected == actual});
  }

 private:
  static std::string str(const std::string& s) { return s; }
  static std::string str(bool b) { return b ? "true" : "false"; }
  static std::string str(std::int64_t v) { return std::to_string(v); }
  static std::string str(std::uint64_t v) { return std::to_string(v); }

  VerificationReport& report_;
};


}  // namespace

VerificationReport run_verification(int max_size, const Bounds& bounds) {
  VerificationReport report;
  Recorder rec(report);
  const int table_max = std::min(max_size, bounds.max_orthogonality_degree);

  for (int n = 0; n <= table_max; ++n) {
    rec.check("orthogonality", "n=" + std::to_string(n), true, orthogonality_check(n, bounds));
  }

  for (int n = 0; n <= max_size; ++n) {
    const auto table = character_table(n);
    std::uint64_t squares = 0;
    for (const auto& label : table->partitions()) {
      const auto dim = hook_dimension(label);
      squares += dim * dim;
      rec.check("hook-dimension", to_string(label), static_cast<std::int64_t>(dim),
                table->value(label, column(n)));
    }
    rec.check("sum-of-squared-dimensions", "n=" + std::to_string(n), factorial(n), squares);
  }

  for (int n = 0; n <= table_max; ++n) {
    const auto table = character_table(n);
    const ClassFunction sgn = sign_character(n);
    for (const auto& label : table->partitions()) {
      std::vector<std::int64_t> direct;
      for (const auto& mu : table->partitions()) direct.push_back(murnaghan_nakayama(label, mu));
      rec.check("table-vs-direct-recursion", to_string(label), join(direct),
                join(table->character(label).values()));
      rec.check("sign-twist", to_string(label), join(table->character(transpose(label)).values()),
                join((table->character(label) * sgn).values()));
    }
  }

  const int lr_max = std::min(max_size, bounds.max_orthogonality_degree);
  for (int total = 0; total <= lr_max; ++total) {
    for (int a = 0; a <= total; ++a) {
      const int b = total - a;
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const int degrees[] = {a, b};
          const ClassFunction chars[] = {character_table(a)->character(lambda),
                                         character_table(b)->character(mu)};
          const Multiplicities frobenius = decompose(induced_character(degrees, chars));
          rec.check("lr-vs-frobenius", to_string(lambda) + "*" + to_string(mu), describe(frobenius),
                    describe(lr_product(lambda, mu)));
        }
      }
    }
  }

  for (int r = 0; 2 * r <= max_size && r <= bounds.max_matching_r; ++r) {
    const Multiplicities oracle = decompose(matchings_character(r, bounds));
    rec.check("hyperoctahedral-vs-matchings", "r=" + std::to_string(r),
              describe(single_factor(2 * r, oracle)), describe(hyperoctahedral_module(r)));
  }
  for (int r = 0; 2 * r <= max_size; ++r) {
    rec.check("hyperoctahedral-dimension", "r=" + std::to_string(r),
              factorial(2 * r) / ((std::uint64_t{1} << r) * factorial(r)),
              hyperoctahedral_module(r).dimension());
  }

  for (int n = 0; n <= max_size; ++n) {
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (std::min(p, q) > bounds.max_matching_r) continue;
      ClassFunction induced = ClassFunction::zero(n);
      for (int k = 0; k <= std::min(p, q); ++k) {
        const int degrees[] = {2 * k, p - k, q - k};
        const ClassFunction chars[] = {matchings_character(k, bounds), sign_character(p - k),
                                       sign_character(q - k)};
        induced += induced_character(degrees, chars);
      }
      rec.check("signed-hyperoctahedral-vs-induced", "p=" + std::to_string(p) + ",q=" + std::to_string(q),
                describe(single_factor(n, decompose(induced))),
                describe(signed_hyperoctahedral_module(p, q)));
    }
  }

  for (int n = 0; n <= max_size; ++n) {
    for (int nh = 0; nh <= n; ++nh) {
      const CosetSignature sig{nh, n - nh};
      rec.check("glc-regular-dimension", "sig=(" + std::to_string(nh) + "," + std::to_string(n - nh) + ")",
                factorial(sig.n_h) * factorial(sig.n_0), coherent_glc(sig).dimension());
    }
  }

  for (int n = 1; n <= max_size; ++n) {
    for (const auto& orbit : partitions_of(n)) {
      const RowProfile profile = row_profile(orbit);
      const auto brute = enumerate_D_bruteforce(profile);
      std::vector<std::vector<int>> listed;
      for (const auto& d : gl_r_params(orbit)) listed.push_back(d.a);
      rec.check("gl-r-parameters", to_string(orbit), true, listed == brute);

      const auto split = split_pmz(orbit);
      std::vector<std::vector<int>> merged = split.plus;
      merged.insert(merged.end(), split.minus.begin(), split.minus.end());
      merged.insert(merged.end(), split.zero.begin(), split.zero.end());
      std::sort(merged.begin(), merged.end());
      rec.check("plus-minus-zero-partition", to_string(orbit), true,
                merged == brute && split.plus.size() == split.minus.size());

      if (n >= 2) {
        const bool all_even = std::all_of(profile.mults.begin(), profile.mults.end(),
                                          [](int m) { return m % 2 == 0; });
        const auto formula = static_cast<std::int64_t>((brute.size() + (all_even ? 3 : 0)) / 2);
        rec.check("sl-r-count", to_string(orbit), formula,
                  count_unipotent(GroupSpec::linear(GroupKind::SlR, n), OrbitSpec::single(orbit)).count);
      }
    }
  }

  for (int n = 2; n <= max_size; ++n) {
    for (const auto& orbit : partitions_of(n)) {
      for (int p = 0; p <= n; ++p) {
        const auto eq = verify_counting_equality(p, n - p, orbit);
        rec.check("counting-equality",
                  "su(" + std::to_string(p) + "," + std::to_string(n - p) + ")" + to_string(orbit),
                  eq.u_tilde, eq.su);
      }
    }
  }

  for (int n = 2; n <= max_size; ++n) {
    const auto group = GroupSpec::linear(GroupKind::SlC, n);
    for (const auto& left : partitions_of(n)) {
      for (const auto& right : partitions_of(n)) {
        rec.check("sl-c-singleton", to_string(left) + "x" + to_string(right),
                  std::int64_t{left == right ? 1 : 0},
                  count_unipotent(group, OrbitSpec::pair(left, right)).count);
      }
    }
  }

  for (int n = 1; n <= max_size; ++n) {
    for (const auto& orbit : partitions_of(n)) {
      const auto sig = infinitesimal_coset(orbit);
      if (sig.n_h == 0 || sig.n_0 == 0 || sig.n_h != sig.n_0) continue;
      const CellRep cell = cell_rep(GroupKind::Su, OrbitSpec::single(orbit));
      rec.check("diagonal-summand-zero", to_string(orbit), std::int64_t{0},
                diagonal_module(sig.n_h).multiplicity(cell.labels));
    }
  }

  if (max_size >= 2) {
    for (const auto& orbit : partitions_of(2)) {
      rec.check("sl2r-vs-su11", to_string(orbit),
                count_unipotent(GroupSpec::linear(GroupKind::SlR, 2), OrbitSpec::single(orbit)).count,
                count_unipotent(GroupSpec::unitary(GroupKind::Su, 1, 1), OrbitSpec::single(orbit)).count);
    }
  }
  return report;
}

}  // namespace typea::oracle
