// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "typea/cli.hpp"
#include "typea/diagrams.hpp"
#include "typea/oracle.hpp"
#include "typea/serialize.hpp"
#include "typea/symreps.hpp"
#include "typea/unipotent.hpp"
#include "typea/weylmodules.hpp"

using namespace typea;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. count(SU(p,q)) == count(U~(p,q)) for every orbit of size n <= 10 and p + q = n.
Outcome counting_equality() {
  Outcome o;
  const auto start = Clock::now();
  int cases = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& d : partitions_of(n)) {
      for (int p = 0; p <= n; ++p) {
        const auto eq = verify_counting_equality(p, n - p, d);
        ++cases;
        if (!eq.holds()) {
          o.fail("su(" + std::to_string(p) + "," + std::to_string(n - p) + ") " + to_string(d) + ": " +
                 std::to_string(eq.su) + " vs " + std::to_string(eq.u_tilde));
        }
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 120.0) o.fail("took " + std::to_string(t) + " s (limit 120 s)");
  if (o.pass) o.detail = std::to_string(cases) + " cases in " + std::to_string(t) + " s";
  return o;
}

// 2. Complex groups: 1 on diagonal pairs, 0 otherwise, via the multiplicity route.
Outcome complex_singletons() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        const std::int64_t want = a == b ? 1 : 0;
        for (GroupKind kind : {GroupKind::GlC, GroupKind::SlC}) {
          if (kind == GroupKind::SlC && n < 2) continue;
          const auto r = count_unipotent(GroupSpec::linear(kind, n), OrbitSpec::pair(a, b));
          ++cases;
          if (r.method != CountMethod::Multiplicity) o.fail("complex count did not use the multiplicity route");
          if (r.count != want) {
            o.fail(std::string(to_string(kind)) + " " + to_string(a) + " x " + to_string(b) + ": " +
                   std::to_string(r.count));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " pairs";
  return o;
}

// 3. Real split groups against exhaustive enumeration of D.
Outcome real_split_counts() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& d : partitions_of(n)) {
      const RowProfile profile = row_profile(d);
      const auto D = oracle::enumerate_D_bruteforce(profile);
      std::int64_t fixed = 0;
      for (const auto& a : D) {
        bool self = true;
        for (std::size_t l = 0; l < a.size(); ++l) self = self && 2 * a[l] == profile.mults[l];
        if (self) ++fixed;
      }
      const auto gl_expected = static_cast<std::int64_t>(D.size());
      const std::int64_t sl_expected = (gl_expected - fixed) / 2 + 2 * fixed;

      std::int64_t product = 1;
      bool all_even = true;
      for (int m : profile.mults) {
        product *= m + 1;
        all_even = all_even && m % 2 == 0;
      }
      const std::int64_t closed_sl = (product + 3 * (all_even ? 1 : 0)) / 2;

      ++cases;
      const auto gl = static_cast<std::int64_t>(gl_r_params(d).size());
      const auto sl = static_cast<std::int64_t>(sl_r_enumerate(d).size());
      const auto gl_count = count_unipotent(GroupSpec::linear(GroupKind::GlR, n), OrbitSpec::single(d)).count;
      if (gl != gl_expected || gl != product || gl_count != gl) {
        o.fail("gl-r " + to_string(d) + ": " + std::to_string(gl) + " vs " + std::to_string(gl_expected));
      }
      if (n >= 2) {
        const auto sl_count = count_unipotent(GroupSpec::linear(GroupKind::SlR, n), OrbitSpec::single(d)).count;
        if (sl != sl_expected || sl != closed_sl || sl_count != sl) {
          o.fail("sl-r " + to_string(d) + ": " + std::to_string(sl) + " vs " + std::to_string(sl_expected));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " orbits";
  return o;
}

// 4. SL_2(R) and SU(1,1) by independent routes.
Outcome exceptional_isomorphism() {
  Outcome o;
  const std::pair<Diagram, std::int64_t> cases[] = {{Diagram({1, 1}), 3}, {Diagram({2}), 1}};
  for (const auto& [d, want] : cases) {
    const auto sl = count_unipotent(GroupSpec::linear(GroupKind::SlR, 2), OrbitSpec::single(d));
    const auto su = count_unipotent(GroupSpec::unitary(GroupKind::Su, 1, 1), OrbitSpec::single(d));
    if (sl.method != CountMethod::Enumeration || su.method != CountMethod::Multiplicity) {
      o.fail("routes are not independent");
    }
    if (sl.count != want || su.count != want) {
      o.fail(to_string(d) + ": sl-r " + std::to_string(sl.count) + ", su " + std::to_string(su.count) +
             ", expected " + std::to_string(want));
    }
  }
  if (o.pass) o.detail = "3 and 1 on both routes";
  return o;
}

// 5. Hyperoctahedral module against the perfect-matchings permutation character.
Outcome hyperoctahedral_oracle() {
  Outcome o;
  for (int r = 0; r <= 4; ++r) {
    const auto from_matchings = single_factor(2 * r, decompose(oracle::matchings_character(r)));
    if (hyperoctahedral_module(r) != from_matchings) o.fail("decomposition differs at r = " + std::to_string(r));
  }
  for (int r = 0; r <= 5; ++r) {
    std::uint64_t matchings = 1;  // (2r - 1)!!
    for (int k = 1; k < 2 * r; k += 2) matchings *= static_cast<std::uint64_t>(k);
    const std::uint64_t closed = factorial(2 * r) / ((std::uint64_t{1} << r) * factorial(r));
    const std::uint64_t dim = hyperoctahedral_module(r).dimension();
    if (dim != closed || dim != matchings) {
      o.fail("dimension at r = " + std::to_string(r) + ": " + std::to_string(dim) + " vs " + std::to_string(closed));
    }
  }
  if (o.pass) o.detail = "r <= 4 decomposition, r <= 5 dimension";
  return o;
}

// 6. Character engine: orthogonality, hook lengths, sum of squared dimensions.
Outcome character_engine() {
  Outcome o;
  character_cache().set_directory(std::nullopt);
  character_cache().clear();
  const auto start = Clock::now();
  for (int n = 0; n <= 8; ++n) {
    if (!oracle::orthogonality_check(n)) o.fail("orthogonality at n = " + std::to_string(n));
  }
  for (int n = 0; n <= 10; ++n) {
    const auto table = character_table(n);
    const auto identity = class_index(column(n));
    std::uint64_t squares = 0;
    for (std::size_t i = 0; i < table->partitions().size(); ++i) {
      const auto& label = table->partitions()[i];
      const auto dim = static_cast<std::uint64_t>(table->rows()[i][identity]);
      if (hook_dimension(label) != dim) o.fail("hook dimension of " + to_string(label));
      squares += dim * dim;
    }
    if (squares != factorial(n)) o.fail("sum of squares at n = " + std::to_string(n));
  }
  const double t = seconds_since(start);
  if (t >= 30.0) o.fail("took " + std::to_string(t) + " s (limit 30 s)");
  if (o.pass) o.detail = "n <= 8 orthogonality, n <= 10 dimensions in " + std::to_string(t) + " s";
  return o;
}

// 7. Littlewood-Richardson against Frobenius reciprocity with an induced character.
Outcome lr_vs_frobenius() {
  Outcome o;
  int cases = 0;
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; a + b <= 8; ++b) {
      const int degrees[] = {a, b};
      const auto big = character_table(a + b);
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const ClassFunction chars[] = {character_table(a)->character(lambda), character_table(b)->character(mu)};
          const auto induced = oracle::induced_character(degrees, chars);
          for (const auto& nu : partitions_of(a + b)) {
            ++cases;
            const Rational ip = inner_product(induced, big->character(nu));
            const auto lr = lr_coefficient(lambda, mu, nu);
            if (ip.den != 1 || ip.num != lr) {
              o.fail("c(" + to_string(lambda) + "," + to_string(mu) + "; " + to_string(nu) + ") = " +
                     std::to_string(lr) + " vs " + to_string(ip));
            }
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " coefficients";
  return o;
}

// 8. The complex coherent module is the regular representation.
Outcome regular_dimension() {
  Outcome o;
  for (int n_h = 0; n_h <= 8; ++n_h) {
    for (int n_0 = 0; n_h + n_0 <= 8; ++n_0) {
      const auto dim = coherent_glc({n_h, n_0}).dimension();
      if (dim != factorial(n_h) * factorial(n_0)) {
        o.fail("(" + std::to_string(n_h) + "," + std::to_string(n_0) + "): " + std::to_string(dim));
      }
    }
  }
  if (o.pass) o.detail = "45 signatures";
  return o;
}

// 9. Orbits with rows of both parities never meet the diagonal summands.
Outcome structural_zero() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& d : partitions_of(n)) {
      const auto sig = infinitesimal_coset(d);
      if (sig.n_h == 0 || sig.n_0 == 0) continue;
      ++cases;
      const auto cell = cell_rep(GroupKind::Su, OrbitSpec::single(d));
      const auto [even, odd] = even_odd_split(d);
      if (transpose(even) == transpose(odd)) o.fail("cell components coincide for " + to_string(d));
      if (sig.n_h != sig.n_0) continue;  // no diagonal summand at this coset
      const int r = sig.n_h;
      if (md_multiplicity(diagonal_module(r), cell.labels) != 0) o.fail("diagonal summand meets " + to_string(d));
      const auto without = md_sum(matching_first_module(r, r, r), matching_last_module(r, r, r));
      if (md_multiplicity(coherent_su(r, r, sig), cell.labels) != md_multiplicity(without, cell.labels)) {
        o.fail("su(" + std::to_string(r) + "," + std::to_string(r) + ") count moved by diagonal summands at " +
               to_string(d));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " mixed-parity orbits";
  return o;
}

// 10. CLI determinism across cache states and JSON round trips.
const std::vector<std::vector<std::string>>& battery() {
  static const std::vector<std::vector<std::string>> commands{
      {"count", "--group", "su", "--p", "1", "--q", "1", "--orbit", "1,1"},
      {"count", "--group", "su", "--p", "1", "--q", "1", "--orbit", "2", "--format", "json"},
      {"count", "--group", "u-tilde", "--p", "3", "--q", "2", "--orbit", "2,2,1", "--format", "json"},
      {"count", "--group", "sl-r", "--n", "4", "--orbit", "2,2", "--format", "json"},
      {"count", "--group", "gl-r", "--orbit", "3,2,2,1,1"},
      {"count", "--group", "sl-c", "--orbit", "3,1", "--orbit2", "3,1", "--format", "json"},
      {"count", "--group", "gl-c", "--orbit", "2,1", "--orbit2", "3", "--format", "json"},
      {"count", "--group", "su", "--p", "4", "--q", "4", "--orbit", "2,2,2,1,1", "--format", "json"},
      {"enumerate", "--group", "sl-r", "--n", "4", "--orbit", "2,2", "--format", "json"},
      {"enumerate", "--group", "gl-r", "--orbit", "3,1,1", "--format", "json"},
      {"enumerate", "--group", "sl-r", "--orbit", "2,2,1,1"},
      {"coh", "--group", "u-tilde", "--p", "2", "--q", "2", "--orbit", "2,1,1", "--format", "json"},
      {"coh", "--group", "su", "--p", "3", "--q", "3", "--orbit", "2,2,1,1", "--format", "json"},
      {"coh", "--group", "sl-c", "--orbit", "2,1", "--format", "json"},
      {"coh", "--group", "su", "--p", "2", "--q", "1", "--orbit", "3"},
      {"cell", "--group", "su", "--p", "2", "--q", "2", "--orbit", "2,1,1", "--format", "json"},
      {"cell", "--group", "gl-c", "--orbit", "2,2", "--orbit2", "3,1"},
      {"chartable", "--n", "7", "--format", "json"},
      {"chartable", "--n", "4"},
      {"verify", "--max-size", "5", "--format", "json"},
  };
  return commands;
}

std::vector<std::string> run_battery(const std::optional<std::filesystem::path>& cache_dir) {
  std::vector<std::string> outputs;
  for (auto args : battery()) {
    character_cache().clear();
    if (cache_dir) args.insert(args.end(), {"--cache-dir", cache_dir->string()});
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    outputs.push_back(std::to_string(code) + "\n" + out.str() + err.str());
  }
  return outputs;
}

std::string reserialize(const std::string& command, const std::string& text) {
  const Json j = Json::parse(text);
  Json back;
  if (command == "count") back = to_json(count_result_from_json(j));
  else if (command == "enumerate") back = to_json(enumeration_from_json(j));
  else if (command == "coh") back = to_json(coherent_from_json(j));
  else if (command == "cell") back = to_json(cell_from_json(j));
  else if (command == "chartable") back = to_json(table_from_json(j));
  else if (command == "verify") back = to_json(report_from_json(j));
  return back.dump(2) + "\n";
}

Outcome cli_determinism() {
  Outcome o;
  ::unsetenv(cli::kCacheDirEnv);
  const auto dir = std::filesystem::temp_directory_path() / ("typea-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);

  const auto none = run_battery(std::nullopt);
  const auto cold = run_battery(dir);
  const auto warm = run_battery(dir);
  const auto again = run_battery(std::nullopt);
  std::filesystem::remove_all(dir);
  character_cache().set_directory(std::nullopt);

  int round_trips = 0;
  for (std::size_t i = 0; i < battery().size(); ++i) {
    const auto& args = battery()[i];
    std::string label;
    for (const auto& a : args) label += (label.empty() ? "" : " ") + a;
    if (none[i].rfind("0\n", 0) != 0) o.fail("nonzero exit: " + label);
    if (none[i] != cold[i] || none[i] != warm[i] || none[i] != again[i]) o.fail("output differs: " + label);
    const bool json = args.size() >= 2 && args[args.size() - 2] == "--format" && args.back() == "json";
    if (!json) continue;
    const std::string body = none[i].substr(2);
    try {
      if (reserialize(args.front(), body) != body) o.fail("round trip changed output: " + label);
      ++round_trips;
    } catch (const std::exception& e) {
      o.fail("round trip failed for " + label + ": " + e.what());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(battery().size()) + " commands byte-identical across 4 cache states, " +
               std::to_string(round_trips) + " JSON round trips";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counting equality SU(p,q) = U~(p,q), n <= 10", counting_equality},
      {"complex groups: singleton on diagonal pairs, empty otherwise, size <= 10", complex_singletons},
      {"GL_n(R)/SL_n(R) counts vs exhaustive enumeration, size <= 12", real_split_counts},
      {"SL_2(R) vs SU(1,1) packet sizes 3 and 1", exceptional_isomorphism},
      {"hyperoctahedral module vs perfect matchings", hyperoctahedral_oracle},
      {"character engine: orthogonality, hook lengths, sum of squares", character_engine},
      {"Littlewood-Richardson vs Frobenius reciprocity, total <= 8", lr_vs_frobenius},
      {"complex coherent module has regular dimension, n <= 8", regular_dimension},
      {"structural zero of diagonal summands, size <= 10", structural_zero},
      {"CLI determinism and JSON round trip, 20 commands", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first << " (" << o.detail
              << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
