#include "typea/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "typea/error.hpp"
#include "typea/oracle.hpp"
#include "typea/serialize.hpp"
#include "typea/unipotent.hpp"

namespace typea::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<std::string> orbit;
  std::optional<std::string> orbit2;
  std::string format = "table";
  std::optional<std::string> cache_dir;
  int max_size = 8;
};

void add_group_flags(CLI::App* cmd, Options& o, bool with_orbit2) {
  cmd->add_option("--group", o.group, "group kind: gl-r sl-r gl-c sl-c u-tilde su gl-h sl-h")->required();
  cmd->add_option("--n", o.n, "degree n (linear kinds)");
  cmd->add_option("--p", o.p, "p (unitary kinds)");
  cmd->add_option("--q", o.q, "q (unitary kinds)");
  cmd->add_option("--orbit", o.orbit, "orbit as comma-separated row lengths, e.g. 3,1,1")->required();
  if (with_orbit2) cmd->add_option("--orbit2", o.orbit2, "second orbit factor (complex kinds)");
}

GroupKind parse_kind(const std::string& text) {
  auto kind = parse_group_kind(text);
  if (!kind) throw UsageError("unknown group kind '" + text + "'");
  return *kind;
}

struct Input {
  GroupSpec group;
  OrbitSpec orbit;
};

Input resolve(const Options& o) {
  const GroupKind kind = parse_kind(o.group);
  Diagram first = parse_diagram(*o.orbit);
  std::optional<Diagram> second;
  if (o.orbit2 && !is_complex(kind)) throw UsageError("--orbit2 is only valid for gl-c and sl-c");
  if (is_complex(kind)) second = o.orbit2 ? parse_diagram(*o.orbit2) : first;

  if (is_unitary(kind)) {
    if (!o.p || !o.q) throw UsageError(o.group + " needs --p and --q");
    GroupSpec group = GroupSpec::unitary(kind, *o.p, *o.q);
    if (o.n && *o.n != group.n()) {
      throw DegreeMismatch("--n " + std::to_string(*o.n) + " differs from p + q = " +
                           std::to_string(group.n()));
    }
    return {group, {std::move(first), std::move(second)}};
  }
  if (o.p || o.q) throw UsageError(o.group + " takes --n, not --p/--q");
  const int n = o.n.value_or(first.size());
  return {GroupSpec::linear(kind, n), {std::move(first), std::move(second)}};
}

std::string join_diagrams(const std::vector<Diagram>& ds, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? sep : "") + to_string(ds[i]);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void print_module(std::ostream& out, const char* title, const ModuleDecomp& m) {
  out << title << " shape " << to_string(m.shape()) << ", dimension " << m.dimension() << "\n";
  if (m.is_zero()) {
    out << "  0\n";
    return;
  }
  for (const auto& [key, mult] : m.entries()) {
    out << "  " << std::setw(4) << mult << "  " << join_diagrams(key, " x ") << "\n";
  }
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_count(const Options& o, std::ostream& out) {
  const Input in = resolve(o);
  const CountResult r = count_unipotent(in.group, in.orbit);
  if (o.format == "json") {
    emit_json(out, to_json(r));
  } else {
    out << r.count << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Input in = resolve(o);
  const Enumeration e = enumerate_parameters(in.group, in.orbit.first);
  if (o.format == "json") {
    emit_json(out, to_json(e));
    return 0;
  }
  out << in.group.describe() << " orbit " << to_string(e.orbit) << ": " << e.entries.size()
      << " parameters\n";
  out << std::left << std::setw(7) << "index" << std::setw(12) << "a" << std::setw(24) << "blocks"
      << std::setw(40) << "characters" << "label\n";
  for (std::size_t i = 0; i < e.entries.size(); ++i) {
    const auto& entry = e.entries[i];
    std::vector<Diagram> blocks;
    std::string sizes = "[", tags;
    for (std::size_t b = 0; b < entry.descriptor.blocks.size(); ++b) {
      const auto& block = entry.descriptor.blocks[b];
      sizes += (b ? "," : "") + std::to_string(block.size);
      tags += (b ? "," : "") + std::string(to_string(block.tag));
    }
    sizes += "]";
    const std::string label = !entry.sign ? "" : (*entry.sign == PairSign::Plus ? "+" : "-");
    out << std::setw(7) << i << std::setw(12) << join_ints(entry.descriptor.a) << std::setw(24) << sizes
        << std::setw(40) << tags << label << "\n";
  }
  out << std::right;
  return 0;
}

int cmd_coh(const Options& o, std::ostream& out) {
  const Input in = resolve(o);
  const CoherentResult r = coherent_module(in.group, in.orbit);
  if (o.format == "json") {
    emit_json(out, to_json(r));
    return 0;
  }
  out << in.group.describe() << " orbit " << to_string(r.orbit.first);
  if (r.orbit.second) out << " x " << to_string(*r.orbit.second);
  out << ", coset (n_h,n_0) = (" << r.sig.n_h << "," << r.sig.n_0 << ")\n";
  out << "cell " << join_diagrams(r.cell.labels, " x ") << ", multiplicity " << r.cell_multiplicity << "\n";
  print_module(out, "module", r.module);
  if (r.non_genuine) print_module(out, "non-genuine", *r.non_genuine);
  if (r.genuine) print_module(out, "genuine", *r.genuine);
  return 0;
}

int cmd_cell(const Options& o, std::ostream& out) {
  const Input in = resolve(o);
  const CellRep c = cell_rep(in.group.kind(), in.orbit);
  if (o.format == "json") {
    emit_json(out, to_json(c));
  } else {
    out << join_diagrams(c.labels, " x ") << "\n";
  }
  return 0;
}

int cmd_chartable(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("chartable needs --n");
  if (*o.n < 0) throw UsageError("--n must be non-negative");
  const auto table = character_table(*o.n);
  if (o.format == "json") {
    emit_json(out, to_json(*table));
    return 0;
  }
  std::size_t width = 6;
  for (const auto& d : table->partitions()) width = std::max(width, to_string(d).size() + 2);
  out << std::left << std::setw(static_cast<int>(width)) << "";
  for (const auto& mu : table->partitions()) out << std::setw(static_cast<int>(width)) << to_string(mu);
  out << "\n";
  for (std::size_t i = 0; i < table->partitions().size(); ++i) {
    out << std::setw(static_cast<int>(width)) << to_string(table->partitions()[i]);
    for (auto v : table->rows()[i]) out << std::setw(static_cast<int>(width)) << v;
    out << "\n";
  }
  out << std::right;
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_size < 0) throw UsageError("--max-size must be non-negative");
  const auto report = oracle::run_verification(o.max_size);
  if (o.format == "json") {
    emit_json(out, to_json(report));
  } else {
    std::map<std::string, std::pair<int, int>> summary;  // check -> (passed, total)
    std::vector<std::string> order;
    for (const auto& r : report.records) {
      auto [it, inserted] = summary.try_emplace(r.check, 0, 0);
      if (inserted) order.push_back(r.check);
      it->second.first += r.pass ? 1 : 0;
      ++it->second.second;
    }
    for (const auto& name : order) {
      const auto [passed, total] = summary.at(name);
      out << name << ": " << passed << "/" << total << " passed\n";
    }
    for (const auto& r : report.records) {
      if (!r.pass) {
        out << "FAILED " << r.check << " " << r.instance << ": expected " << r.expected << ", got "
            << r.actual << "\n";
      }
    }
    if (report.all_passed()) {
      out << "all checks passed\n";
    } else {
      out << report.failures() << " checks failed\n";
    }
  }
  return report.all_passed() ? 0 : 1;
}

void configure_cache(const Options& o) {
  if (o.cache_dir) {
    character_cache().set_directory(std::filesystem::path(*o.cache_dir));
  } else if (const char* env = std::getenv(kCacheDirEnv); env && *env) {
    character_cache().set_directory(std::filesystem::path(env));
  } else {
    character_cache().set_directory(std::nullopt);
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts and enumerates special unipotent representations of type A real groups"};
  app.name("typea");
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--cache-dir", o.cache_dir, "character table cache directory");
  };

  auto* count = app.add_subcommand("count", "number of special unipotent representations");
  add_group_flags(count, o, true);
  common(count);
  auto* enumerate = app.add_subcommand("enumerate", "explicit parameters for gl-r and sl-r");
  add_group_flags(enumerate, o, false);
  common(enumerate);
  auto* coh = app.add_subcommand("coh", "coherent continuation module at the orbit's coset");
  add_group_flags(coh, o, true);
  common(coh);
  auto* cell = app.add_subcommand("cell", "cell representation attached to the orbit");
  add_group_flags(cell, o, true);
  common(cell);
  auto* chartable = app.add_subcommand("chartable", "character table of S_n");
  chartable->add_option("--n", o.n, "degree")->required();
  common(chartable);
  auto* verify = app.add_subcommand("verify", "run every oracle and property sweep");
  verify->add_option("--max-size", o.max_size, "largest degree swept (default 8)");
  common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    configure_cache(o);
    if (count->parsed()) return cmd_count(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (coh->parsed()) return cmd_coh(o, out);
    if (cell->parsed()) return cmd_cell(o, out);
    if (chartable->parsed()) return cmd_chartable(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "typea: usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "typea: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace typea::cli
