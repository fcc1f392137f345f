#include "typea/unipotent.hpp"

#include <algorithm>
#include <array>

#include "typea/error.hpp"

namespace typea {

namespace {

constexpr std::array<std::pair<GroupKind, std::string_view>, 8> kKindNames{{
    {GroupKind::GlR, "gl-r"},
    {GroupKind::SlR, "sl-r"},
    {GroupKind::GlC, "gl-c"},
    {GroupKind::SlC, "sl-c"},
    {GroupKind::UTilde, "u-tilde"},
    {GroupKind::Su, "su"},
    {GroupKind::GlH, "gl-h"},
    {GroupKind::SlH, "sl-h"},
}};

// All a with 0 <= a_l <= m_l, lexicographic.
std::vector<std::vector<int>> tuples_below(const std::vector<int>& mults) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(mults.size(), 0);
  auto rec = [&](auto&& self, std::size_t l) -> void {
    if (l == mults.size()) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= mults[l]; ++v) {
      a[l] = v;
      self(self, l + 1);
    }
  };
  rec(rec, 0);
  return out;
}

void require_single(GroupKind kind, const OrbitSpec& orbit) {
  if (orbit.second) {
    throw InvalidParameter(std::string(to_string(kind)) + " takes a single orbit, not a pair");
  }
}

void require_size(const Diagram& d, int n) {
  if (d.size() != n) {
    throw DegreeMismatch("orbit " + to_string(d) + " has size " + std::to_string(d.size()) +
                         " but the group has degree " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GroupKind> parse_group_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

bool is_unitary(GroupKind kind) { return kind == GroupKind::UTilde || kind == GroupKind::Su; }
bool is_complex(GroupKind kind) { return kind == GroupKind::GlC || kind == GroupKind::SlC; }
bool is_quaternionic(GroupKind kind) { return kind == GroupKind::GlH || kind == GroupKind::SlH; }
bool is_special(GroupKind kind) {
  return kind == GroupKind::SlR || kind == GroupKind::SlC || kind == GroupKind::Su ||
         kind == GroupKind::SlH;
}

GroupSpec GroupSpec::linear(GroupKind kind, int n) {
  const std::string name(to_string(kind));
  if (is_unitary(kind)) throw InvalidParameter(name + " is parameterized by (p, q), not n");
  if (n < 1) throw InvalidParameter(name + " needs n >= 1, got " + std::to_string(n));
  if (is_special(kind) && n < 2) throw InvalidParameter(name + " needs n >= 2, got " + std::to_string(n));
  if (is_quaternionic(kind) && n % 2 != 0) {
    throw InvalidParameter(name + " needs even n, got " + std::to_string(n));
  }
  return GroupSpec(kind, n, 0, 0);
}

GroupSpec GroupSpec::unitary(GroupKind kind, int p, int q) {
  const std::string name(to_string(kind));
  if (!is_unitary(kind)) throw InvalidParameter(name + " is parameterized by n, not (p, q)");
  if (p < 0 || q < 0) throw InvalidParameter(name + " needs p, q >= 0");
  const int min_n = kind == GroupKind::Su ? 2 : 1;
  if (p + q < min_n) {
    throw InvalidParameter(name + " needs p + q >= " + std::to_string(min_n) + ", got " +
                           std::to_string(p + q));
  }
  return GroupSpec(kind, p + q, p, q);
}

std::string GroupSpec::describe() const {
  std::string out(to_string(kind_));
  if (is_unitary(kind_)) return out + "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  return out + "(" + std::to_string(n_) + ")";
}

std::string_view to_string(CharacterTag tag) { return tag == CharacterTag::Trivial ? "trivial" : "sign"; }

std::string_view to_string(CountMethod method) {
  return method == CountMethod::Enumeration ? "enumeration" : "multiplicity";
}

InducedRepDescriptor make_descriptor(const RowProfile& profile, const std::vector<int>& a) {
  if (a.size() != profile.k()) {
    throw InvalidParameter("parameter tuple has " + std::to_string(a.size()) + " entries, expected " +
                           std::to_string(profile.k()));
  }
  InducedRepDescriptor out{{}, a};
  for (std::size_t l = 0; l < profile.k(); ++l) {
    if (a[l] < 0 || a[l] > profile.mults[l]) {
      throw InvalidParameter("parameter entry " + std::to_string(a[l]) + " outside [0, " +
                             std::to_string(profile.mults[l]) + "]");
    }
    for (int j = 0; j < profile.mults[l] - a[l]; ++j) {
      out.blocks.push_back({profile.lengths[l], CharacterTag::Trivial});
    }
    for (int j = 0; j < a[l]; ++j) out.blocks.push_back({profile.lengths[l], CharacterTag::Sign});
  }
  return out;
}

CellRep cell_rep(GroupKind kind, const OrbitSpec& orbit) {
  auto transposed_split = [](const Diagram& d) {
    auto [even, odd] = even_odd_split(d);
    return std::pair{transpose(even), transpose(odd)};
  };
  if (is_unitary(kind)) {
    require_single(kind, orbit);
    auto [e, o] = transposed_split(orbit.first);
    return {{e, o}};
  }
  if (is_complex(kind)) {
    if (!orbit.second) {
      throw InvalidParameter(std::string(to_string(kind)) + " takes an orbit pair");
    }
    require_size(*orbit.second, orbit.first.size());
    auto [e1, o1] = transposed_split(orbit.first);
    auto [e2, o2] = transposed_split(*orbit.second);
    return {{e1, o1, e2, o2}};
  }
  throw UnsupportedKind("cell representations are defined for su, u-tilde, gl-c and sl-c, not " +
                        std::string(to_string(kind)));
}

std::vector<InducedRepDescriptor> gl_r_params(const Diagram& orbit) {
  const RowProfile profile = row_profile(orbit);
  std::vector<InducedRepDescriptor> out;
  for (const auto& a : tuples_below(profile.mults)) out.push_back(make_descriptor(profile, a));
  return out;
}

std::vector<int> sgn_twist(const std::vector<int>& a, const RowProfile& profile) {
  make_descriptor(profile, a);  // range check
  std::vector<int> out(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) out[l] = profile.mults[l] - a[l];
  return out;
}

PlusMinusZero split_pmz(const Diagram& orbit) {
  const RowProfile profile = row_profile(orbit);
  PlusMinusZero out;
  for (const auto& a : tuples_below(profile.mults)) {
    std::vector<int> twice(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) twice[l] = 2 * a[l];
    if (twice == profile.mults) {
      out.zero.push_back(a);
    } else if (std::lexicographical_compare(twice.begin(), twice.end(), profile.mults.begin(),
                                            profile.mults.end())) {
      out.plus.push_back(a);
    }
  }
  for (const auto& a : out.plus) out.minus.push_back(sgn_twist(a, profile));
  return out;
}

std::vector<SLRParam> sl_r_enumerate(const Diagram& orbit) {
  const RowProfile profile = row_profile(orbit);
  const PlusMinusZero split = split_pmz(orbit);
  std::vector<SLRParam> out;
  for (const auto& a : split.plus) out.emplace_back(Restricted{make_descriptor(profile, a)});
  for (const auto& a : split.zero) {
    out.emplace_back(SignedPair{make_descriptor(profile, a), PairSign::Plus});
    out.emplace_back(SignedPair{make_descriptor(profile, a), PairSign::Minus});
  }
  return out;
}

CountResult count_unipotent(const GroupSpec& group, const OrbitSpec& orbit) {
  const GroupKind kind = group.kind();
  require_size(orbit.first, group.n());
  if (orbit.second) require_size(*orbit.second, group.n());

  CountResult result{group, orbit, infinitesimal_coset(orbit.first), 0, CountMethod::Multiplicity};
  switch (kind) {
    case GroupKind::GlR:
      require_single(kind, orbit);
      result.count = static_cast<std::int64_t>(gl_r_params(orbit.first).size());
      result.method = CountMethod::Enumeration;
      break;
    case GroupKind::SlR:
      require_single(kind, orbit);
      result.count = static_cast<std::int64_t>(sl_r_enumerate(orbit.first).size());
      result.method = CountMethod::Enumeration;
      break;
    case GroupKind::GlC:
    case GroupKind::SlC: {
      const CellRep cell = cell_rep(kind, orbit);
      const ModuleDecomp coh = coherent_complex(result.sig, infinitesimal_coset(*orbit.second),
                                                kind == GroupKind::SlC);
      result.count = coh.multiplicity(cell.labels);
      break;
    }
    case GroupKind::UTilde:
      result.count = coherent_u_tilde(group.p(), group.q(), result.sig)
                         .total.multiplicity(cell_rep(kind, orbit).labels);
      break;
    case GroupKind::Su:
      result.count = coherent_su(group.p(), group.q(), result.sig).multiplicity(cell_rep(kind, orbit).labels);
      break;
    case GroupKind::GlH:
    case GroupKind::SlH: {
      const int m = group.n() / 2;
      throw UnsupportedKind(
          "counting for " + group.describe() + " is unsupported: restriction from GL_" +
          std::to_string(m) + "(H) to SL_" + std::to_string(m) +
          "(H) is a bijection on special unipotent representations, but the GL_" +
          std::to_string(m) + "(H) classification is not implemented");
    }
  }
  return result;
}

Enumeration enumerate_parameters(const GroupSpec& group, const Diagram& orbit) {
  require_size(orbit, group.n());
  Enumeration out{group, orbit, {}};
  if (group.kind() == GroupKind::GlR) {
    for (auto& d : gl_r_params(orbit)) out.entries.push_back({std::move(d), std::nullopt});
    return out;
  }
  if (group.kind() == GroupKind::SlR) {
    for (auto& param : sl_r_enumerate(orbit)) {
      if (auto* r = std::get_if<Restricted>(&param)) {
        out.entries.push_back({std::move(r->descriptor), std::nullopt});
      } else {
        auto& pair = std::get<SignedPair>(param);
        out.entries.push_back({std::move(pair.descriptor), pair.sign});
      }
    }
    return out;
  }
  throw UnsupportedKind("explicit parameters are available for gl-r and sl-r, not " +
                        std::string(to_string(group.kind())));
}

CoherentResult coherent_module(const GroupSpec& group, const OrbitSpec& orbit) {
  const GroupKind kind = group.kind();
  if (!is_unitary(kind) && !is_complex(kind)) {
    throw UnsupportedKind("coherent continuation modules are available for su, u-tilde, gl-c and "
                          "sl-c, not " + std::string(to_string(kind)));
  }
  require_size(orbit.first, group.n());
  if (orbit.second) require_size(*orbit.second, group.n());
  const CosetSignature sig = infinitesimal_coset(orbit.first);
  CellRep cell = cell_rep(kind, orbit);

  CoherentResult out{group, orbit, sig, ModuleDecomp(ProductShape{}), std::nullopt, std::nullopt,
                     cell, 0};
  switch (kind) {
    case GroupKind::UTilde: {
      auto coh = coherent_u_tilde(group.p(), group.q(), sig);
      out.module = std::move(coh.total);
      out.non_genuine = std::move(coh.non_genuine);
      out.genuine = std::move(coh.genuine);
      break;
    }
    case GroupKind::Su:
      out.module = coherent_su(group.p(), group.q(), sig);
      break;
    default:
      out.module = coherent_complex(sig, infinitesimal_coset(*orbit.second), kind == GroupKind::SlC);
      break;
  }
  out.cell_multiplicity = out.module.multiplicity(cell.labels);
  return out;
}

CountingEquality verify_counting_equality(int p, int q, const Diagram& orbit) {
  if (orbit.size() != p + q) {
    throw DegreeMismatch("orbit " + to_string(orbit) + " has size " + std::to_string(orbit.size()) +
                         " but p + q = " + std::to_string(p + q));
  }
  const OrbitSpec spec = OrbitSpec::single(orbit);
  return {count_unipotent(GroupSpec::unitary(GroupKind::Su, p, q), spec).count,
          count_unipotent(GroupSpec::unitary(GroupKind::UTilde, p, q), spec).count};
}

}  // namespace typea
