#include "typea/weylmodules.hpp"

#include <algorithm>

#include "typea/error.hpp"

namespace typea {

std::string to_string(const ProductShape& shape) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.degrees.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shape.degrees[i]);
  }
  return out + ")";
}

ModuleDecomp::ModuleDecomp(ProductShape shape) : shape_(std::move(shape)) {
  for (int d : shape_.degrees) {
    if (d < 0) throw ShapeMismatch("negative factor degree in shape " + to_string(shape_));
  }
}

ModuleDecomp ModuleDecomp::unit() {
  ModuleDecomp m(ProductShape{});
  m.entries_[{}] = 1;
  return m;
}

void ModuleDecomp::check_key(const ModuleKey& key) const {
  bool ok = key.size() == shape_.degrees.size();
  for (std::size_t i = 0; ok && i < key.size(); ++i) ok = key[i].size() == shape_.degrees[i];
  if (!ok) {
    std::string k;
    for (const auto& d : key) k += to_string(d);
    throw ShapeMismatch("key " + k + " does not match shape " + to_string(shape_));
  }
}

void ModuleDecomp::add(const ModuleKey& key, std::int64_t m) {
  check_key(key);
  if (m < 0) throw Error("negative multiplicity added to a module");
  if (m == 0) return;
  entries_[key] += m;
}

std::int64_t ModuleDecomp::multiplicity(const ModuleKey& key) const {
  check_key(key);
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t ModuleDecomp::dimension() const {
  std::uint64_t total = 0;
  for (const auto& [key, m] : entries_) {
    std::uint64_t dim = static_cast<std::uint64_t>(m);
    for (const auto& label : key) dim *= hook_dimension(label);
    total += dim;
  }
  return total;
}

ModuleDecomp md_sum(const ModuleDecomp& a, const ModuleDecomp& b) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatch("direct sum of shapes " + to_string(a.shape()) + " and " +
                        to_string(b.shape()));
  }
  ModuleDecomp out = a;
  for (const auto& [key, m] : b.entries()) out.add(key, m);
  return out;
}

ModuleDecomp md_tensor(const ModuleDecomp& a, const ModuleDecomp& b) {
  ProductShape shape = a.shape();
  shape.degrees.insert(shape.degrees.end(), b.shape().degrees.begin(), b.shape().degrees.end());
  ModuleDecomp out(std::move(shape));
  for (const auto& [ka, ma] : a.entries()) {
    for (const auto& [kb, mb] : b.entries()) {
      ModuleKey key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add(key, ma * mb);
    }
  }
  return out;
}

std::int64_t md_multiplicity(const ModuleDecomp& m, const ModuleKey& key) {
  return m.multiplicity(key);
}

ModuleDecomp single_factor(int degree, const Multiplicities& mults) {
  ModuleDecomp out(ProductShape{{degree}});
  for (const auto& [label, m] : mults) out.add({label}, m);
  return out;
}

ModuleDecomp hyperoctahedral_module(int r) {
  Multiplicities mults;
  for (auto& d : even_partitions_of(2 * r)) mults[d] = 1;
  return single_factor(2 * r, mults);
}

ModuleDecomp signed_hyperoctahedral_module(int p, int q) {
  Multiplicities total;
  for (int k = 0; k <= std::min(p, q); ++k) {
    for (const auto& even : even_partitions_of(2 * k)) {
      const IrrepLabel factors[] = {even, column(p - k), column(q - k)};
      for (const auto& [nu, m] : induce_outer(factors)) total[nu] += m;
    }
  }
  return single_factor(p + q, total);
}

ModuleDecomp diagonal_module(int r) {
  ModuleDecomp out(ProductShape{{r, r}});
  for (const auto& sigma : partitions_of(r)) out.add({sigma, sigma}, 1);
  return out;
}

namespace {

bool matching_summand_present(int p, int q, int r) {
  return r >= 0 && r % 2 == 0 && std::min(p, q) >= r / 2;
}

}  // namespace

ModuleDecomp matching_first_module(int p, int q, int r) {
  if (!matching_summand_present(p, q, r)) return ModuleDecomp(ProductShape{{r, p + q - r}});
  return md_tensor(hyperoctahedral_module(r / 2), signed_hyperoctahedral_module(p - r / 2, q - r / 2));
}

ModuleDecomp matching_last_module(int p, int q, int r) {
  if (!matching_summand_present(p, q, r)) return ModuleDecomp(ProductShape{{p + q - r, r}});
  return md_tensor(signed_hyperoctahedral_module(p - r / 2, q - r / 2), hyperoctahedral_module(r / 2));
}

namespace {

void require_unitary_degree(int p, int q, CosetSignature sig) {
  if (p < 0 || q < 0) {
    throw InvalidParameter("signature (" + std::to_string(p) + "," + std::to_string(q) +
                           ") has a negative entry");
  }
  if (sig.n_h < 0 || sig.n_0 < 0 || p + q != sig.n()) {
    throw DegreeMismatch("p + q = " + std::to_string(p + q) + " but n_h + n_0 = " +
                         std::to_string(sig.n()));
  }
}

}  // namespace

UTildeCoherent coherent_u_tilde(int p, int q, CosetSignature sig) {
  require_unitary_degree(p, q, sig);
  ModuleDecomp first = matching_first_module(p, q, sig.n_h);
  ModuleDecomp last = matching_last_module(p, q, sig.n_0);
  ModuleDecomp total = md_sum(first, last);
  if ((p + q) % 2 == 1) {
    return {std::move(total), std::move(first), std::move(last)};
  }
  return {std::move(total), std::move(last), std::move(first)};
}

ModuleDecomp coherent_su(int p, int q, CosetSignature sig) {
  require_unitary_degree(p, q, sig);
  if (p == q && sig.n_h == p && sig.n_0 == p) {
    ModuleDecomp out = md_sum(matching_first_module(p, p, p), matching_last_module(p, p, p));
    out = md_sum(out, diagonal_module(p));
    return md_sum(out, diagonal_module(p));
  }
  return md_sum(matching_first_module(p, q, sig.n_h), matching_last_module(p, q, sig.n_0));
}

ModuleDecomp coherent_glc(CosetSignature sig) {
  ModuleDecomp out(ProductShape{{sig.n_h, sig.n_0, sig.n_h, sig.n_0}});
  for (const auto& s1 : partitions_of(sig.n_h)) {
    for (const auto& s2 : partitions_of(sig.n_0)) out.add({s1, s2, s1, s2}, 1);
  }
  return out;
}

ModuleDecomp coherent_slc(CosetSignature sig) {
  ModuleDecomp out = coherent_glc(sig);
  if (sig.n_h == sig.n_0) {
    for (const auto& s1 : partitions_of(sig.n_h)) {
      for (const auto& s2 : partitions_of(sig.n_0)) out.add({s1, s2, s2, s1}, 1);
    }
  }
  return out;
}

ModuleDecomp coherent_complex(CosetSignature left, CosetSignature right, bool special_linear) {
  if (left.n() != right.n()) {
    throw DegreeMismatch("complex orbit factors have sizes " + std::to_string(left.n()) +
                         " and " + std::to_string(right.n()));
  }
  if (left != right) {
    return ModuleDecomp(ProductShape{{left.n_h, left.n_0, right.n_h, right.n_0}});
  }
  return special_linear ? coherent_slc(left) : coherent_glc(left);
}

}  // namespace typea
