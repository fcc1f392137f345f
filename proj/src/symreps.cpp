#include "typea/symreps.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "typea/error.hpp"
#include "typea/serialize.hpp"

namespace typea {

namespace {

struct PartitionIndex {
  std::vector<Diagram> partitions;
  std::map<Diagram, std::size_t> index;
};

std::shared_ptr<const PartitionIndex> partition_index(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const PartitionIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto idx = std::make_shared<PartitionIndex>();
    idx->partitions = partitions_of(n);
    for (std::size_t i = 0; i < idx->partitions.size(); ++i) {
      idx->index.emplace(idx->partitions[i], i);
    }
    slot = std::move(idx);
  }
  return slot;
}

void require_same_degree(int a, int b, const char* what) {
  if (a != b) {
    throw DegreeMismatch(std::string(what) + ": degree " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

// Removals of rim hooks of length h from `d`, with the sign (-1)^height. Works on
// the beta-set: a rim hook is a bead sliding h places down to an empty slot.
std::vector<std::pair<Diagram, int>> remove_rim_hooks(const Diagram& d, int h) {
  const int len = static_cast<int>(d.length());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = d.parts()[i] + (len - 1 - i);

  std::vector<std::pair<Diagram, int>> out;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - h;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossed = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++crossed;
    }
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      const int part = moved[j] - (len - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    out.emplace_back(Diagram(std::move(parts)), crossed % 2 ? -1 : 1);
  }
  return out;
}

Diagram drop_first_part(const Diagram& d) {
  return Diagram(std::vector<int>(d.parts().begin() + 1, d.parts().end()));
}

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t centralizer_order(const Diagram& cycle_type) {
  std::uint64_t z = 1;
  auto profile = row_profile(cycle_type);
  for (std::size_t l = 0; l < profile.k(); ++l) {
    for (int j = 0; j < profile.mults[l]; ++j) z *= static_cast<std::uint64_t>(profile.lengths[l]);
    z *= factorial(profile.mults[l]);
  }
  return z;
}

std::uint64_t class_size(const Diagram& cycle_type) {
  return factorial(cycle_type.size()) / centralizer_order(cycle_type);
}

std::uint64_t hook_dimension(const IrrepLabel& label) {
  const Diagram conj = transpose(label);
  // n! / prod hooks, accumulated with cancellation to stay in range.
  std::uint64_t num = factorial(label.size());
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < label.length(); ++i) {
    for (int j = 0; j < label.parts()[i]; ++j) {
      const int hook = (label.parts()[i] - j - 1) + (conj.parts()[j] - static_cast<int>(i) - 1) + 1;
      den *= static_cast<std::uint64_t>(hook);
      const std::uint64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  return num / den;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::size_t class_index(const Diagram& cycle_type) {
  auto idx = partition_index(cycle_type.size());
  return idx->index.at(cycle_type);
}

ClassFunction::ClassFunction(int degree, std::vector<std::int64_t> values)
    : degree_(degree), values_(std::move(values)) {
  if (values_.size() != partition_index(degree)->partitions.size()) {
    throw DegreeMismatch("class function of degree " + std::to_string(degree) + " needs " +
                         std::to_string(partition_index(degree)->partitions.size()) + " values");
  }
}

ClassFunction ClassFunction::zero(int degree) {
  return ClassFunction(degree, std::vector<std::int64_t>(partition_index(degree)->partitions.size(), 0));
}

ClassFunction ClassFunction::from(int degree, const std::function<std::int64_t(const Diagram&)>& f) {
  auto idx = partition_index(degree);
  std::vector<std::int64_t> values;
  values.reserve(idx->partitions.size());
  for (const auto& mu : idx->partitions) values.push_back(f(mu));
  return ClassFunction(degree, std::move(values));
}

std::int64_t ClassFunction::at(const Diagram& cycle_type) const {
  require_same_degree(degree_, cycle_type.size(), "class function evaluation");
  return values_[class_index(cycle_type)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_degree(degree_, other.degree_, "class function sum");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_degree(a.degree_, b.degree_, "class function product");
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  return out;
}

ClassFunction trivial_character(int n) {
  return ClassFunction::from(n, [](const Diagram&) { return std::int64_t{1}; });
}

ClassFunction sign_character(int n) {
  return ClassFunction::from(n, [](const Diagram& mu) {
    // sign of a permutation = (-1)^(n - number of cycles)
    return ((mu.size() - static_cast<int>(mu.length())) % 2) ? std::int64_t{-1} : std::int64_t{1};
  });
}

ClassFunction regular_character(int n) {
  return ClassFunction::from(n, [n](const Diagram& mu) {
    return mu == column(n) ? static_cast<std::int64_t>(factorial(n)) : std::int64_t{0};
  });
}

CharacterTable::CharacterTable(int degree, std::vector<std::vector<std::int64_t>> rows)
    : degree_(degree), partitions_(partitions_of(degree)), rows_(std::move(rows)) {
  if (rows_.size() != partitions_.size()) {
    throw DegreeMismatch("character table of degree " + std::to_string(degree) +
                         " has the wrong number of rows");
  }
  for (const auto& row : rows_) {
    if (row.size() != partitions_.size()) {
      throw DegreeMismatch("character table of degree " + std::to_string(degree) +
                           " has a row of the wrong length");
    }
  }
}

std::size_t CharacterTable::index_of(const Diagram& d) const {
  require_same_degree(degree_, d.size(), "character table lookup");
  return class_index(d);
}

std::int64_t CharacterTable::value(const IrrepLabel& label, const Diagram& cycle_type) const {
  return rows_[index_of(label)][index_of(cycle_type)];
}

ClassFunction CharacterTable::character(const IrrepLabel& label) const {
  return ClassFunction(degree_, rows_[index_of(label)]);
}

std::int64_t murnaghan_nakayama(const IrrepLabel& label, const Diagram& cycle_type) {
  require_same_degree(label.size(), cycle_type.size(), "character value");
  if (cycle_type.empty()) return 1;
  const Diagram rest = drop_first_part(cycle_type);
  std::int64_t total = 0;
  for (const auto& [smaller, sign] : remove_rim_hooks(label, cycle_type.parts().front())) {
    total += sign * murnaghan_nakayama(smaller, rest);
  }
  return total;
}

namespace {

std::string table_filename(int n) { return "chartable-" + std::to_string(n) + ".json"; }

}  // namespace

std::shared_ptr<const CharacterTable> CharacterCache::table(int n) {
  if (n < 0) throw DegreeMismatch("negative degree " + std::to_string(n));
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(n); it != tables_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  // Bottom-up so each degree can reuse the smaller tables.
  for (int m = 0; m <= n; ++m) {
    if (!tables_.contains(m)) tables_[m] = build(m);
  }
  return tables_.at(n);
}

std::shared_ptr<const CharacterTable> CharacterCache::build(int n) {
  if (dir_) {
    std::ifstream in(*dir_ / table_filename(n));
    if (in) {
      try {
        auto t = std::make_shared<const CharacterTable>(table_from_json(Json::parse(in)));
        if (t->degree() == n) return t;
      } catch (const std::exception&) {
        // unreadable cache file: rebuild and overwrite below
      }
    }
  }

  const auto parts = partitions_of(n);
  std::vector<std::vector<std::int64_t>> rows(parts.size(),
                                              std::vector<std::int64_t>(parts.size(), 0));
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const Diagram& mu = parts[c];
    if (mu.empty()) {
      rows[0][0] = 1;
      continue;
    }
    const Diagram rest = drop_first_part(mu);
    const auto& smaller = *tables_.at(rest.size());
    const std::size_t rest_index = smaller.index_of(rest);
    for (std::size_t l = 0; l < parts.size(); ++l) {
      std::int64_t total = 0;
      for (const auto& [reduced, sign] : remove_rim_hooks(parts[l], mu.parts().front())) {
        total += sign * smaller.rows()[smaller.index_of(reduced)][rest_index];
      }
      rows[l][c] = total;
    }
  }
  auto table = std::make_shared<const CharacterTable>(n, std::move(rows));

  if (dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    const auto target = *dir_ / table_filename(n);
    const auto tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << to_json(*table).dump() << '\n';
    }
    std::filesystem::rename(tmp, target, ec);
  }
  return table;
}

void CharacterCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(mutex_);
  dir_ = std::move(dir);
}

std::optional<std::filesystem::path> CharacterCache::directory() const {
  std::shared_lock lock(mutex_);
  return dir_;
}

void CharacterCache::clear() {
  std::unique_lock lock(mutex_);
  tables_.clear();
}

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

std::int64_t character_value(const IrrepLabel& label, const Diagram& cycle_type) {
  require_same_degree(label.size(), cycle_type.size(), "character value");
  return character_table(label.size())->value(label, cycle_type);
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_degree(f.degree(), g.degree(), "inner product");
  const auto idx = partition_index(f.degree());
  __int128 total = 0;
  for (std::size_t i = 0; i < idx->partitions.size(); ++i) {
    total += static_cast<__int128>(class_size(idx->partitions[i])) * f[i] * g[i];
  }
  const auto order = static_cast<__int128>(factorial(f.degree()));
  __int128 a = total < 0 ? -total : total, b = order;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  const __int128 g_ = a == 0 ? 1 : a;
  return Rational(static_cast<std::int64_t>(total / g_), static_cast<std::int64_t>(order / g_));
}

std::int64_t multiplicity_in(const IrrepLabel& label, const ClassFunction& f) {
  const Rational r = inner_product(character_table(f.degree())->character(label), f);
  if (!r.is_integer()) {
    throw Error("multiplicity of " + to_string(label) + " is not an integer: " + to_string(r));
  }
  return r.num;
}

Multiplicities decompose(const ClassFunction& f) {
  Multiplicities out;
  for (const auto& label : partitions_of(f.degree())) {
    if (auto m = multiplicity_in(label, f); m != 0) out[label] = m;
  }
  return out;
}

namespace {

// Littlewood-Richardson tableaux of shape nu/lambda and content mu, built one
// label at a time: label i occupies a horizontal strip of mu_i boxes, and the
// reverse reading word must stay a lattice word. Within a row the reading
// word meets label i before label i-1, so the lattice condition for the pair
// (i-1, i) is: #i in rows <= j  <=  #(i-1) in rows < j, for every row j.
class LrFiller {
 public:
  LrFiller(const Diagram& lambda, const Diagram& mu)
      : content_(mu.parts()),
        rows_(lambda.length() + mu.length()),
        shape_(rows_, 0),
        counts_(rows_, std::vector<int>(mu.length(), 0)) {
    for (std::size_t j = 0; j < lambda.length(); ++j) shape_[j] = lambda.parts()[j];
  }

  Multiplicities run() {
    label(0);
    return std::move(result_);
  }

 private:
  void label(std::size_t i) {
    if (i == content_.size()) {
      std::vector<int> parts;
      for (int p : shape_) {
        if (p > 0) parts.push_back(p);
      }
      ++result_[Diagram(std::move(parts))];
      return;
    }
    const std::vector<int> before = shape_;
    strip(i, 0, content_[i], 0, 0, before);
  }

  void strip(std::size_t i, std::size_t row, int remaining, int placed_so_far,
             int prev_label_above, const std::vector<int>& before) {
    if (remaining == 0) {
      label(i + 1);
      return;
    }
    if (row == rows_) return;
    const int cap = row == 0 ? remaining : std::min(remaining, before[row - 1] - before[row]);
    for (int x = cap; x >= 0; --x) {
      if (i > 0 && placed_so_far + x > prev_label_above) continue;
      shape_[row] += x;
      counts_[row][i] += x;
      const int next_prev = prev_label_above + (i > 0 ? counts_[row][i - 1] : 0);
      strip(i, row + 1, remaining - x, placed_so_far + x, next_prev, before);
      shape_[row] -= x;
      counts_[row][i] -= x;
    }
  }

  std::vector<int> content_;
  std::size_t rows_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> counts_;
  Multiplicities result_;
};

}  // namespace

Multiplicities lr_product(const Diagram& lambda, const Diagram& mu) {
  if (mu.empty()) return {{lambda, 1}};
  if (lambda.empty()) return {{mu, 1}};
  return LrFiller(lambda, mu).run();
}

std::int64_t lr_coefficient(const Diagram& lambda, const Diagram& mu, const Diagram& nu) {
  if (nu.size() != lambda.size() + mu.size()) {
    throw DegreeMismatch("lr_coefficient: |nu| = " + std::to_string(nu.size()) +
                         " but |lambda| + |mu| = " + std::to_string(lambda.size() + mu.size()));
  }
  const auto product = lr_product(lambda, mu);
  const auto it = product.find(nu);
  return it == product.end() ? 0 : it->second;
}

Multiplicities induce_outer(std::span<const IrrepLabel> factors) {
  Multiplicities acc{{Diagram(), 1}};
  for (const auto& factor : factors) {
    Multiplicities next;
    for (const auto& [lambda, m] : acc) {
      for (const auto& [nu, c] : lr_product(lambda, factor)) next[nu] += m * c;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace typea
