#include "typea/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "typea/error.hpp"

namespace typea {

Diagram::Diagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw InvalidPartition("invalid partition: part " + std::to_string(p) +
                             " is not positive");
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Diagram make_diagram(std::span<const int> parts) {
  return Diagram(std::vector<int>(parts.begin(), parts.end()));
}

std::string to_string(const Diagram& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.parts()[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Diagram& d) {
  return os << to_string(d);
}

Diagram parse_diagram(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) return Diagram();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = trim(text.substr(start, comma - start));
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InvalidPartition("invalid partition: cannot parse '" + std::string(field) +
                             "' in '" + std::string(text) + "'");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  return Diagram(std::move(parts));
}

std::string to_string(HalfInteger h) {
  if (h.is_integral()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

Diagram transpose(const Diagram& d) {
  std::vector<int> cols(d.empty() ? 0 : d.parts().front(), 0);
  for (int p : d.parts()) {
    for (int c = 0; c < p; ++c) ++cols[c];
  }
  return Diagram(std::move(cols));
}

RowProfile row_profile(const Diagram& d) {
  RowProfile out;
  for (int p : d.parts()) {
    if (!out.lengths.empty() && out.lengths.back() == p) {
      ++out.mults.back();
    } else {
      out.lengths.push_back(p);
      out.mults.push_back(1);
    }
  }
  return out;
}

std::pair<Diagram, Diagram> even_odd_split(const Diagram& d) {
  std::vector<int> even, odd;
  for (int p : d.parts()) (p % 2 == 0 ? even : odd).push_back(p);
  return {Diagram(std::move(even)), Diagram(std::move(odd))};
}

Diagram r_union(const Diagram& a, const Diagram& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Diagram(std::move(parts));
}

CosetSignature infinitesimal_coset(const Diagram& d) {
  auto [even, odd] = even_odd_split(d);
  return {even.size(), odd.size()};
}

std::vector<HalfInteger> lambda_vector(const Diagram& d) {
  std::vector<HalfInteger> out;
  out.reserve(d.size());
  for (int r : d.parts()) {
    for (int t = r - 1; t >= -(r - 1); t -= 2) out.push_back({t});
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Diagram>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Diagram> partitions_of(int n) {
  std::vector<Diagram> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Diagram> even_partitions_of(int n) {
  std::vector<Diagram> out;
  for (auto& d : partitions_of(n)) {
    if (std::all_of(d.parts().begin(), d.parts().end(), [](int p) { return p % 2 == 0; })) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

Diagram column(int n) { return Diagram(std::vector<int>(std::max(n, 0), 1)); }

}  // namespace typea
