#include "twinned/poset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "twinned/errors.hpp"

namespace twinned {

std::string format_mask(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if ((m >> i) & 1u) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

std::string format_permutation(std::span<const int> perm) {
  std::string out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(perm[k] + 1);
  }
  return out;
}

namespace {

// Depth-first search for a directed cycle in an adjacency list.
std::vector<int> find_cycle(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> state(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == succ[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = succ[v][next++];
      if (state[w] == 1) {
        std::vector<int> cycle{w};
        for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

std::string format_cycle(const std::vector<int>& cycle) {
  std::string out;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k) out += "<";
    out += std::to_string(cycle[k] + 1);
  }
  return out;
}

}  // namespace

Poset::Poset(std::vector<Mask> below) : below_(std::move(below)), above_(below_.size(), 0) {
  const int d = size();
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      if (less(i, j)) above_[i] |= Mask{1} << j;
}

Poset Poset::from_relations(int d, std::span<const std::pair<int, int>> relations) {
  if (d < 1 || d > kMaxPosetSize)
    throw InputError("poset size " + std::to_string(d) + " outside 1.." +
                     std::to_string(kMaxPosetSize));
  std::vector<Mask> below(d, 0);
  std::vector<std::vector<int>> succ(d);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= d || b < 0 || b >= d)
      throw InputError("relation " + std::to_string(a + 1) + "<" + std::to_string(b + 1) +
                       " has a label outside 1.." + std::to_string(d));
    if (a == b) throw InputError("relation " + std::to_string(a + 1) + "<" +
                                 std::to_string(a + 1) + " is reflexive");
    below[b] |= Mask{1} << a;
    succ[a].push_back(b);
  }
  // Boolean matrix squaring until the relation stops growing.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Mask> next = below;
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        if ((below[j] >> i) & 1u) next[j] |= below[i];
    if (next != below) {
      below = std::move(next);
      changed = true;
    }
  }
  for (int j = 0; j < d; ++j) {
    if ((below[j] >> j) & 1u)
      throw InputError("relations contain the cycle " + format_cycle(find_cycle(succ)));
  }
  return Poset(std::move(below));
}

Poset Poset::chain(int d) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < d; ++i) rel.emplace_back(i, i + 1);
  return from_relations(d, rel);
}

Poset Poset::antichain(int d) { return from_relations(d, {}); }

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int d = size();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (!less(a, b)) continue;
      // a < b is a cover iff nothing lies strictly between them.
      if ((above_[a] & below_[b]) == 0) out.emplace_back(a, b);
    }
  return out;
}

bool Poset::is_ideal(Mask ideal) const {
  for (int j = 0; j < size(); ++j)
    if (((ideal >> j) & 1u) && (below_[j] & ~ideal)) return false;
  return true;
}

Poset Poset::relabel(std::span<const int> perm) const {
  const int d = size();
  if (static_cast<int>(perm.size()) != d) throw InputError("relabel: permutation size mismatch");
  std::vector<int> position(d);
  for (int k = 0; k < d; ++k) position[perm[k]] = k;
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : covers()) rel.emplace_back(position[a], position[b]);
  return from_relations(d, rel);
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc())
    throw InputError("poset text: expected an integer at offset " + std::to_string(pos));
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Poset parse_poset(std::string_view text) {
  std::size_t pos = 0;
  const int d = read_int(text, pos);
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != ';')
    throw InputError("poset text: expected ';' after the size");
  ++pos;
  std::vector<std::pair<int, int>> rel;
  for (skip_space(text, pos); pos < text.size(); skip_space(text, pos)) {
    int a = read_int(text, pos);
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != '<')
      throw InputError("poset text: expected '<' at offset " + std::to_string(pos));
    ++pos;
    int b = read_int(text, pos);
    rel.emplace_back(a - 1, b - 1);
  }
  return Poset::from_relations(d, rel);
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << p.size() << ";";
  for (auto [a, b] : p.covers()) out << ' ' << a + 1 << '<' << b + 1;
  return out.str();
}

bool canonical_less(Mask a, Mask b) {
  const int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  // Equal cardinality: compare sorted label lists lexicographically. The
  // first differing label decides, and the list holding the smaller one wins.
  Mask diff = a ^ b;
  if (diff == 0) return false;
  int low = __builtin_ctz(diff);
  return (a >> low) & 1u;
}

bool IdealFamily::contains(Mask m) const {
  return std::binary_search(ideals.begin(), ideals.end(), m, canonical_less);
}

IdealFamily enumerate_ideals(const Poset& p) {
  // Grow ideals one element at a time: x can join I when everything below x
  // is already in I.
  const int d = p.size();
  std::vector<Mask> layer{0};
  IdealFamily family;
  while (!layer.empty()) {
    family.ideals.insert(family.ideals.end(), layer.begin(), layer.end());
    std::set<Mask> next;
    for (Mask ideal : layer)
      for (int x = 0; x < d; ++x)
        if (!((ideal >> x) & 1u) && (p.below(x) & ~ideal) == 0) next.insert(ideal | (Mask{1} << x));
    layer.assign(next.begin(), next.end());
  }
  std::sort(family.ideals.begin(), family.ideals.end(), canonical_less);
  return family;
}

bool is_linear_extension(const Poset& p, std::span<const int> perm) {
  Mask seen = 0;
  for (int x : perm) {
    if ((p.below(x) & ~seen) != 0) return false;
    seen |= Mask{1} << x;
  }
  return true;
}

std::optional<std::vector<int>> common_linear_extension(const Poset& p, const Poset& q) {
  if (p.size() != q.size())
    throw InputError("posets have different sizes " + std::to_string(p.size()) + " and " +
                     std::to_string(q.size()));
  const int d = p.size();
  std::vector<int> order;
  Mask placed = 0;
  while (static_cast<int>(order.size()) < d) {
    int pick = -1;
    for (int x = 0; x < d && pick < 0; ++x) {
      if ((placed >> x) & 1u) continue;
      if (((p.below(x) | q.below(x)) & ~placed) == 0) pick = x;
    }
    if (pick < 0) return std::nullopt;
    order.push_back(pick);
    placed |= Mask{1} << pick;
  }
  return order;
}

std::vector<int> union_cycle(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw InputError("posets have different sizes");
  std::vector<std::vector<int>> succ(p.size());
  for (const Poset* r : {&p, &q})
    for (auto [a, b] : r->covers()) succ[a].push_back(b);
  return find_cycle(succ);
}

Poset random_poset(int d, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (den == 0 || num > den) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (rng() % den < num) rel.emplace_back(i, j);
  return Poset::from_relations(d, rel);
}

std::vector<int> random_permutation(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = d - 1; k > 0; --k) std::swap(perm[k], perm[rng() % (k + 1)]);
  return perm;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::pair<Poset, Poset> random_pair(int d, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  Poset p = random_poset(d, num, den, mix(seed));
  Poset q = random_poset(d, num, den, mix(seed + 1));
  return {std::move(p), q.relabel(random_permutation(d, mix(seed + 2)))};
}

std::pair<Poset, Poset> random_compatible_pair(int d, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  const auto perm = random_permutation(d, mix(seed + 2));
  return {random_poset(d, num, den, mix(seed)).relabel(perm), random_poset(d, num, den, mix(seed + 1)).relabel(perm)};
}

}  // namespace twinned
