#include "indisc/indiscernibles.hpp"

#include "indisc/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace indisc {

namespace {

struct Homogeneous {
  std::vector<Natural> set;
  std::optional<ColoringKey> key;
};

// Colors every element of `elems` as a singleton extension of `prefix`.
std::vector<ColoringKey> color_extensions(const std::vector<Natural>& prefix, std::span<const Natural> elems,
                                          const Coloring& color) {
  std::vector<ColoringKey> keys(elems.size());
  parallel_for(elems.size(), [&](std::size_t i) {
    std::vector<Natural> t = prefix;
    t.push_back(elems[i]);
    keys[i] = color(t);
  });
  return keys;
}

// Largest color class (ties: least key); order within the class is preserved.
Homogeneous majority_class(std::span<const Natural> elems, const std::vector<ColoringKey>& keys) {
  std::map<ColoringKey, std::vector<Natural>> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) classes[keys[i]].push_back(elems[i]);
  Homogeneous best;
  for (auto& [k, members] : classes)
    if (!best.key || members.size() > best.set.size()) best = {std::move(members), k};
  return best;
}

// Proof-following thinning: tuples are colored as prefix ++ (arity elements).
// With room > 0 the kept class is the earliest-starting one holding at least room
// picks; otherwise the most frequent key wins. On a truncated domain the most
// frequent key is often a cluster near the top that only looks homogeneous
// because the witnesses fall outside [0, N].
Homogeneous greedy(const std::vector<Natural>& prefix, std::span<const Natural> cands, std::size_t arity,
                   const Coloring& color, std::size_t room = 0) {
  if (cands.empty()) return {};
  if (arity == 1) return majority_class(cands, color_extensions(prefix, cands, color));

  std::vector<Natural> picks;
  std::vector<std::optional<ColoringKey>> pick_keys;
  std::vector<Natural> rest(cands.begin(), cands.end());
  while (!rest.empty()) {
    Natural a = rest.front();
    rest.erase(rest.begin());
    if (rest.size() < arity - 1) {
      // Too few successors to form a tuple through a: it fits any key.
      picks.push_back(a);
      pick_keys.emplace_back();
      continue;
    }
    std::vector<Natural> ext = prefix;
    ext.push_back(a);
    Homogeneous h = greedy(ext, rest, arity - 1, color);
    picks.push_back(a);
    pick_keys.push_back(h.key);
    rest = std::move(h.set);
  }

  std::size_t wildcards = 0;
  std::map<ColoringKey, std::size_t> counts;
  for (const auto& k : pick_keys)
    if (k) ++counts[*k];
    else ++wildcards;
  if (counts.empty()) return {picks, std::nullopt};
  const ColoringKey* chosen = nullptr;
  if (room > 0)
    for (const auto& k : pick_keys)
      if (k && counts[*k] + wildcards >= room) {
        chosen = &counts.find(*k)->first;
        break;
      }
  std::size_t best = 0;
  if (!chosen)
    for (const auto& [k, c] : counts)
      if (c > best) {
        best = c;
        chosen = &k;
      }
  Homogeneous out{{}, *chosen};
  for (std::size_t i = 0; i < picks.size(); ++i)
    if (!pick_keys[i] || *pick_keys[i] == *chosen) out.set.push_back(picks[i]);
  return out;
}

// Lexicographically first maximum clique, vertices visited in increasing order.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<std::uint64_t>& adj) : adj_(adj) {}

  std::uint64_t run(std::uint64_t vertices) {
    best_ = 0;
    best_size_ = 0;
    expand(0, 0, vertices);
    return best_;
  }

 private:
  void expand(std::uint64_t r, std::size_t r_size, std::uint64_t p) {
    if (r_size > best_size_) {
      best_ = r;
      best_size_ = r_size;
    }
    while (p) {
      if (r_size + static_cast<std::size_t>(__builtin_popcountll(p)) <= best_size_) return;
      int v = __builtin_ctzll(p);
      std::uint64_t bit = std::uint64_t{1} << v;
      p &= ~bit;
      expand(r | bit, r_size + 1, p & adj_[v]);
    }
  }

  const std::vector<std::uint64_t>& adj_;
  std::uint64_t best_ = 0;
  std::size_t best_size_ = 0;
};

std::vector<Natural> exact_pairs(std::span<const Natural> cands, const Coloring& color) {
  const std::size_t n = cands.size();
  if (n < 2) return {cands.begin(), cands.end()};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<ColoringKey> keys(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    std::vector<Natural> t{cands[pairs[i].first], cands[pairs[i].second]};
    keys[i] = color(t);
  });
  std::map<ColoringKey, std::vector<std::uint64_t>> graphs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto& adj = graphs.try_emplace(keys[i], n, 0).first->second;
    adj[pairs[i].first] |= std::uint64_t{1} << pairs[i].second;
    adj[pairs[i].second] |= std::uint64_t{1} << pairs[i].first;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t best = 0;
  int best_size = 0;
  for (const auto& [key, adj] : graphs) {
    CliqueSearch search(adj);
    std::uint64_t clique = search.run(all);
    int size = __builtin_popcountll(clique);
    if (size > best_size) {
      best = clique;
      best_size = size;
    }
  }
  std::vector<Natural> out;
  for (std::size_t v = 0; v < n; ++v)
    if (best >> v & 1) out.push_back(cands[v]);
  return out;
}

}  // namespace

std::vector<Natural> ramsey_monochromatic(std::span<const Natural> candidates, std::size_t arity,
                                          const Coloring& color, std::size_t target) {
  if (arity == 0) throw DomainError("ramsey_monochromatic: arity must be at least 1");
  if (!std::is_sorted(candidates.begin(), candidates.end()) ||
      std::adjacent_find(candidates.begin(), candidates.end()) != candidates.end())
    throw DomainError("ramsey_monochromatic: candidates must be strictly increasing");
  std::vector<Natural> result;
  if (candidates.size() < arity) {
    // No tuples at all: the whole set is vacuously homogeneous.
    result.assign(candidates.begin(), candidates.end());
  } else if (arity == 2 && candidates.size() <= 64) {
    result = exact_pairs(candidates, color);
  } else {
    result = greedy({}, candidates, arity, color, target).set;
  }
  if (result.size() < target)
    throw InsufficientRamseyRoom("homogeneous set of size " + std::to_string(result.size()) +
                                     " is smaller than the requested " + std::to_string(target),
                                 std::move(result));
  return result;
}

}  // namespace indisc
