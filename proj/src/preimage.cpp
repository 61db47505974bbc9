#include "vnca/preimage.hpp"

#include <deque>
#include <stdexcept>

namespace vnca {

PreimageGraph build_preimage_graph(const RuleTable& rule, const PeriodicConfig& x) {
  if (rule.alphabet() != x.alphabet()) throw std::invalid_argument("alphabet size mismatch");
  const unsigned q = rule.alphabet();
  const std::size_t p = x.period();
  const int overlap_len = rule.window_length() - 1;
  std::size_t words = 1;  // q^overlap_len; the full table size already passed the cap
  for (int i = 0; i < overlap_len; ++i) words *= q;

  PreimageGraph graph;
  graph.period = p;
  graph.overlap_words = words;
  graph.alphabet = q;
  graph.adjacency.assign(p * words, {});

  for (std::size_t i = 0; i < p; ++i) {
    const std::uint8_t target_cell = x.cell(static_cast<long long>(i));
    for (std::size_t w = 0; w < words; ++w) {
      auto& out = graph.adjacency[i * words + w];
      for (unsigned s = 0; s < q; ++s) {
        const std::size_t window = w * q + s;
        if (rule.output(window) != target_cell) continue;
        const std::size_t next_word = window % words;
        out.push_back(static_cast<std::uint32_t>(((i + 1) % p) * words + next_word));
      }
    }
  }
  return graph;
}

bool has_cycle(const PreimageGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::uint32_t> outdeg(n), indeg(n);
  for (std::size_t v = 0; v < n; ++v) {
    outdeg[v] = static_cast<std::uint32_t>(graph.adjacency[v].size());
    for (std::uint32_t t : graph.adjacency[v]) ++indeg[t];
  }

  // In-edge lists, needed while trimming.
  std::vector<std::vector<std::uint32_t>> preds(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t t : graph.adjacency[v]) preds[t].push_back(static_cast<std::uint32_t>(v));
  }

  std::vector<char> dead(n, 0);
  std::deque<std::uint32_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (outdeg[v] == 0 || indeg[v] == 0) {
      dead[v] = 1;
      queue.push_back(static_cast<std::uint32_t>(v));
    }
  }
  std::size_t alive = n - queue.size();
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t t : graph.adjacency[v]) {
      if (!dead[t] && --indeg[t] == 0) {
        dead[t] = 1;
        --alive;
        queue.push_back(t);
      }
    }
    for (std::uint32_t s : preds[v]) {
      if (!dead[s] && --outdeg[s] == 0) {
        dead[s] = 1;
        --alive;
        queue.push_back(s);
      }
    }
  }
  return alive > 0;
}

bool has_preimage(const RuleTable& rule, const PeriodicConfig& x) {
  return has_cycle(build_preimage_graph(rule, x));
}

std::vector<PeriodicConfig> periodic_preimages(const RuleTable& rule, const PeriodicConfig& x,
                                               std::size_t period) {
  if (rule.alphabet() != x.alphabet()) throw std::invalid_argument("alphabet size mismatch");
  if (period == 0) throw std::invalid_argument("period must be at least 1");
  if (period % least_period(x) != 0) {
    throw std::invalid_argument("period must be a multiple of the target's least period");
  }
  const unsigned q = rule.alphabet();
  const std::size_t count = checked_table_size(q, static_cast<int>(period));

  std::vector<PeriodicConfig> result;
  std::vector<std::uint8_t> cells(period);
  const int len = rule.window_length();
  for (std::size_t word = 0; word < count; ++word) {
    std::size_t v = word;
    for (std::size_t i = period; i-- > 0;) {
      cells[i] = static_cast<std::uint8_t>(v % q);
      v /= q;
    }
    bool match = true;
    for (std::size_t i = 0; i < period && match; ++i) {
      std::size_t window = 0;
      for (int j = 0; j < len; ++j) {
        const long long idx = static_cast<long long>(i) - rule.left() + j;
        const long long m =
            ((idx % static_cast<long long>(period)) + static_cast<long long>(period)) %
            static_cast<long long>(period);
        window = window * q + cells[static_cast<std::size_t>(m)];
      }
      match = rule.output(window) == x.cell(static_cast<long long>(i));
    }
    if (match) result.emplace_back(q, cells);
  }
  return result;
}

}  // namespace vnca
