#include "beamalign/codes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace beamalign {

Codeword::Codeword(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("Codeword: empty bit string");
  for (char c : bits_)
    if (c != '0' && c != '1') throw std::invalid_argument("Codeword: bits must be '0' or '1'");
}

bool is_unimodal(const BinaryLoop& loop) {
  const std::size_t n = loop.bits.size();
  if (n == 0) throw std::invalid_argument("is_unimodal: empty loop");
  int transitions = 0;
  for (std::size_t k = 0; k < n; ++k)
    transitions += loop.bits[k] != loop.bits[(k + 1) % n];
  // A cyclic binary sequence is unimodal iff it changes value at most twice.
  return transitions <= 2;
}

CodewordLoop::CodewordLoop(std::vector<Codeword> words, int delay)
    : words_(std::move(words)), delay_(delay) {
  if (words_.empty()) throw std::invalid_argument("CodewordLoop: empty loop");
  if (delay_ < 1) throw std::invalid_argument("CodewordLoop: delay must be >= 1");
  for (const auto& w : words_)
    if (w.length() != words_.front().length())
      throw std::invalid_argument("CodewordLoop: words must share one length");
}

BinaryLoop CodewordLoop::column(int i) const {
  if (i < 1 || i > word_length()) throw std::out_of_range("CodewordLoop::column");
  BinaryLoop out;
  out.bits.reserve(words_.size());
  for (const auto& w : words_) out.bits.push_back(w.bit(i - 1));
  return out;
}

bool CodewordLoop::is_minimal() const {
  const std::size_t n = words_.size();
  if (n == 1) return true;
  for (std::size_t k = 0; k < n; ++k)
    if (words_[k] == words_[(k + 1) % n]) return false;
  return true;
}

CodewordLoop CodewordLoop::canonical_rotation() const {
  const std::size_t n = words_.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::string& cand = words_[(r + k) % n].bits();
      const std::string& cur = words_[(best + k) % n].bits();
      if (cand < cur) {
        best = r;
        break;
      }
      if (cur < cand) break;
    }
  }
  std::vector<Codeword> rotated;
  rotated.reserve(n);
  for (std::size_t k = 0; k < n; ++k) rotated.push_back(words_[(best + k) % n]);
  return CodewordLoop(std::move(rotated), delay_);
}

bool operator==(const CodewordLoop& a, const CodewordLoop& b) {
  if (a.delay_ != b.delay_ || a.words_.size() != b.words_.size()) return false;
  return a.canonical_rotation().words_ == b.canonical_rotation().words_;
}

Code::Code(std::vector<Codeword> words, int delay) : words_(std::move(words)), delay_(delay) {
  if (words_.empty()) throw std::invalid_argument("Code: empty code");
  if (delay_ < 1) throw std::invalid_argument("Code: delay must be >= 1");
  for (const auto& w : words_)
    if (w.length() != words_.front().length())
      throw std::invalid_argument("Code: words must share one length");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Code Code::from_loop(const CodewordLoop& loop) { return Code(loop.words(), loop.delay()); }

bool Code::contains(const Codeword& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool is_characteristic_loop(const CodewordLoop& loop) {
  const int b = loop.word_length();
  const int d = loop.delay();
  const std::size_t n = loop.size();
  for (int i = 1; i <= b; ++i) {
    if (i <= d) {
      if (!is_unimodal(loop.column(i))) return false;
      continue;
    }
    const int p = i - d;
    std::map<std::string, BinaryLoop> classes;  // prefix -> column-i bits of the sub-loop
    for (std::size_t k = 0; k < n; ++k) {
      const Codeword& w = loop.word(k);
      classes[w.bits().substr(0, static_cast<std::size_t>(p))].bits.push_back(w.bit(i - 1));
    }
    for (auto& [prefix, sub] : classes)
      if (!is_unimodal(sub)) return false;
  }
  return true;
}

CodewordLoop minimalize(const CodewordLoop& loop) {
  std::vector<Codeword> out;
  for (const auto& w : loop.words())
    if (out.empty() || !(out.back() == w)) out.push_back(w);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return CodewordLoop(std::move(out), loop.delay());
}

CodewordLoop parent_loop(const CodewordLoop& loop, int order) {
  const int b = loop.word_length();
  if (order < 1 || order >= b)
    throw std::invalid_argument("parent_loop: order must satisfy 1 <= order < word length");
  std::vector<Codeword> truncated;
  truncated.reserve(loop.size());
  for (const auto& w : loop.words())
    truncated.emplace_back(w.bits().substr(0, static_cast<std::size_t>(b - order)));
  return minimalize(CodewordLoop(std::move(truncated), loop.delay()));
}

long long max_code_cardinality_bound(int b, int d) {
  if (b < 1 || d < 1)
    throw std::invalid_argument("max_code_cardinality_bound: b and d must be >= 1");
  if (d == 1) {
    if (b > 62) throw std::overflow_error("max_code_cardinality_bound: 2^b exceeds range");
    return 1LL << b;
  }
  std::vector<long long> m(static_cast<std::size_t>(b) + 1, 0);
  for (int k = 1; k <= b; ++k) {
    if (k <= d) {
      m[static_cast<std::size_t>(k)] = 2LL * k;
      continue;
    }
    const long long a = m[static_cast<std::size_t>(k - 1)];
    const long long c = m[static_cast<std::size_t>(k - d)];
    if (a > (1LL << 61) || c > (1LL << 60))
      throw std::overflow_error("max_code_cardinality_bound: value exceeds range");
    m[static_cast<std::size_t>(k)] = a + 2 * c;
  }
  return m[static_cast<std::size_t>(b)];
}

// --- witness search for a given code -------------------------------------

namespace {

struct FindState {
  const std::vector<Codeword>* words = nullptr;
  int b = 0, d = 0, n = 0;
  long long budget = 0, nodes = 0;
  bool budget_hit = false;
  std::vector<int> seq;
  std::vector<int> used;
  int used_distinct = 0;
  std::optional<CodewordLoop> found;
};

// Necessary condition on a linear prefix of the loop: each constrained column
// may change value at most twice (closing the cycle never removes changes).
bool linear_feasible(const FindState& st, int filled) {
  const auto& words = *st.words;
  for (int i = 1; i <= st.b; ++i) {
    if (i <= st.d) {
      int transitions = 0, last = words[static_cast<std::size_t>(st.seq[0])].bit(i - 1);
      for (int k = 1; k < filled; ++k) {
        const int bit = words[static_cast<std::size_t>(st.seq[k])].bit(i - 1);
        transitions += bit != last;
        last = bit;
      }
      if (transitions > 2) return false;
      continue;
    }
    const int p = i - st.d;
    std::map<std::string, std::pair<int, int>> per_class;  // prefix -> (last bit, transitions)
    for (int k = 0; k < filled; ++k) {
      const Codeword& w = words[static_cast<std::size_t>(st.seq[k])];
      const int bit = w.bit(i - 1);
      auto [it, fresh] = per_class.try_emplace(w.bits().substr(0, static_cast<std::size_t>(p)),
                                               bit, 0);
      if (!fresh) {
        it->second.second += bit != it->second.first;
        it->second.first = bit;
        if (it->second.second > 2) return false;
      }
    }
  }
  return true;
}

void find_dfs(FindState& st, int pos) {
  if (st.budget_hit || st.found) return;
  const int K = static_cast<int>(st.words->size());
  if (pos == st.n) {
    if (st.used_distinct == K && st.seq[static_cast<std::size_t>(st.n - 1)] != st.seq[0]) {
      std::vector<Codeword> ws;
      ws.reserve(static_cast<std::size_t>(st.n));
      for (int k = 0; k < st.n; ++k) ws.push_back((*st.words)[static_cast<std::size_t>(st.seq[k])]);
      CodewordLoop loop(std::move(ws), st.d);
      if (is_characteristic_loop(loop)) st.found = std::move(loop);
    }
    return;
  }
  for (int w = 0; w < K; ++w) {
    if (w == st.seq[static_cast<std::size_t>(pos - 1)]) continue;
    if (++st.nodes > st.budget) {
      st.budget_hit = true;
      return;
    }
    st.seq[static_cast<std::size_t>(pos)] = w;
    auto& cnt = st.used[static_cast<std::size_t>(w)];
    if (++cnt == 1) ++st.used_distinct;
    const int slots_left = st.n - (pos + 1);
    if (slots_left >= K - st.used_distinct && linear_feasible(st, pos + 1)) find_dfs(st, pos + 1);
    if (--cnt == 0) --st.used_distinct;
    if (st.budget_hit || st.found) return;
  }
}

}  // namespace

LoopSearch find_characteristic_loop(const Code& code) {
  return find_characteristic_loop(code, 4 * static_cast<int>(code.size()));
}

LoopSearch find_characteristic_loop(const Code& code, int max_len, long long node_budget) {
  if (max_len < static_cast<int>(code.size()))
    throw std::invalid_argument("find_characteristic_loop: max_len must be >= |code|");
  LoopSearch out;
  if (code.size() == 1) {
    // A one-word loop satisfies both conditions vacuously.
    out.status = LoopSearch::Status::found;
    out.loop = CodewordLoop({code.words().front()}, code.delay());
    return out;
  }
  FindState st;
  st.words = &code.words();
  st.b = code.word_length();
  st.d = code.delay();
  st.budget = node_budget;
  const int K = static_cast<int>(code.size());
  for (int n = K; n <= max_len && !st.found && !st.budget_hit; ++n) {
    st.n = n;
    st.seq.assign(static_cast<std::size_t>(n), 0);
    st.used.assign(static_cast<std::size_t>(K), 0);
    st.seq[0] = 0;  // anchor a rotation at the least word
    st.used[0] = 1;
    st.used_distinct = 1;
    find_dfs(st, 1);
  }
  out.nodes_visited = st.nodes;
  if (st.found) {
    out.status = LoopSearch::Status::found;
    out.loop = std::move(st.found);
  } else {
    out.status = st.budget_hit ? LoopSearch::Status::budget_exceeded : LoopSearch::Status::not_found;
  }
  return out;
}

// --- maximum-cardinality oracle -------------------------------------------
//
// Minimal characteristic loops are enumerated column by column through the
// parent hierarchy: dropping the last bit of a minimal loop and fusing the
// consecutive repeats that appear yields its unique parent, so every valid
// loop at column i+1 arises from exactly one valid loop at column i by
// replicating words into short blocks and appending bits. Within one
// (i+1-d)-prefix class the appended bits must form a unimodal cyclic
// sequence, which caps the replication at two extra copies per class.

namespace {

Codeword word_from_bits(std::uint32_t value, int b) {
  std::string bits(static_cast<std::size_t>(b), '0');
  for (int j = 0; j < b; ++j)
    if ((value >> j) & 1u) bits[static_cast<std::size_t>(j)] = '1';
  return Codeword(std::move(bits));
}

// One way a prefix class can absorb the next bit column.
struct ClassConfig {
  int added = 0;          // extra copies introduced (0..2)
  int distinct_pairs = 0; // distinct (word, bit) combinations produced
  std::vector<std::uint8_t> counts;  // copies per member, 1..3
  std::vector<std::uint8_t> bits;    // appended bits, member blocks concatenated
};

// Every valid column assignment for one class: members may split into up to
// three consecutive copies with alternating bits, at most two extra copies in
// total, and the class's cyclic bit sequence must be unimodal.
std::vector<ClassConfig> class_configs(const std::vector<std::uint32_t>& loop,
                                       const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  std::vector<std::vector<std::uint8_t>> count_options;
  count_options.emplace_back(static_cast<std::size_t>(k), 1);
  for (int j = 0; j < k; ++j) {
    auto one = count_options.front();
    one[static_cast<std::size_t>(j)] = 2;
    count_options.push_back(one);
    auto two = count_options.front();
    two[static_cast<std::size_t>(j)] = 3;
    count_options.push_back(std::move(two));
    for (int j2 = j + 1; j2 < k; ++j2) {
      auto pair = one;
      pair[static_cast<std::size_t>(j2)] = 2;
      count_options.push_back(std::move(pair));
    }
  }

  std::vector<ClassConfig> configs;
  std::vector<std::uint8_t> bits;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> pairs;
  for (const auto& counts : count_options) {
    int total = 0;
    for (auto c : counts) total += c;
    const int K = total;
    auto try_pattern = [&](int run_start, int run_len) {
      bits.assign(static_cast<std::size_t>(K), 0);
      for (int t = 0; t < run_len; ++t)
        bits[static_cast<std::size_t>((run_start + t) % K)] = 1;
      // alternation inside every block
      int at = 0;
      for (int j = 0; j < k; ++j) {
        for (int c = 1; c < counts[static_cast<std::size_t>(j)]; ++c)
          if (bits[static_cast<std::size_t>(at + c)] == bits[static_cast<std::size_t>(at + c - 1)])
            return;
        at += counts[static_cast<std::size_t>(j)];
      }
      ClassConfig config;
      config.added = K - k;
      config.counts = counts;
      config.bits = bits;
      pairs.clear();
      at = 0;
      for (int j = 0; j < k; ++j) {
        for (int c = 0; c < counts[static_cast<std::size_t>(j)]; ++c)
          pairs.emplace_back(loop[static_cast<std::size_t>(members[static_cast<std::size_t>(j)])],
                             bits[static_cast<std::size_t>(at + c)]);
        at += counts[static_cast<std::size_t>(j)];
      }
      std::sort(pairs.begin(), pairs.end());
      config.distinct_pairs =
          static_cast<int>(std::unique(pairs.begin(), pairs.end()) - pairs.begin());
      configs.push_back(std::move(config));
    };
    try_pattern(0, 0);
    try_pattern(0, K);
    for (int len = 1; len < K; ++len)
      for (int start = 0; start < K; ++start) try_pattern(start, len);
  }
  // richest configurations first so the first complete descent is maximal
  std::sort(configs.begin(), configs.end(), [](const ClassConfig& a, const ClassConfig& b) {
    if (a.added != b.added) return a.added > b.added;
    return a.distinct_pairs > b.distinct_pairs;
  });
  return configs;
}

struct ExtensionOracle {
  int b = 0, d = 0, max_len = 0;
  long long budget = 0, nodes = 0;
  bool budget_hit = false;
  int best = 0;
  std::vector<std::uint32_t> best_words;

  // Upper bound on the length any descendant of a level-`level` loop of
  // length `len` can reach: each later column adds at most two copies per
  // prefix class.
  long long length_capacity(int level, long long len) const {
    for (int j = level + 1; j <= b; ++j) {
      const int p = std::max(0, j - d);
      const long long classes = std::min<long long>(p >= 31 ? (1LL << 31) : (1LL << p), len);
      len += 2 * classes;
    }
    return std::min<long long>(len, max_len);
  }

  long long distinct_potential(const std::vector<std::uint32_t>& loop, int level) const {
    std::vector<std::uint32_t> sorted(loop);
    std::sort(sorted.begin(), sorted.end());
    const int rem = b - level;
    const long long ext = rem >= 31 ? (1LL << 31) : (1LL << rem);
    long long potential = 0;
    for (std::size_t k = 0; k < sorted.size();) {
      std::size_t j = k;
      while (j < sorted.size() && sorted[j] == sorted[k]) ++j;
      potential += std::min<long long>(static_cast<long long>(j - k), ext);
      k = j;
    }
    return potential;
  }

  void process(const std::vector<std::uint32_t>& loop, int level) {
    if (budget_hit) return;
    if (level == b) {
      std::vector<std::uint32_t> sorted(loop);
      std::sort(sorted.begin(), sorted.end());
      const int distinct =
          static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
      if (distinct > best) {
        best = distinct;
        best_words = loop;
      }
      return;
    }
    extend(loop, level);
  }

  void extend(const std::vector<std::uint32_t>& loop, int level) {
    const int m = static_cast<int>(loop.size());
    const int p = std::max(0, level + 1 - d);
    const std::uint32_t mask = p == 0 ? 0 : (std::uint32_t{1} << p) - 1;
    std::map<std::uint32_t, std::vector<int>> by_prefix;
    for (int pos = 0; pos < m; ++pos)
      by_prefix[loop[static_cast<std::size_t>(pos)] & mask].push_back(pos);

    std::vector<std::vector<int>> members;
    std::vector<std::vector<ClassConfig>> configs;
    std::vector<int> class_of(static_cast<std::size_t>(m));
    std::vector<int> member_index(static_cast<std::size_t>(m));
    members.reserve(by_prefix.size());
    for (auto& [prefix, positions] : by_prefix) {
      const int c = static_cast<int>(members.size());
      for (std::size_t j = 0; j < positions.size(); ++j) {
        class_of[static_cast<std::size_t>(positions[j])] = c;
        member_index[static_cast<std::size_t>(positions[j])] = static_cast<int>(j);
      }
      configs.push_back(class_configs(loop, positions));
      members.push_back(std::move(positions));
    }
    const int num_classes = static_cast<int>(members.size());

    // suffix capacity for mid-product pruning
    std::vector<int> max_added(static_cast<std::size_t>(num_classes) + 1, 0);
    std::vector<int> max_pairs(static_cast<std::size_t>(num_classes) + 1, 0);
    for (int c = num_classes - 1; c >= 0; --c) {
      int add = 0, prs = 0;
      for (const auto& config : configs[static_cast<std::size_t>(c)]) {
        add = std::max(add, config.added);
        prs = std::max(prs, config.distinct_pairs);
      }
      max_added[static_cast<std::size_t>(c)] = max_added[static_cast<std::size_t>(c) + 1] + add;
      max_pairs[static_cast<std::size_t>(c)] = max_pairs[static_cast<std::size_t>(c) + 1] + prs;
    }

    std::vector<const ClassConfig*> chosen(static_cast<std::size_t>(num_classes));
    choose(loop, level, members, configs, chosen, 0, m, 0, max_added, max_pairs, class_of,
           member_index);
  }

  void choose(const std::vector<std::uint32_t>& loop, int level,
              const std::vector<std::vector<int>>& members,
              const std::vector<std::vector<ClassConfig>>& configs,
              std::vector<const ClassConfig*>& chosen, int c, int len_so_far, int pairs_so_far,
              const std::vector<int>& max_added, const std::vector<int>& max_pairs,
              const std::vector<int>& class_of, const std::vector<int>& member_index) {
    if (budget_hit) return;
    const int num_classes = static_cast<int>(members.size());
    if (c == num_classes) {
      emit(loop, level, chosen, len_so_far, class_of, member_index);
      return;
    }
    // prune on the best this branch could still reach
    const long long reachable_len =
        length_capacity(level + 1, len_so_far + max_added[static_cast<std::size_t>(c)]);
    if (reachable_len <= best) return;
    if (level + 1 == b && pairs_so_far + max_pairs[static_cast<std::size_t>(c)] <= best) return;
    for (const auto& config : configs[static_cast<std::size_t>(c)]) {
      if (len_so_far + config.added > max_len) continue;
      chosen[static_cast<std::size_t>(c)] = &config;
      choose(loop, level, members, configs, chosen, c + 1, len_so_far + config.added,
             pairs_so_far + config.distinct_pairs, max_added, max_pairs, class_of, member_index);
      if (budget_hit) return;
    }
  }

  void emit(const std::vector<std::uint32_t>& loop, int level,
            const std::vector<const ClassConfig*>& chosen, int child_len,
            const std::vector<int>& class_of, const std::vector<int>& member_index) {
    if (++nodes > budget) {
      budget_hit = true;
      return;
    }
    if (child_len > max_len) return;
    const std::uint32_t bit = std::uint32_t{1} << level;
    std::vector<std::uint32_t> child;
    child.reserve(static_cast<std::size_t>(child_len));
    const int m = static_cast<int>(loop.size());
    for (int pos = 0; pos < m; ++pos) {
      const ClassConfig& config = *chosen[static_cast<std::size_t>(class_of[static_cast<std::size_t>(pos)])];
      int at = 0;
      const int j = member_index[static_cast<std::size_t>(pos)];
      for (int t = 0; t < j; ++t) at += config.counts[static_cast<std::size_t>(t)];
      for (int cpy = 0; cpy < config.counts[static_cast<std::size_t>(j)]; ++cpy)
        child.push_back(loop[static_cast<std::size_t>(pos)] |
                        (config.bits[static_cast<std::size_t>(at + cpy)] ? bit : 0));
    }
    // cyclic minimality; only the single-word root can break it at the wrap
    const std::size_t n = child.size();
    if (n > 1)
      for (std::size_t k = 0; k < n; ++k)
        if (child[k] == child[(k + 1) % n]) return;
    if (distinct_potential(child, level + 1) <= best ||
        length_capacity(level + 1, static_cast<long long>(n)) <= best)
      return;
    process(child, level + 1);
  }
};

}  // namespace

CardinalitySearch max_cardinality_bruteforce(int b, int d, int max_len, long long node_budget) {
  if (b < 1 || d < 1) throw std::invalid_argument("max_cardinality_bruteforce: b, d must be >= 1");
  if (b > 20) throw std::invalid_argument("max_cardinality_bruteforce: b too large for brute force");
  if (max_len < 1) throw std::invalid_argument("max_cardinality_bruteforce: max_len must be >= 1");

  ExtensionOracle oracle;
  oracle.b = b;
  oracle.d = d;
  oracle.max_len = max_len;
  oracle.budget = node_budget;
  oracle.best = 1;  // the one-word loop is always valid
  oracle.best_words = {0};

  const std::vector<std::vector<std::uint32_t>> roots = {{0, 1}, {0}, {1}};
  for (const auto& root : roots) {
    if (static_cast<int>(root.size()) > max_len) continue;
    if (!oracle.budget_hit) oracle.process(root, 1);
  }

  CardinalitySearch out;
  out.status = oracle.budget_hit ? CardinalitySearch::Status::budget_exceeded
                                 : CardinalitySearch::Status::completed;
  out.max_cardinality = oracle.best;
  out.nodes_visited = oracle.nodes;
  std::vector<Codeword> witness_words;
  witness_words.reserve(oracle.best_words.size());
  for (std::uint32_t v : oracle.best_words) witness_words.push_back(word_from_bits(v, b));
  out.witness = CodewordLoop(std::move(witness_words), d);
  return out;
}

}  // namespace beamalign
