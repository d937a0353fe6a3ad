#pragma once

// Cyclic binary codes with per-column unimodality constraints under a fixed
// feedback delay d: unimodal loops, characteristic loops and their
// minimization, parent codes, the cardinality recursion bound, and an
// exhaustive search oracle for the true maximum cardinality.

#include <optional>
#include <string>
#include <vector>

namespace beamalign {

// Fixed-length binary word; a full feedback sequence (a_1, ..., a_b).
class Codeword {
 public:
  explicit Codeword(std::string bits);

  int length() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_[static_cast<std::size_t>(i)] - '0'; }  // 0-based
  const std::string& bits() const { return bits_; }

  friend bool operator==(const Codeword& a, const Codeword& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const Codeword& a, const Codeword& b) { return a.bits_ < b.bits_; }

 private:
  std::string bits_;
};

// Cyclically ordered bits; rotations of the same sequence denote the same loop.
struct BinaryLoop {
  std::vector<int> bits;
};

// True iff the ones (if any) occupy a single cyclic run.
bool is_unimodal(const BinaryLoop& loop);

// Cyclically ordered codewords of equal length, with the feedback delay they
// are read under. Rotations are identified: operator== compares canonical
// (lexicographically least) rotations.
class CodewordLoop {
 public:
  CodewordLoop(std::vector<Codeword> words, int delay);

  int delay() const { return delay_; }
  int word_length() const { return words_.front().length(); }
  std::size_t size() const { return words_.size(); }
  const Codeword& word(std::size_t k) const { return words_[k]; }
  const std::vector<Codeword>& words() const { return words_; }

  BinaryLoop column(int i) const;  // bits of 1-based column i, in loop order

  // No two cyclically consecutive words equal (a single-word loop is minimal).
  bool is_minimal() const;

  CodewordLoop canonical_rotation() const;

  friend bool operator==(const CodewordLoop& a, const CodewordLoop& b);

 private:
  std::vector<Codeword> words_;
  int delay_;
};

// A set of distinct codewords under a fixed delay. Construction sorts and
// deduplicates; cardinality is the number of distinct words.
class Code {
 public:
  Code(std::vector<Codeword> words, int delay);
  static Code from_loop(const CodewordLoop& loop);

  int delay() const { return delay_; }
  int word_length() const { return words_.front().length(); }
  std::size_t size() const { return words_.size(); }
  const std::vector<Codeword>& words() const { return words_; }  // sorted ascending
  bool contains(const Codeword& w) const;

 private:
  std::vector<Codeword> words_;
  int delay_;
};

// Definitional check: every column i <= d forms a unimodal loop over the whole
// loop; every column i > d forms a unimodal loop within each sub-loop of
// words sharing the same (i-d)-prefix.
bool is_characteristic_loop(const CodewordLoop& loop);

// Collapses maximal runs of cyclically consecutive equal words to a single
// occurrence. Idempotent; a loop of one repeated word collapses to length 1.
CodewordLoop minimalize(const CodewordLoop& loop);

// Truncates every word to its (b - order)-prefix and minimalizes. The result
// is a characteristic loop of the order-`order` parent code.
CodewordLoop parent_loop(const CodewordLoop& loop, int order);

// Cardinality recursion: exact 2^b for d = 1 and exact 2b for b <= d;
// otherwise the upper bound M(b-1,d) + 2*M(b-d,d).
long long max_code_cardinality_bound(int b, int d);

struct LoopSearch {
  enum class Status { found, not_found, budget_exceeded };
  Status status = Status::not_found;
  std::optional<CodewordLoop> loop;
  long long nodes_visited = 0;
};

// Exhaustive search for a minimal characteristic loop of length <= max_len
// using each of the code's words at least once. Budget exhaustion is reported
// separately from nonexistence within max_len. The parameterless form caps
// the length at 4x the code size.
LoopSearch find_characteristic_loop(const Code& code, int max_len,
                                    long long node_budget = 5'000'000);
LoopSearch find_characteristic_loop(const Code& code);

struct CardinalitySearch {
  enum class Status { completed, budget_exceeded };
  Status status = Status::completed;
  int max_cardinality = 0;
  std::optional<CodewordLoop> witness;
  long long nodes_visited = 0;
};

// Depth-first search over all minimal characteristic loops of length
// <= max_len, column by column, maximizing the number of distinct codewords.
// Restricting to minimal loops loses no cardinality: minimalizing any
// characteristic loop preserves both validity and the word set.
CardinalitySearch max_cardinality_bruteforce(int b, int d, int max_len,
                                             long long node_budget = 200'000'000);

}  // namespace beamalign
