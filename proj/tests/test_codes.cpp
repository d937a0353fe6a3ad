#include "beamalign/codes.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace beamalign;
using beamalign::testing::demo_feedback_loop;

namespace {

CodewordLoop loop_of(std::initializer_list<const char*> words, int d) {
  std::vector<Codeword> ws;
  for (const char* w : words) ws.emplace_back(w);
  return CodewordLoop(std::move(ws), d);
}

// Plain word-sequence enumeration for tiny instances, kept deliberately
// independent of the production search: anchor the loop's least word at
// position 0, demand adjacent words differ, and run the public predicate on
// every completed loop.
int reference_max_cardinality(int b, int d, int max_len) {
  const int alphabet = 1 << b;
  int best = 0;
  std::vector<int> seq;
  auto word_string = [&](int value) {
    std::string bits(static_cast<std::size_t>(b), '0');
    for (int j = 0; j < b; ++j)
      if ((value >> j) & 1) bits[static_cast<std::size_t>(j)] = '1';
    return bits;
  };
  std::function<void(int)> dfs = [&](int n) {
    if (static_cast<int>(seq.size()) == n) {
      if (n > 1 && seq.back() == seq.front()) return;
      std::vector<Codeword> words;
      for (int v : seq) words.emplace_back(word_string(v));
      const CodewordLoop loop(std::move(words), d);
      if (!is_characteristic_loop(loop)) return;
      std::vector<int> sorted(seq);
      std::sort(sorted.begin(), sorted.end());
      const int distinct =
          static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
      best = std::max(best, distinct);
      return;
    }
    for (int w = seq.front(); w < alphabet; ++w) {
      if (w == seq.back()) continue;
      seq.push_back(w);
      dfs(n);
      seq.pop_back();
    }
  };
  for (int n = 1; n <= max_len; ++n)
    for (int first = 0; first < alphabet; ++first) {
      seq.assign(1, first);
      if (n == 1) {
        best = std::max(best, 1);
        continue;
      }
      dfs(n);
    }
  return best;
}

}  // namespace

TEST_CASE("unimodal loops: ones form one cyclic run") {
  CHECK(is_unimodal({{1, 0, 0, 1}}));
  CHECK_FALSE(is_unimodal({{1, 0, 1, 0}}));
  CHECK(is_unimodal({{0, 0, 0}}));
  CHECK(is_unimodal({{1, 1, 1}}));
  CHECK(is_unimodal({{1}}));
  CHECK(is_unimodal({{0, 1, 1, 0, 0}}));
  CHECK_FALSE(is_unimodal({{0, 1, 0, 1, 1}}));
}

TEST_CASE("characteristic loop of the three-word delay-2 code") {
  CHECK(is_characteristic_loop(loop_of({"01", "11", "10"}, 2)));
}

TEST_CASE("the ten-word delay-3 feedback loop is characteristic and minimal") {
  const CodewordLoop loop = demo_feedback_loop();
  CHECK(loop.is_minimal());
  CHECK(is_characteristic_loop(loop));
  // its column loops, read straight off the definition
  CHECK(loop.column(2).bits == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 1, 1, 1});
  CHECK(loop.column(4).bits == std::vector<int>{0, 0, 1, 0, 0, 0, 1, 1, 0, 0});
}

TEST_CASE("delay-1 rejects an alternating first column") {
  CHECK_FALSE(is_characteristic_loop(loop_of({"10", "01", "10", "01"}, 1)));
}

TEST_CASE("minimalize collapses consecutive repeats only") {
  CHECK(minimalize(loop_of({"11", "11", "01", "10"}, 2)) == loop_of({"11", "01", "10"}, 2));
  const CodewordLoop keeps = loop_of({"11", "01", "11", "10"}, 2);
  CHECK(minimalize(keeps) == keeps);  // minimal yet repeating a word non-consecutively
  CHECK(minimalize(loop_of({"00", "00", "00"}, 2)) == loop_of({"00"}, 2));
  CHECK(minimalize(loop_of({"01", "00", "00", "01"}, 2)) == loop_of({"01", "00"}, 2));
}

TEST_CASE("minimalize is idempotent on random loops") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> len_dist(1, 12);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Codeword> words;
    const int n = len_dist(rng);
    for (int k = 0; k < n; ++k) {
      std::string bits;
      for (int j = 0; j < 3; ++j) bits.push_back(bit(rng) ? '1' : '0');
      words.emplace_back(bits);
    }
    const CodewordLoop once = minimalize(CodewordLoop(words, 2));
    CHECK(minimalize(once) == once);
    CHECK(once.is_minimal());
  }
}

TEST_CASE("loop equality is rotation invariant, not reflection invariant") {
  CHECK(loop_of({"01", "11", "10"}, 2) == loop_of({"10", "01", "11"}, 2));
  CHECK_FALSE(loop_of({"01", "11", "10"}, 2) == loop_of({"01", "10", "11"}, 2));
}

TEST_CASE("witness search finds a loop for the three-word code") {
  const Code code({Codeword("11"), Codeword("01"), Codeword("10")}, 2);
  const LoopSearch search = find_characteristic_loop(code, 4);
  REQUIRE(search.status == LoopSearch::Status::found);
  REQUIRE(search.loop.has_value());
  CHECK(search.loop->size() == 3);
  CHECK(is_characteristic_loop(*search.loop));
  CHECK(Code::from_loop(*search.loop).words() == code.words());
}

TEST_CASE("witness search: single-word code") {
  const Code code({Codeword("0000")}, 3);
  const LoopSearch search = find_characteristic_loop(code, 4);
  REQUIRE(search.status == LoopSearch::Status::found);
  CHECK(search.loop->size() == 1);
}

TEST_CASE("witness search default length cap is four times the code size") {
  const Code code({Codeword("11"), Codeword("01"), Codeword("10")}, 2);
  const LoopSearch search = find_characteristic_loop(code);
  REQUIRE(search.status == LoopSearch::Status::found);
  CHECK(search.loop->size() <= 12);
  CHECK_THROWS_AS(find_characteristic_loop(code, 2), std::invalid_argument);
}

TEST_CASE("witness search: two complementary words at delay 1") {
  const Code code({Codeword("10"), Codeword("01")}, 1);
  const LoopSearch search = find_characteristic_loop(code, 4);
  REQUIRE(search.status == LoopSearch::Status::found);
  CHECK(is_characteristic_loop(*search.loop));
  CHECK(*search.loop == loop_of({"01", "10"}, 1));
}

TEST_CASE("witness search reports absence separately from budget exhaustion") {
  const Code pair_code({Codeword("00"), Codeword("11")}, 1);
  CHECK(find_characteristic_loop(pair_code, 6).status == LoopSearch::Status::found);

  // The even-weight length-3 code at delay 3: every column pairs up the
  // nonzero words, so 011, 101 and 110 would all have to sit next to each
  // other on the loop. No cycle admits that triangle.
  const Code bad({Codeword("000"), Codeword("011"), Codeword("101"), Codeword("110")}, 3);
  const LoopSearch search = find_characteristic_loop(bad, 8, 5'000'000);
  CHECK(search.status == LoopSearch::Status::not_found);

  const Code big({Codeword("1100"), Codeword("0011"), Codeword("1010"), Codeword("0101")}, 2);
  const LoopSearch tiny_budget = find_characteristic_loop(big, 16, 3);
  CHECK(tiny_budget.status == LoopSearch::Status::budget_exceeded);
}

TEST_CASE("parent loop of the ten-word loop collapses the repeated prefix") {
  // truncate to three bits and fuse consecutive equals
  const CodewordLoop parent = parent_loop(demo_feedback_loop(), 1);
  CHECK(parent == loop_of({"110", "100", "101", "001", "011", "010"}, 3));
  CHECK(parent.is_minimal());
  CHECK(is_characteristic_loop(parent));
}

TEST_CASE("parent loop of the three-word loop") {
  CHECK(parent_loop(loop_of({"01", "11", "10"}, 2), 1) == loop_of({"0", "1"}, 2));
}

TEST_CASE("parent loop rejects out-of-range orders") {
  const CodewordLoop loop = loop_of({"01", "11", "10"}, 2);
  CHECK_THROWS_AS(parent_loop(loop, 0), std::invalid_argument);
  CHECK_THROWS_AS(parent_loop(loop, 2), std::invalid_argument);
}

TEST_CASE("cardinality bound: closed forms and recursion") {
  for (int b = 1; b <= 10; ++b) CHECK(max_code_cardinality_bound(b, 1) == (1LL << b));
  for (int d = 1; d <= 10; ++d)
    for (int b = 1; b <= d; ++b) CHECK(max_code_cardinality_bound(b, d) == 2 * b);
  CHECK(max_code_cardinality_bound(3, 3) == 6);
  CHECK(max_code_cardinality_bound(4, 3) == 10);
  CHECK(max_code_cardinality_bound(5, 2) == 32);
  CHECK(max_code_cardinality_bound(5, 3) == 18);
  CHECK(max_code_cardinality_bound(6, 3) == 30);
  CHECK(max_code_cardinality_bound(7, 3) == 50);
  CHECK_THROWS_AS(max_code_cardinality_bound(0, 1), std::invalid_argument);
}

TEST_CASE("brute force matches the bound where the bound is exact") {
  const CardinalitySearch d1 = max_cardinality_bruteforce(2, 1, 4);
  REQUIRE(d1.status == CardinalitySearch::Status::completed);
  CHECK(d1.max_cardinality == 4);

  const CardinalitySearch small = max_cardinality_bruteforce(3, 3, 8);
  REQUIRE(small.status == CardinalitySearch::Status::completed);
  CHECK(small.max_cardinality == 6);

  REQUIRE(small.witness.has_value());
  CHECK(is_characteristic_loop(*small.witness));
  CHECK(small.witness->is_minimal());
}

TEST_CASE("brute force stays within the bound") {
  const CardinalitySearch search = max_cardinality_bruteforce(4, 3, 12);
  REQUIRE(search.status == CardinalitySearch::Status::completed);
  CHECK(search.max_cardinality <= max_code_cardinality_bound(4, 3));
  CHECK(is_characteristic_loop(*search.witness));
  CHECK(static_cast<long long>(Code::from_loop(*search.witness).size()) == search.max_cardinality);
}

TEST_CASE("brute force agrees with a plain enumeration on tiny instances") {
  for (int d = 1; d <= 3; ++d)
    for (int b = 1; b <= 3; ++b) {
      const int max_len = b < 3 ? 6 : 5;
      const CardinalitySearch search = max_cardinality_bruteforce(b, d, max_len);
      REQUIRE(search.status == CardinalitySearch::Status::completed);
      CHECK(search.max_cardinality == reference_max_cardinality(b, d, max_len));
    }
}

TEST_CASE("observed cardinalities at the edge of the desk-scale range") {
  // The bound is met at (4,3) and (5,2); at (5,3) the search exhausts all
  // loops and tops out one short of the recursion value.
  const CardinalitySearch four_three = max_cardinality_bruteforce(4, 3, 48);
  REQUIRE(four_three.status == CardinalitySearch::Status::completed);
  CHECK(four_three.max_cardinality == 10);

  const CardinalitySearch five_two = max_cardinality_bruteforce(5, 2, 96);
  REQUIRE(five_two.status == CardinalitySearch::Status::completed);
  CHECK(five_two.max_cardinality == 32);
  CHECK(is_characteristic_loop(*five_two.witness));
  CHECK(five_two.witness->is_minimal());

  const CardinalitySearch five_three = max_cardinality_bruteforce(5, 3, 96);
  REQUIRE(five_three.status == CardinalitySearch::Status::completed);
  CHECK(five_three.max_cardinality == 17);
  CHECK(max_code_cardinality_bound(5, 3) == 18);
  CHECK(is_characteristic_loop(*five_three.witness));
  CHECK(Code::from_loop(*five_three.witness).size() == 17);
}

TEST_CASE("brute force reports budget exhaustion distinctly") {
  const CardinalitySearch search = max_cardinality_bruteforce(4, 2, 16, 5);
  CHECK(search.status == CardinalitySearch::Status::budget_exceeded);
}

TEST_CASE("parent loops of feedback loops stay characteristic") {
  std::mt19937_64 rng(1117);
  std::uniform_int_distribution<int> b_dist(2, 5), d_dist(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const ScanningBeamSet set = beamalign::testing::random_beamset(rng, b_dist(rng), d_dist(rng));
    const CodewordLoop loop = uncertainty_map(set).feedback_loop();
    REQUIRE(is_characteristic_loop(loop));
    for (int order = 1; order < loop.word_length(); ++order) {
      const CodewordLoop parent = parent_loop(loop, order);
      CHECK(parent.is_minimal());
      CHECK(is_characteristic_loop(parent));
    }
  }
}

TEST_CASE("cardinality never exceeds characteristic-loop length") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> b_dist(2, 5), d_dist(1, 4);
    const ScanningBeamSet set = beamalign::testing::random_beamset(rng, b_dist(rng), d_dist(rng));
    const CodewordLoop loop = uncertainty_map(set).feedback_loop();
    CHECK(Code::from_loop(loop).size() <= loop.size());
  }
}

TEST_CASE("acceptance at delay d implies acceptance at smaller delays") {
  // Reading the loop under a smaller delay only refines the prefix classes,
  // and sub-loops of unimodal loops stay unimodal.
  std::mt19937_64 rng(808);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> b_dist(2, 5), d_dist(2, 4);
    const int d = d_dist(rng);
    const ScanningBeamSet set = beamalign::testing::random_beamset(rng, b_dist(rng), d);
    const CodewordLoop loop = uncertainty_map(set).feedback_loop();
    REQUIRE(is_characteristic_loop(loop));
    for (int smaller = 1; smaller < d; ++smaller) {
      CHECK(is_characteristic_loop(CodewordLoop(loop.words(), smaller)));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("acceptance does not extend to larger delays") {
  // Counterexample: valid at delay 1, but column 2 read over the whole loop
  // alternates three times, so delay 2 rejects it.
  const CodewordLoop loop = loop_of({"11", "10", "01", "00", "01"}, 1);
  REQUIRE(loop.is_minimal());
  REQUIRE(is_characteristic_loop(loop));
  CHECK_FALSE(is_characteristic_loop(CodewordLoop(loop.words(), 2)));
}
