#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace stoc {

inline constexpr std::size_t code_word_cap = std::size_t{1} << 20;
inline constexpr std::uint64_t parity_enum_cap = std::uint64_t{1} << 24;

// Explicit word list.  A symbol is `level` consecutive base-q digits; a word
// is n symbols, n * level digits.  Words are stored sorted and duplicate
// free.
struct code_t {
  int q = 2;
  int level = 1;
  int n = 0;
  std::vector<std::uint8_t> digits;

  int symbol_width() const { return level; }
  int word_width() const { return n * level; }
  std::size_t size() const {
    return word_width() == 0 ? 0 : digits.size() / word_width();
  }
  const std::uint8_t* word(std::size_t i) const {
    return digits.data() + i * word_width();
  }
};

code_t make_code(int q, int level, int n, std::vector<std::uint8_t> digits,
                 std::size_t word_cap = code_word_cap);

// log over base q^level of the word count, divided by n.  Exact when the
// count is a power of q, approximate otherwise.
struct rate_value {
  bool exact = false;
  rational value;
  double approx = 0.0;
};

rate_value rate(const code_t& c);

struct verify_scope {
  bool all = true;
  std::vector<int> verts;
};

// Extensional check: two words matching on the stored neighborhood of v
// must match at v.  The witness is the first violating (v, x, y) in
// lexicographic order over the sorted word list.
struct verify_result {
  bool ok = true;
  int vertex = -1;
  std::size_t word_x = 0;
  std::size_t word_y = 0;
};

verify_result verify_storage_code(const code_t& c, const graph& g,
                                  const verify_scope& scope = {});

// Right kernel of the parity matrix over F_q, q prime.  Rows are length-n
// digit vectors.  Enumerates q^n candidates only through the kernel basis.
code_t code_from_parity(int q, int n,
                        const std::vector<std::vector<std::uint8_t>>& parity,
                        std::uint64_t enum_cap = parity_enum_cap,
                        std::size_t word_cap = code_word_cap);

// Subcode agreeing with `values` (level digits per position) at `positions`.
// Empty result is a valid outcome and is distinct from invalid input.
std::optional<code_t> puncture_fix(const code_t& c,
                                   const std::vector<int>& positions,
                                   const std::vector<std::uint8_t>& values);

}  // namespace stoc
