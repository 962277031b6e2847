#include "code.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <unordered_map>

#include "design.hpp"
#include "error.hpp"

namespace stoc {

namespace {

void sort_and_dedupe(code_t& c) {
  const int w = c.word_width();
  const std::size_t count = w == 0 ? 0 : c.digits.size() / w;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  const std::uint8_t* base = c.digits.data();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::memcmp(base + a * w, base + b * w, w) < 0;
  });
  std::vector<std::uint8_t> out;
  out.reserve(c.digits.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint8_t* w0 = base + order[i] * w;
    if (i > 0) {
      const std::uint8_t* prev = base + order[i - 1] * w;
      if (std::memcmp(prev, w0, w) == 0) continue;
    }
    out.insert(out.end(), w0, w0 + w);
  }
  c.digits = std::move(out);
}

}  // namespace

code_t make_code(int q, int level, int n, std::vector<std::uint8_t> digits,
                 std::size_t word_cap) {
  if (q < 2 || q > 256) fail(errc::invalid_argument, "alphabet size out of range");
  if (level < 1) fail(errc::invalid_argument, "level must be >= 1");
  if (n < 1) fail(errc::invalid_argument, "length must be >= 1");
  code_t c;
  c.q = q;
  c.level = level;
  c.n = n;
  const std::size_t w = static_cast<std::size_t>(n) * level;
  if (digits.empty() || digits.size() % w != 0)
    fail(errc::invalid_argument, "digit count not a multiple of word width");
  for (std::uint8_t d : digits)
    if (d >= q) fail(errc::invalid_argument, "digit exceeds alphabet");
  if (digits.size() / w > word_cap)
    fail(errc::cap_exceeded, "word count exceeds cap " + std::to_string(word_cap));
  c.digits = std::move(digits);
  sort_and_dedupe(c);
  return c;
}

rate_value rate(const code_t& c) {
  rate_value r;
  const bigint count = c.size();
  bigint p = 1;
  int e = 0;
  while (p < count) {
    p *= c.q;
    ++e;
  }
  if (p == count) {
    r.exact = true;
    r.value = rational(bigint(e), bigint(c.n) * c.level);
    r.approx = rational_to_double(r.value);
  } else {
    r.exact = false;
    r.approx = std::log(static_cast<double>(c.size())) /
               (std::log(static_cast<double>(c.q)) * c.n * c.level);
  }
  return r;
}

verify_result verify_storage_code(const code_t& c, const graph& g,
                                  const verify_scope& scope) {
  if (c.n != g.n)
    fail(errc::invalid_argument, "code length differs from vertex count");
  std::vector<int> verts;
  if (scope.all) {
    verts.resize(g.n);
    for (int v = 0; v < g.n; ++v) verts[v] = v;
  } else {
    verts = scope.verts;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
      if (v < 0 || v >= g.n) fail(errc::invalid_argument, "vertex out of range");
  }

  const std::size_t count = c.size();
  const int lvl = c.level;
  verify_result best;
  std::string key;
  for (int v : verts) {
    const auto& nbrs = g.adj[v];
    // Bucket words by their digits on the neighborhood; the first bucket
    // member with a deviating later member gives the lexicographic witness.
    struct bucket {
      std::size_t first;
      std::size_t partner = SIZE_MAX;
    };
    std::unordered_map<std::string, bucket> buckets;
    buckets.reserve(count * 2);
    key.resize(static_cast<std::size_t>(nbrs.size()) * lvl);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint8_t* w = c.word(i);
      std::size_t pos = 0;
      for (int u : nbrs)
        for (int d = 0; d < lvl; ++d)
          key[pos++] = static_cast<char>(w[u * lvl + d]);
      auto [it, inserted] = buckets.try_emplace(key, bucket{i});
      if (inserted) continue;
      bucket& b = it->second;
      if (b.partner != SIZE_MAX) continue;
      const std::uint8_t* w0 = c.word(b.first);
      if (std::memcmp(w0 + v * lvl, w + v * lvl, lvl) != 0) b.partner = i;
    }
    std::size_t best_x = SIZE_MAX, best_y = SIZE_MAX;
    for (const auto& [k, b] : buckets) {
      if (b.partner == SIZE_MAX) continue;
      if (b.first < best_x || (b.first == best_x && b.partner < best_y)) {
        best_x = b.first;
        best_y = b.partner;
      }
    }
    if (best_x != SIZE_MAX) {
      best.ok = false;
      best.vertex = v;
      best.word_x = best_x;
      best.word_y = best_y;
      return best;
    }
  }
  return best;
}

namespace {

int mod_inverse(int a, int q) {
  int r = 1;
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * a % q;
    a = a * a % q;
  }
  return r;
}

}  // namespace

code_t code_from_parity(int q, int n,
                        const std::vector<std::vector<std::uint8_t>>& parity,
                        std::uint64_t enum_cap, std::size_t word_cap) {
  if (!is_prime(q)) fail(errc::invalid_argument, "parity kernel needs prime q");
  if (n < 1) fail(errc::invalid_argument, "length must be >= 1");
  double total = n * std::log2(static_cast<double>(q));
  if (total > std::log2(static_cast<double>(enum_cap)) + 1e-9)
    fail(errc::cap_exceeded, "q^n exceeds enumeration cap");

  std::vector<std::vector<int>> m;
  for (const auto& row : parity) {
    if (static_cast<int>(row.size()) != n)
      fail(errc::invalid_argument, "parity row length differs from n");
    std::vector<int> r(row.begin(), row.end());
    for (int& x : r) {
      if (x >= q) fail(errc::invalid_argument, "parity entry exceeds alphabet");
      x %= q;
    }
    m.push_back(std::move(r));
  }

  // Row reduce; pivot columns become dependent, the rest free.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const int inv = mod_inverse(m[rank][col], q);
    for (int& x : m[rank]) x = x * inv % q;
    for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == rank || m[r2][col] == 0) continue;
      const int f = m[r2][col];
      for (int c2 = 0; c2 < n; ++c2)
        m[r2][c2] = (m[r2][c2] - f * m[rank][c2] % q + q * q) % q;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  const std::size_t dim = free_cols.size();
  bigint words = ipow(q, static_cast<unsigned>(dim));
  if (words > word_cap)
    fail(errc::cap_exceeded, "kernel larger than word cap");

  std::vector<std::uint8_t> digits;
  digits.reserve(words.convert_to<std::size_t>() * n);
  std::vector<int> assign(dim, 0);
  std::vector<int> word(n, 0);
  while (true) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < dim; ++i) word[free_cols[i]] = assign[i];
    for (std::size_t r2 = 0; r2 < rank; ++r2) {
      int sum = 0;
      for (std::size_t i = 0; i < dim; ++i)
        sum += m[r2][free_cols[i]] * assign[i];
      word[pivot_col[r2]] = (q - sum % q) % q;
    }
    for (int x : word) digits.push_back(static_cast<std::uint8_t>(x));
    std::size_t pos = 0;
    while (pos < dim && ++assign[pos] == q) assign[pos++] = 0;
    if (pos == dim) break;
  }
  return make_code(q, 1, n, std::move(digits), word_cap);
}

std::optional<code_t> puncture_fix(const code_t& c,
                                   const std::vector<int>& positions,
                                   const std::vector<std::uint8_t>& values) {
  if (values.size() != positions.size() * static_cast<std::size_t>(c.level))
    fail(errc::invalid_argument, "value digits must be level per position");
  for (int p : positions)
    if (p < 0 || p >= c.n) fail(errc::invalid_argument, "position out of range");
  for (std::uint8_t d : values)
    if (d >= c.q) fail(errc::invalid_argument, "digit exceeds alphabet");

  std::vector<std::uint8_t> digits;
  const int w = c.word_width();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint8_t* word = c.word(i);
    bool match = true;
    for (std::size_t p = 0; p < positions.size() && match; ++p)
      match = std::memcmp(word + positions[p] * c.level,
                          values.data() + p * c.level, c.level) == 0;
    if (match) digits.insert(digits.end(), word, word + w);
  }
  if (digits.empty()) return std::nullopt;
  return make_code(c.q, c.level, c.n, std::move(digits));
}

}  // namespace stoc
