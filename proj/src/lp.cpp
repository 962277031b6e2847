#include "lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"

namespace stoc {

std::vector<int> closure(const graph& g, const std::vector<int>& a,
                         bool include_a) {
  std::vector<char> in_a(g.n, 0);
  for (int v : a) {
    if (v < 0 || v >= g.n) fail(errc::invalid_argument, "vertex out of range");
    in_a[v] = 1;
  }
  const auto rev = in_neighbors(g);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    bool inside = true;
    // Neighborhood in the symmetrized sense: out- plus in-neighbors.
    for (int u : g.adj[v])
      if (!in_a[u]) {
        inside = false;
        break;
      }
    if (inside)
      for (int u : rev[v])
        if (!in_a[u]) {
          inside = false;
          break;
        }
    if (inside || (include_a && in_a[v])) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_up_to(int n, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Depth-first over ascending elements keeps the order deterministic.
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<gadget> enumerate_gadgets(const graph& g, int tau, int max_support,
                                      bool closure_includes_a) {
  if (tau < 1) fail(errc::invalid_argument, "tau must be >= 1");
  if (max_support < 1) fail(errc::invalid_argument, "max_support must be >= 1");
  std::vector<gadget> out;
  for (int v = 0; v < g.n; ++v)
    for (int c = 0; c < tau; ++c) {
      gadget t;
      t.s1 = {v};
      t.c1 = t.c2 = c;
      t.weight = 2;
      t.trivial = true;
      t.gen_a = {v};
      t.gen_b = {v};
      out.push_back(std::move(t));
    }

  const auto supports = subsets_up_to(g.n, max_support);
  std::vector<std::vector<int>> closures;
  closures.reserve(supports.size());
  for (const auto& a : supports)
    closures.push_back(closure(g, a, closure_includes_a));

  std::map<std::tuple<std::vector<int>, std::vector<int>, int, int>,
           std::size_t>
      dedup;
  for (auto& t : out)
    dedup[{t.s1, t.s2, t.c1, t.c2}] = &t - out.data();

  for (std::size_t ia = 0; ia < supports.size(); ++ia)
    for (std::size_t ib = 0; ib < supports.size(); ++ib) {
      const auto& ca = closures[ia];
      const auto& cb = closures[ib];
      std::vector<int> s1, s2;
      std::set_union(ca.begin(), ca.end(), cb.begin(), cb.end(),
                     std::back_inserter(s1));
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                            std::back_inserter(s2));
      if (s1.empty()) continue;
      const bigint weight = bigint(supports[ia].size()) + bigint(supports[ib].size());
      for (int c1 = 0; c1 < tau; ++c1)
        for (int c2 = 0; c2 < tau; ++c2) {
          if (s2.empty() && c2 != c1) continue;
          const auto key = std::make_tuple(s1, s2, c1, c2);
          auto it = dedup.find(key);
          if (it != dedup.end()) {
            if (weight < out[it->second].weight) {
              out[it->second].weight = weight;
              out[it->second].gen_a = supports[ia];
              out[it->second].gen_b = supports[ib];
              out[it->second].trivial = false;
            }
            continue;
          }
          gadget t;
          t.s1 = s1;
          t.s2 = s2;
          t.c1 = c1;
          t.c2 = c2;
          t.weight = weight;
          t.gen_a = supports[ia];
          t.gen_b = supports[ib];
          dedup[key] = out.size();
          out.push_back(std::move(t));
        }
    }
  return out;
}

lp_instance build_lp(const graph& g, const std::vector<gadget>& gadgets,
                     int tau) {
  lp_instance lp;
  // var layout: trivial pieces get one slot, others two.
  struct var_origin {
    std::size_t gadget;
    int part;
  };
  std::vector<var_origin> origin;
  std::vector<std::array<int, 2>> var_of(gadgets.size(), {-1, -1});
  for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
    var_of[gi][0] = static_cast<int>(origin.size());
    origin.push_back({gi, 0});
    if (!gadgets[gi].trivial) {
      var_of[gi][1] = static_cast<int>(origin.size());
      origin.push_back({gi, 1});
    }
  }
  lp.nvars = static_cast<int>(origin.size());
  for (const auto& o : origin) {
    const auto& gd = gadgets[o.gadget];
    lp.objective.push_back(rational(gd.weight, bigint(2)));
    lp.var_names.push_back("x" + std::to_string(o.gadget) + "_" +
                           std::to_string(o.part));
  }

  const auto edges = edge_list(g);
  for (const auto& e : edges)
    for (int c = 0; c < tau; ++c) {
      lp_row row;
      row.rel = lp_rel::ge;
      row.rhs = 1;
      row.tag = "cover(" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                ";" + std::to_string(c) + ")";
      for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
        const auto& gd = gadgets[gi];
        for (int part = 0; part < 2; ++part) {
          const int var = var_of[gi][part];
          if (var < 0) continue;
          const auto& set = part == 0 ? gd.s1 : gd.s2;
          const int color = part == 0 ? gd.c1 : gd.c2;
          if (color != c) continue;
          int hits = 0;
          hits += std::binary_search(set.begin(), set.end(), e[0]);
          hits += std::binary_search(set.begin(), set.end(), e[1]);
          if (hits > 0) row.terms.push_back({var, rational(hits)});
        }
      }
      lp.rows.push_back(std::move(row));
    }

  for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
    if (gadgets[gi].trivial) continue;
    lp_row row;
    row.rel = lp_rel::eq;
    row.rhs = 0;
    row.tag = "tie(" + std::to_string(gi) + ")";
    row.terms.push_back({var_of[gi][0], rational(1)});
    row.terms.push_back({var_of[gi][1], rational(-1)});
    lp.rows.push_back(std::move(row));
  }
  for (int v = 0; v < lp.nvars; ++v) {
    lp_row row;
    row.rel = lp_rel::le;
    row.rhs = 1;
    row.tag = "box(" + std::to_string(v) + ")";
    row.terms.push_back({v, rational(1)});
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

namespace {

// Dense two-phase simplex, minimization, x >= 0, Bland pivoting.
struct simplex {
  int m = 0, ncols = 0;
  std::vector<std::vector<rational>> a;  // m rows
  std::vector<rational> rhs;
  std::vector<int> basis;
  std::size_t pivots = 0;

  void pivot(int row, int col) {
    const rational p = a[row][col];
    for (auto& x : a[row]) x /= p;
    rhs[row] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const rational f = a[r][col];
      for (int c = 0; c < ncols; ++c) a[r][c] -= f * a[row][c];
      rhs[r] -= f * rhs[row];
    }
    basis[row] = col;
    ++pivots;
  }

  // Minimize cost over the current system; false when unbounded.
  bool optimize(const std::vector<rational>& cost,
                const std::vector<char>& allowed) {
    while (true) {
      // Reduced costs via the basis.
      std::vector<rational> y(m);
      for (int r = 0; r < m; ++r) y[r] = cost[basis[r]];
      int enter = -1;
      for (int c = 0; c < ncols && enter < 0; ++c) {
        if (!allowed[c]) continue;
        bool in_basis = false;
        for (int r = 0; r < m; ++r)
          if (basis[r] == c) in_basis = true;
        if (in_basis) continue;
        rational reduced = cost[c];
        for (int r = 0; r < m; ++r) reduced -= y[r] * a[r][c];
        if (reduced < 0) enter = c;
      }
      if (enter < 0) return true;
      int leave = -1;
      rational best_ratio;
      for (int r = 0; r < m; ++r) {
        if (a[r][enter] <= 0) continue;
        const rational ratio = rhs[r] / a[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

lp_solution simplex_solve(const std::vector<std::vector<rational>>& rows,
                          const std::vector<lp_rel>& rels,
                          const std::vector<rational>& rhs_in,
                          const std::vector<rational>& objective, int nvars) {
  const int m = static_cast<int>(rows.size());
  // Columns: structural, then one slack/surplus per inequality, then
  // artificials as needed.
  int nslack = 0;
  for (auto r : rels)
    if (r != lp_rel::eq) ++nslack;
  std::vector<int> art_rows;
  simplex s;
  s.m = m;
  s.a.assign(m, {});
  s.rhs = rhs_in;
  std::vector<lp_rel> rels_local = rels;
  for (int r = 0; r < m; ++r)
    if (s.rhs[r] < 0)
      fail(errc::internal, "negative rhs not expected here");

  // First pass: decide which rows need artificials (surplus rows and
  // equalities).
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int col = nvars;
  for (int r = 0; r < m; ++r)
    if (rels_local[r] != lp_rel::eq) slack_col[r] = col++;
  for (int r = 0; r < m; ++r)
    if (rels_local[r] != lp_rel::le) art_col[r] = col++;
  s.ncols = col;

  for (int r = 0; r < m; ++r) {
    s.a[r].assign(s.ncols, rational(0));
    for (int c = 0; c < nvars; ++c) s.a[r][c] = rows[r][c];
    if (slack_col[r] >= 0)
      s.a[r][slack_col[r]] = rels_local[r] == lp_rel::le ? 1 : -1;
    if (art_col[r] >= 0) s.a[r][art_col[r]] = 1;
  }
  s.basis.resize(m);
  for (int r = 0; r < m; ++r)
    s.basis[r] = art_col[r] >= 0 ? art_col[r] : slack_col[r];

  std::vector<char> allowed(s.ncols, 1);
  std::vector<rational> phase1(s.ncols, rational(0));
  bool need_phase1 = false;
  for (int r = 0; r < m; ++r)
    if (art_col[r] >= 0) {
      phase1[art_col[r]] = 1;
      need_phase1 = true;
    }

  lp_solution out;
  if (need_phase1) {
    if (!s.optimize(phase1, allowed))
      fail(errc::internal, "phase one unbounded");
    rational p1 = 0;
    for (int r = 0; r < m; ++r) p1 += phase1[s.basis[r]] * s.rhs[r];
    if (p1 != 0) {
      out.feasible = false;
      out.pivots = s.pivots;
      return out;
    }
    // Drive leftover artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (art_col[r] < 0 || s.basis[r] != art_col[r]) continue;
      int c = 0;
      for (; c < s.ncols; ++c) {
        bool is_art = false;
        for (int rr = 0; rr < m; ++rr)
          if (art_col[rr] == c) is_art = true;
        if (!is_art && s.a[r][c] != 0) break;
      }
      if (c < s.ncols) s.pivot(r, c);
    }
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) allowed[art_col[r]] = 0;
  }

  std::vector<rational> cost(s.ncols, rational(0));
  for (int c = 0; c < nvars; ++c) cost[c] = objective[c];
  if (!s.optimize(cost, allowed)) fail(errc::internal, "objective unbounded");

  out.feasible = true;
  out.x.assign(nvars, rational(0));
  for (int r = 0; r < m; ++r)
    if (s.basis[r] < nvars) out.x[s.basis[r]] = s.rhs[r];
  out.objective = 0;
  for (int c = 0; c < nvars; ++c) out.objective += objective[c] * out.x[c];
  out.pivots = s.pivots;
  return out;
}

}  // namespace

lp_solution solve_lp(const lp_instance& lp) {
  // Presolve: ties x_i = x_j collapse onto one representative.
  std::vector<int> rep(lp.nvars);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (const auto& row : lp.rows) {
    if (row.rel != lp_rel::eq || row.rhs != 0 || row.terms.size() != 2) continue;
    if (row.terms[0].coeff + row.terms[1].coeff != 0) continue;
    if (row.terms[0].coeff != 1 && row.terms[0].coeff != -1) continue;
    const int a = find(row.terms[0].var), b = find(row.terms[1].var);
    if (a != b) rep[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> compact(lp.nvars, -1);
  int nv = 0;
  for (int v = 0; v < lp.nvars; ++v)
    if (find(v) == v) compact[v] = nv++;
  auto slot = [&](int v) { return compact[find(v)]; };

  std::vector<rational> objective(nv, rational(0));
  for (int v = 0; v < lp.nvars; ++v) objective[slot(v)] += lp.objective[v];

  std::vector<std::vector<rational>> rows;
  std::vector<lp_rel> rels;
  std::vector<rational> rhs;
  for (const auto& row : lp.rows) {
    if (row.rel == lp_rel::eq && row.rhs == 0 && row.terms.size() == 2 &&
        row.terms[0].coeff + row.terms[1].coeff == 0 &&
        (row.terms[0].coeff == 1 || row.terms[0].coeff == -1) &&
        slot(row.terms[0].var) == slot(row.terms[1].var))
      continue;
    std::vector<rational> dense(nv, rational(0));
    for (const auto& t : row.terms) dense[slot(t.var)] += t.coeff;
    rows.push_back(std::move(dense));
    rels.push_back(row.rel);
    rhs.push_back(row.rhs);
  }
  // Deduplicate identical box rows produced by merged variables.
  auto sol = simplex_solve(rows, rels, rhs, objective, nv);
  if (!sol.feasible) return sol;
  lp_solution out;
  out.feasible = true;
  out.pivots = sol.pivots;
  out.x.assign(lp.nvars, rational(0));
  for (int v = 0; v < lp.nvars; ++v) out.x[v] = sol.x[slot(v)];
  out.objective = 0;
  for (int v = 0; v < lp.nvars; ++v)
    out.objective += lp.objective[v] * out.x[v];
  return out;
}

lp_solution enumerate_lp_min(const lp_instance& lp, int max_vars,
                             std::uint64_t budget) {
  if (lp.nvars > max_vars)
    fail(errc::cap_exceeded, "enumeration limited to " +
                                 std::to_string(max_vars) + " variables");
  const int n = lp.nvars;
  // Candidate hyperplanes: every row at equality plus x = 0 and x = 1.
  std::vector<std::vector<rational>> planes;
  std::vector<rational> plane_rhs;
  for (const auto& row : lp.rows) {
    std::vector<rational> dense(n, rational(0));
    for (const auto& t : row.terms) dense[t.var] += t.coeff;
    planes.push_back(std::move(dense));
    plane_rhs.push_back(row.rhs);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<rational> dense(n, rational(0));
    dense[v] = 1;
    planes.push_back(dense);
    plane_rhs.push_back(rational(0));
    planes.push_back(dense);
    plane_rhs.push_back(rational(1));
  }
  const int p = static_cast<int>(planes.size());

  auto satisfied = [&](const std::vector<rational>& x) {
    for (const auto& row : lp.rows) {
      rational lhs = 0;
      for (const auto& t : row.terms) lhs += t.coeff * x[t.var];
      if (row.rel == lp_rel::ge && lhs < row.rhs) return false;
      if (row.rel == lp_rel::le && lhs > row.rhs) return false;
      if (row.rel == lp_rel::eq && lhs != row.rhs) return false;
    }
    for (const auto& xi : x)
      if (xi < 0 || xi > 1) return false;
    return true;
  };

  lp_solution best;
  best.feasible = false;
  std::uint64_t tried = 0;
  std::vector<int> pick(n);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == n) {
      if (++tried > budget)
        fail(errc::cap_exceeded, "enumeration budget exhausted");
      // Solve the square system given by the picked planes.
      std::vector<std::vector<rational>> m(n, std::vector<rational>(n + 1));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = planes[pick[i]][j];
        m[i][n] = plane_rhs[pick[i]];
      }
      for (int col2 = 0, row2 = 0; col2 < n && row2 < n; ++col2) {
        int sel = row2;
        while (sel < n && m[sel][col2] == 0) ++sel;
        if (sel == n) return;  // singular
        std::swap(m[row2], m[sel]);
        const rational inv = m[row2][col2];
        for (auto& x : m[row2]) x /= inv;
        for (int r2 = 0; r2 < n; ++r2) {
          if (r2 == row2 || m[r2][col2] == 0) continue;
          const rational f = m[r2][col2];
          for (int c2 = col2; c2 <= n; ++c2) m[r2][c2] -= f * m[row2][c2];
        }
        ++row2;
      }
      std::vector<rational> x(n);
      for (int i = 0; i < n; ++i) x[i] = m[i][n];
      if (!satisfied(x)) return;
      rational obj = 0;
      for (int i = 0; i < n; ++i) obj += lp.objective[i] * x[i];
      if (!best.feasible || obj < best.objective) {
        best.feasible = true;
        best.objective = obj;
        best.x = x;
      }
      return;
    }
    for (int i = start; i <= p - (n - depth); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return best;
}

std::string lp_dump(const lp_instance& lp) {
  std::string out;
  out += "min";
  for (int v = 0; v < lp.nvars; ++v) {
    out += (v == 0 ? " " : " + ") + rational_str(lp.objective[v]) + " " +
           lp.var_names[v];
  }
  out += "\n";
  for (const auto& row : lp.rows) {
    std::string line;
    for (const auto& t : row.terms) {
      if (!line.empty()) line += " + ";
      line += rational_str(t.coeff) + " " + lp.var_names[t.var];
    }
    line += row.rel == lp_rel::ge ? " >= " : row.rel == lp_rel::le ? " <= " : " = ";
    line += rational_str(row.rhs);
    if (!row.tag.empty()) line += "   # " + row.tag;
    out += line + "\n";
  }
  out += "0 <= x <= 1 for all variables\n";
  return out;
}

lp_report lp_capacity_bound(const graph& g, int tau, int max_support,
                            bool closure_includes_a) {
  const auto gadgets = enumerate_gadgets(g, tau, max_support, closure_includes_a);
  const auto lp = build_lp(g, gadgets, tau);
  const auto sol = solve_lp(lp);
  if (!sol.feasible) fail(errc::internal, "cover system infeasible");

  lp_report rep;
  rep.tau = tau;
  rep.max_support = max_support;
  rep.closure_includes_a = closure_includes_a;
  rep.gadget_count = gadgets.size();
  rep.var_count = lp.nvars;
  rep.total = sol.objective;
  rep.value = sol.objective / (rational(g.n) * tau);
  // Smallest objective on the 1/n grid at or above the optimum: totals are
  // constrained to multiples of tau before scaling.
  const rational ratio = sol.objective / tau;
  const bigint num = boost::multiprecision::numerator(ratio);
  const bigint den = boost::multiprecision::denominator(ratio);
  const bigint ceil_ratio =
      num >= 0 ? bigint((num + den - 1) / den) : bigint(num / den);
  rep.grid_value = rational(ceil_ratio, bigint(g.n));
  rep.flags = {"restricted_gadgets", "relaxed_integrality"};
  if (closure_includes_a) rep.flags.push_back("closure_includes_a");

  nlohmann::json support = nlohmann::json::array();
  int var = 0;
  for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
    const int nparts = gadgets[gi].trivial ? 1 : 2;
    for (int part = 0; part < nparts; ++part, ++var) {
      if (sol.x[var] == 0) continue;
      support.push_back(nlohmann::json{
          {"s1", gadgets[gi].s1},
          {"s2", gadgets[gi].s2},
          {"c1", gadgets[gi].c1},
          {"c2", gadgets[gi].c2},
          {"part", part},
          {"weight", gadgets[gi].weight.str()},
          {"value", rational_str(sol.x[var])}});
    }
  }
  rep.support = std::move(support);
  return rep;
}

gadget lift_gadget(const interleaved_graph_t& ig, const gadget& g) {
  gadget out;
  out.s1 = lift_set(ig, g.s1);
  out.s2 = lift_set(ig, g.s2);
  out.c1 = g.c1;
  out.c2 = g.c2;
  out.weight = g.weight * ig.s();
  out.trivial = g.trivial;
  out.gen_a = g.gen_a;
  out.gen_b = g.gen_b;
  return out;
}

cover_check validate_cover(const graph& g, const std::vector<gadget>& gadgets,
                           const std::vector<rational>& chi, int tau) {
  if (chi.size() != gadgets.size())
    fail(errc::invalid_argument, "one value per piece expected");
  cover_check out;
  out.feasible = true;
  for (const auto& e : edge_list(g))
    for (int c = 0; c < tau; ++c) {
      rational lhs = 0;
      for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
        const auto& gd = gadgets[gi];
        const int parts = gd.trivial ? 1 : 2;
        for (int part = 0; part < parts; ++part) {
          const auto& set = part == 0 ? gd.s1 : gd.s2;
          const int color = part == 0 ? gd.c1 : gd.c2;
          if (color != c) continue;
          int hits = 0;
          hits += std::binary_search(set.begin(), set.end(), e[0]);
          hits += std::binary_search(set.begin(), set.end(), e[1]);
          lhs += rational(hits) * chi[gi];
        }
      }
      if (lhs < 1) out.feasible = false;
    }
  rational total = 0;
  for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
    const int parts = gadgets[gi].trivial ? 1 : 2;
    total += rational(gadgets[gi].weight, bigint(2)) * parts * chi[gi];
  }
  out.objective = total / (rational(g.n) * tau);
  return out;
}

}  // namespace stoc
