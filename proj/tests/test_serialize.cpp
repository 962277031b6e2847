#include <doctest.h>

#include <string>
#include <vector>

#include "bounds.hpp"
#include "construct.hpp"
#include "design.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "serialize.hpp"

using namespace stoc;

namespace {

void check_same_graph(const graph& a, const graph& b) {
  CHECK(a.n == b.n);
  CHECK(a.directed == b.directed);
  CHECK(a.adj == b.adj);
  CHECK(a.labels == b.labels);
}

}  // namespace

TEST_CASE("json text form") {
  const auto j = parse_json("{\"b\": 1, \"a\": 2}");
  CHECK(dump_json(j) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
  CHECK_THROWS_AS(parse_json("{ nope"), error);
  try {
    parse_json("[1, 2");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("graph round trip") {
  const auto g = torus_rowcol_graph(3);
  check_same_graph(graph_from_json(graph_to_json(g)), g);

  const auto w = make_window_graph(l1_ball_set(1), 5);
  check_same_graph(graph_from_json(graph_to_json(w.g)), w.g);

  CHECK_THROWS_AS(graph_from_json(parse_json("{\"n\": 2}")), error);
}

TEST_CASE("design and family round trips") {
  const auto d = affine_design(3);
  const auto d2 = design_from_json(design_to_json(d));
  CHECK(d2.v == d.v);
  CHECK(d2.k == d.k);
  CHECK(d2.classes == d.classes);
  CHECK(verify_design(d2).ok);

  const auto f = builtin_family_3x5();
  const auto f2 = family_from_json(family_to_json(f));
  CHECK(f2.k == f.k);
  CHECK(f2.s == f.s);
  CHECK(f2.matrices == f.matrices);
  CHECK(verify_family(f2).ok);
}

TEST_CASE("code round trip") {
  const auto c = code_from_parity(3, 3, {{1, 1, 1}});
  const auto c2 = code_from_json(code_to_json(c));
  CHECK(c2.q == c.q);
  CHECK(c2.level == c.level);
  CHECK(c2.n == c.n);
  CHECK(c2.digits == c.digits);

  const auto lin = linear_code_from_json(
      parse_json("{\"q\": 3, \"n\": 3, \"parity\": [[1, 1, 1]]}"));
  CHECK(lin.digits == c.digits);

  try {
    code_from_json(
        parse_json("{\"q\": 2, \"level\": 1, \"n\": 2, \"words\": [[0, 1, 1]]}"));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
    CHECK(e.pointer().rfind("/words", 0) == 0);
  }
  try {
    code_from_json(
        parse_json("{\"q\": 2, \"level\": 1, \"n\": 2, \"words\": [[0, 7]]}"));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("tiling round trip") {
  const auto t = lattice_tiling(lattice_kind::linf, {1}, 4);
  const auto t2 = tiling_from_json(tiling_to_json(t));
  CHECK(t2.dim == t.dim);
  CHECK(t2.side == t.side);
  CHECK(t2.tiles == t.tiles);
  CHECK((t2.covers == t.covers));
}

TEST_CASE("recovery set forms") {
  const auto factory = recovery_from_json(
      parse_json("{\"kind\": \"interval\", \"l\": 2, \"r\": 2}"));
  CHECK(factory.dim == 1);
  CHECK(factory.offsets.size() == 4);
  CHECK(factory.offsets == interval_set(2, 2).offsets);

  const auto pair = recovery_from_json(
      parse_json("{\"kind\": \"pair\", \"l\": 6, \"r\": 4}"));
  CHECK(pair.offsets == pair_set(6, 4).offsets);

  const auto raw = recovery_from_json(
      parse_json("{\"dim\": 2, \"offsets\": [[0, 1], [1, 0]]}"));
  CHECK(raw.dim == 2);
  CHECK(raw.offsets.size() == 2);

  const auto back = recovery_from_json(recovery_to_json(l1_ball_set(2)));
  CHECK(back.dim == 2);
  CHECK(back.offsets == l1_ball_set(2).offsets);

  CHECK_THROWS_AS(recovery_from_json(parse_json("{\"kind\": \"bogus\"}")),
                  error);
  try {
    recovery_from_json(
        parse_json("{\"dim\": 2, \"offsets\": [[0, 0]]}"));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.pointer() == "/offsets/0");
  }
}

TEST_CASE("certificate forms") {
  const auto g = cycle_graph(5);
  const auto cert = independence_bound(g);
  const auto back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.kind == cert.kind);
  CHECK(back.is_upper == cert.is_upper);
  CHECK(back.value == cert.value);
  CHECK(back.raw == cert.raw);
  CHECK(back.witness == cert.witness);
  CHECK(revalidate_certificate(back, g));

  CHECK(certificate_csv_header() == "graph,kind,direction,value,raw,witness_size");
  CHECK(certificate_csv_row("c5", cert) == "c5,independence,upper,3/5,2,2");

  const auto low = matching_bound(cycle_graph(4));
  CHECK(certificate_csv_row("c4", low) == "c4,matching,lower,1/2,2,2");

  CHECK_THROWS_AS(
      certificate_from_json(parse_json(
          "{\"kind\": \"independence\", \"direction\": \"sideways\", "
          "\"value\": \"1/2\", \"raw\": \"2\", \"witness\": {}, \"flags\": []}")),
      error);
}

TEST_CASE("report rendering") {
  report_t rep;
  rep.preset = "demo";
  rep.seed = 7;
  rep.check("first", "3", "3", "closed-form");
  rep.check("second", "4", "5", "enumerated");
  rep.note("extra", "hello", "definition");
  CHECK_FALSE(rep.ok());

  const auto j = report_to_json(rep);
  CHECK(j["schema"] == "stoc-report/1");
  CHECK(j["preset"] == "demo");
  CHECK(j["ok"] == false);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["verdict"] == "pass");
  CHECK(j["rows"][1]["verdict"] == "fail");
  CHECK(j["rows"][2]["verdict"] == "info");

  const auto csv = report_csv(rep);
  CHECK(csv.rfind("preset,item,expected,got,provenance,verdict\n", 0) == 0);
  CHECK(csv.find("demo,first,3,3,closed-form,pass") != std::string::npos);
  CHECK(csv.find("demo,second,4,5,enumerated,fail") != std::string::npos);

  const auto table = report_table(rep);
  CHECK(table.find("item") != std::string::npos);
  CHECK(table.find("fail") != std::string::npos);

  CHECK(render_report(rep, "json") == dump_json(j));
  CHECK_THROWS_AS(render_report(rep, "yaml"), error);

  report_t good;
  good.preset = "demo2";
  good.check("only", "1", "1", "worked-example");
  CHECK(good.ok());
}

TEST_CASE("aggregate views") {
  const auto g = cycle_graph(4);
  const auto rep =
      make_capacity_report({matching_bound(g)}, {independence_bound(g)});
  const auto j = capacity_report_to_json(rep);
  CHECK(j["verdict"] == "tight");
  CHECK(j["best_lower"] == "1/2");

  const auto s = window_series(interval_set(1, 1), "independence", {4, 8});
  const auto js = window_series_to_json(s);
  CHECK(js["entries"].size() == 2);
  CHECK(js["limsup_estimate"] == "1/2");

  const code_t c = make_code(2, 1, 2, {0, 0, 1, 1});
  const auto vr = verify_storage_code(c, complete_graph(2));
  CHECK(verify_result_to_json(vr)["ok"] == true);
}

TEST_CASE("rational text form") {
  CHECK(rational_str(rational(3, 5)) == "3/5");
  CHECK(rational_str(rational(2)) == "2");
  CHECK(rational_str(rational(0)) == "0");
  CHECK(parse_rational("3/5") == rational(3, 5));
  CHECK(parse_rational("7") == rational(7));
  CHECK(parse_rational("-2/4") == rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), error);
  CHECK_THROWS_AS(parse_rational("abc"), error);
}
