#include "doctest.h"

#include "wallcross/io.hpp"

#include <unistd.h>

#include <fstream>

using namespace wc;
using namespace wc::io;

namespace {

Rational rat(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    char tmpl[] = "/tmp/wallcross-test-XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    path = tmpl;
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("bar and canonical matrices round-trip") {
  auto a = fock::bar_matrix(4, 2);
  json j = to_json(a);
  CHECK(to_json(fock::bar_matrix(2, 2)).at("entries").at("[1,1]|[2]") == "1*q^(1)*t^(0) - 1*q^(-1)*t^(0)");
  auto back = bar_matrix_from_json(json::parse(j.dump()));
  CHECK(back.n == 4);
  CHECK(back.b == 2);
  CHECK(back.order == a.order);
  CHECK(back.a == a.a);
  CHECK(to_json(back).dump() == j.dump());
  auto d = fock::canonical_basis(a, -1);
  auto dback = canonical_from_json(to_json(d));
  CHECK(dback.sign == -1);
  CHECK(dback.d == d.d);
}

TEST_CASE("tables and wall crossings round-trip") {
  auto t = stable::stable_basis(3, {rat(1, 2), -1});
  json j = to_json(t);
  CHECK(j["slope"] == json{{"num", "1"}, {"den", "2"}, {"side", "-"}});
  auto back = table_from_json(json::parse(j.dump()));
  CHECK(back.slope == t.slope);
  CHECK(back.gamma == t.gamma);
  auto w = stable::wall_crossing(3, rat(2, 3));
  auto wback = crossing_from_json(to_json(w));
  CHECK(wback.wall == w.wall);
  CHECK(wback.b == w.b);
}

TEST_CASE("symmetric functions and reports round-trip") {
  sym::SymFunc h = sym::convert(sym::modified_macdonald(Partition{2, 1}), sym::Basis::s);
  json j = to_json(h);
  CHECK(j["basis"] == "s");
  CHECK(symfunc_from_json(j) == h);
  verify::Report r{"conjecture", {{"n", "3"}, {"wall", "1/2"}}, verify::Status::Mismatch, "entry", 12};
  CHECK(!to_json(r, false).contains("millis"));
  CHECK(to_json(r, true)["millis"] == 12);
  auto rb = report_from_json(to_json(r, true));
  CHECK(rb.params == r.params);
  CHECK(rb.status == r.status);
  CHECK(rb.witness == r.witness);
  CHECK(rb.millis == r.millis);
  CHECK(!to_json(verify::Report{"appendix"}, true).contains("witness"));
}

TEST_CASE("malformed documents are rejected") {
  json j = to_json(fock::bar_matrix(2, 2));
  json missing = j;
  missing.erase("order");
  CHECK_THROWS(bar_matrix_from_json(missing));
  json reordered = j;
  reordered["order"] = json::array({json::array({1, 1}), json::array({2})});
  CHECK_THROWS(bar_matrix_from_json(reordered));
  json badkey = j;
  badkey["entries"]["[3]|[2]"] = "1";
  CHECK_THROWS(bar_matrix_from_json(badkey));
  json badpoly = j;
  badpoly["entries"]["[2]|[2]"] = "1/(1-q)";
  CHECK_THROWS(bar_matrix_from_json(badpoly));
  CHECK_THROWS(partition_from_json(json::array({1, 2})));
  CHECK_THROWS(report_from_json(json{{"check", "x"}, {"params", json::object()}, {"status", "maybe"}}));
}

TEST_CASE("latex and csv emitters") {
  Matrix<Scalar> m = identity_matrix<Scalar>(2);
  m[1][0] = parse_scalar("q2 - 1/q1", {"q1", "q2"});
  CHECK(latex_matrix(m, {"q_1", "q_2"}) == "\\begin{pmatrix}\n1 & 0 \\\\\nq_2 - \\frac{1}{q_1} & 1\n\\end{pmatrix}");
  CHECK(latex(parse_scalar("q2^2/q1 - q2/q1^2", {"q1", "q2"})) == "\\frac{q_2^{2}}{q_1} - \\frac{q_2}{q_1^{2}}");
  CHECK(latex(parse_scalar("1/(q1*(1 - q2^2))", {"q1", "q2"})) == "\\frac{1}{-q_1 q_2^{2} + q_1}");
  CHECK(latex(parse_scalar("-3/2*q1^(1/2)", {"q1", "q2"})) == "-\\frac{3 q_1^{1/2}}{2}");
  std::vector<Partition> order{Partition{2}, Partition{1, 1}};
  CHECK(csv_matrix(order, m, {"q1", "q2"}) ==
        "row,col,value\n[2],[2],1*q1^(0)*q2^(0)\n\"[1,1]\",[2],1*q1^(0)*q2^(1) - 1*q1^(-1)*q2^(0)\n"
        "\"[1,1]\",\"[1,1]\",1*q1^(0)*q2^(0)\n");
  CHECK(csv_field("[2]") == "[2]");
  CHECK(csv_field("a\"b") == "\"a\"\"b\"");
  CHECK(csv_field("a,\"b") == "\"a,\"\"b\"");
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache store, load and recovery") {
  TempDir dir;
  Cache cache(dir.path);
  json payload = to_json(stable::stable_basis(2, {rat(1, 2), 1}));
  CHECK(!cache.load("k").has_value());
  cache.store("k", payload);
  REQUIRE(cache.load("k").has_value());
  CHECK(*cache.load("k") == payload);
  CHECK(cache.path_for("k").filename().string() == sha256_hex("k") + ".json");

  // tampered payload: checksum mismatch, treated as a miss
  json entry = json::parse(std::ifstream(cache.path_for("k")));
  entry["payload"]["n"] = 3;
  std::ofstream(cache.path_for("k")) << entry.dump();
  CHECK(!cache.load("k").has_value());

  // stale schema: ignored
  entry = json{{"schema", kSchemaVersion + 1}, {"key", "k"}, {"checksum", ""}, {"payload", payload}};
  std::ofstream(cache.path_for("k")) << entry.dump();
  CHECK(!cache.load("k").has_value());

  // unreadable file: recomputed and rewritten by fetch
  std::ofstream(cache.path_for("k")) << "{not json";
  int computed = 0;
  auto compute = [&] {
    ++computed;
    return payload;
  };
  auto valid = [](const json&) { return std::string(); };
  CHECK(cache.fetch("k", compute, valid) == payload);
  CHECK(cache.fetch("k", compute, valid) == payload);
  CHECK(computed == 1);

  // a payload failing validation is recomputed
  CHECK(cache.fetch("k", compute, [](const json&) { return std::string("bad"); }) == payload);
  CHECK(computed == 2);

  for (const auto& e : std::filesystem::directory_iterator(dir.path))
    CHECK(e.path().extension() == ".json");
}

TEST_CASE("disabled cache") {
  Cache off(std::nullopt);
  CHECK(!off.enabled());
  off.store("k", json(1));
  CHECK(!off.load("k").has_value());
  int computed = 0;
  off.fetch("k", [&] { return json(++computed); }, [](const json&) { return std::string(); });
  off.fetch("k", [&] { return json(++computed); }, [](const json&) { return std::string(); });
  CHECK(computed == 2);
}
