#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/graph_io.hpp"

using namespace hecke;

TEST_CASE("JSON round trip") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    for (const OperatorDesc& d : {OperatorDesc::unramified(f, 2), OperatorDesc::ramified(f, 1), OperatorDesc::ramified_at_x(f),
                                  OperatorDesc::level_r(f, 2, true, 1)}) {
      if (d.level == Level::GeneralR && q > 2) continue;
      const HeckeGraph g = build_graph(d, 4);
      const std::string js = graph_to_json(g);
      CHECK(js.back() == '\n');
      const HeckeGraph back = graph_from_json(js);
      CHECK(back == g);
      CHECK(graph_to_json(back) == js);
    }
  }
}

TEST_CASE("JSON field order") {
  const HeckeGraph g = build_graph(OperatorDesc::ramified(field_of_order(2), 1), 1);
  const std::string js = graph_to_json(g);
  std::size_t last = 0;
  for (const char* key : {"\"q\"", "\"level\"", "\"degree_y\"", "\"at_x\"", "\"radius\"", "\"vertices\"", "\"edges\"", "\"frontier\""}) {
    const std::size_t pos = js.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= last);
    last = pos;
  }
  CHECK(js.find("\"base\"") != std::string::npos);
}

TEST_CASE("malformed JSON is rejected") {
  const HeckeGraph g = build_graph(OperatorDesc::unramified(field_of_order(2), 1), 2);
  std::string js = graph_to_json(g);
  CHECK_THROWS_AS(graph_from_json("{"), Error);
  CHECK_THROWS_AS(graph_from_json("[]"), Error);
  std::string bad = js;
  bad.replace(bad.find("\"dst\": 1"), 8, "\"dst\": 99");
  CHECK_THROWS_AS(graph_from_json(bad), Error);
}

TEST_CASE("DOT and CSV exports") {
  const HeckeGraph g = build_graph(OperatorDesc::unramified(field_of_order(2), 1), 1);
  const std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("digraph hecke {", 0) == 0);
  CHECK(dot.find("label=\"c_{0}\"") != std::string::npos);
  CHECK(dot.find("v0 -> v1 [label=\"3\"]") != std::string::npos);
  CHECK(dot.find("v1 -> v0 [label=\"2\"]") != std::string::npos);
  const std::string csv = graph_to_csv(g);
  CHECK(csv.rfind("src,dst,mult\n", 0) == 0);
  CHECK(csv.find("\"c_{0}\",\"c_{1}\",3\n") != std::string::npos);
}

TEST_CASE("atomic file write") {
  const std::string path = "hecke_graph_io_test.txt";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second\n");
  std::remove(path.c_str());
  CHECK_THROWS(write_file_atomic("/nonexistent-dir/x/y.txt", "z"));
}
