#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbca/io.hpp"
#include "fbca/presentation.hpp"

#include "helpers.hpp"

#include <cstdio>
#include <fstream>

#include <unistd.h>

using namespace fbca;
using namespace fbca::testing;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string &content) {
    char tmpl[] = "/tmp/fbca-test-XXXXXX";
    int fd = ::mkstemp(tmpl);
    REQUIRE(fd >= 0);
    ::close(fd);
    path = tmpl;
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("json loading") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), ParseError);

  TempFile bad("{ not json");
  CHECK_THROWS_AS(load_json_file(bad.path), ParseError);

  TempFile commented("// leading comment\n{\"a\": 1 /* inline */ }\n");
  CHECK(load_json_file(commented.path)["a"] == 1);
}

TEST_CASE("algebra round trip") {
  nlohmann::json j = load_json_file(fixture("ex4_4.json"));
  AlgebraInput in = algebra_from_json(j);
  nlohmann::json out = algebra_to_json(in.quiver, in.generators);
  AlgebraInput back = algebra_from_json(out);
  CHECK(back.quiver.vertices == in.quiver.vertices);
  REQUIRE(back.quiver.arrows.size() == in.quiver.arrows.size());
  for (size_t a = 0; a < in.quiver.arrows.size(); ++a) {
    CHECK(back.quiver.arrows[a].name == in.quiver.arrows[a].name);
    CHECK(back.quiver.arrows[a].source == in.quiver.arrows[a].source);
    CHECK(back.quiver.arrows[a].target == in.quiver.arrows[a].target);
  }
  CHECK(back.generators == in.generators);
}

TEST_CASE("configuration round trip") {
  for (const char *f : {"ex2_4.json", "ex2_5.json", "ex5_2.json"}) {
    Fbc E = load_fbc(f);
    Fbc back = fbc_from_json(fbc_to_json(E));
    CHECK(back.angles == E.angles);
    CHECK(back.g == E.g);
    CHECK(back.p_of == E.p_of);
    CHECK(back.l_of == E.l_of);
    CHECK(back.degree == E.degree);
    CHECK(back.p_labels == E.p_labels);
    CHECK(back.l_labels == E.l_labels);
  }
}

TEST_CASE("malformed configuration input") {
  nlohmann::json j = load_json_file(fixture("ex2_4.json"));
  j["g"].erase("1"); // g no longer total
  CHECK_THROWS(fbc_from_json(j));

  nlohmann::json j2 = load_json_file(fixture("ex2_4.json"));
  j2["P"][0].push_back("2"); // angle 2 covered twice
  CHECK_THROWS_AS(fbc_from_json(j2), MalformedFbc);
}

TEST_CASE("presentation round trip") {
  Presentation P = presentation(load_fbc("ex5_2.json"));
  Presentation back = presentation_from_json(presentation_to_json(P));
  CHECK(back.quiver.vertices == P.quiver.vertices);
  REQUIRE(back.relations.size() == P.relations.size());
  for (size_t i = 0; i < P.relations.size(); ++i) {
    CHECK(back.relations[i].kind == P.relations[i].kind);
    CHECK(back.relations[i].terms == P.relations[i].terms);
  }
}

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("-3/4") == Rat(-3) / 4);
  CHECK(rat_from_string("5") == Rat(5));
  CHECK_THROWS_AS(rat_from_string("x"), ParseError);
}

TEST_CASE("dot export") {
  Fbc E = load_fbc("ex5_2.json");
  FbcQuiver Q = build_quiver(E);
  std::string dot = quiver_to_dot(Q.quiver);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("γ") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
