#include <algorithm>

#include "doctest.h"
#include "twistlink/diagram.hpp"

using namespace twistlink;

namespace {

const char* kOnefoil =
    "X c1 -b +b +a -a\n"
    "B a 1\n"
    "B b 1\n";

const char* kCurl = "X c -e +e +f -f\n";

bool has_code(const ValidationReport& r, const std::string& code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("parse and serialize") {
  auto d = parse_tld("O 1\n");
  CHECK(d.classical.empty());
  CHECK(d.loops == std::vector<std::string>{"1"});
  CHECK(serialize_tld(d) == "O 1\n");

  auto f = parse_tld(kOnefoil);
  CHECK(f.classical.size() == 1);
  CHECK(parse_tld(serialize_tld(f)) == f);
  CHECK(serialize_tld(parse_tld("O e\nB e 3\n")).find("B e 3\n") != std::string::npos);
}

TEST_CASE("parse errors") {
  auto message = [](const char* text) {
    try {
      parse_tld(text);
    } catch (const TldError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("X c -a +b +c -d\n").find("edge multiplicity") != std::string::npos);
  CHECK(message("X c -a +a +b -b\nX c -x +x +y -y\n").find("duplicate") != std::string::npos);
  CHECK(message("\n\nQ 1\n").find("line 3") != std::string::npos);
  CHECK(message("X c -a -a +b +b\n").find("direction") != std::string::npos);
  CHECK(message("O a\nB q 1\n").find("unknown edge") != std::string::npos);
  CHECK(message("# comment only\nO a # trailing\n").empty());
}

TEST_CASE("validation") {
  CHECK(validate(parse_tld(kOnefoil)).valid());
  CHECK(validate(parse_tld("O 1\nB 1 5\n")).valid());
  // Strands joining opposite slots of a single vertex cannot be drawn flat.
  auto bad = parse_tld("X c -e -f +e +f\n");
  auto r = validate(bad);
  REQUIRE(has_code(r, "euler_check_failed"));
  CHECK(r.violations.front().message.find("Euler check failed") != std::string::npos);
  auto wrong_dir = parse_tld("X c +e -e -f +f\n");
  CHECK(has_code(validate(wrong_dir), "slot_direction"));
}

TEST_CASE("projection") {
  auto a = project_abstract(parse_tld(kOnefoil));
  REQUIRE(a.crossings.size() == 1);
  REQUIRE(a.edges.size() == 2);
  CHECK(a.edges[0].parity == 1);
  CHECK(a.edges[1].parity == 1);
  CHECK(a.crossings[0].sign == 1);
  CHECK(writhe(a) == 1);

  auto loop = project_abstract(parse_tld("O 1\nB 1 2\n"));
  REQUIRE(loop.edges.size() == 1);
  CHECK(loop.edges[0].is_loop());
  CHECK(loop.edges[0].parity == 0);
  CHECK(writhe(loop) == 0);

  // A virtual curl projects to a single loop carrying the bar sum.
  auto vloop = project_abstract(parse_tld("V v -p -q +q +p\nB p 1\n"));
  REQUIRE(vloop.edges.size() == 1);
  CHECK(vloop.edges[0].is_loop());
  CHECK(vloop.edges[0].parity == 1);
  CHECK(vloop.edges[0].label == "p");
}

TEST_CASE("components") {
  CHECK(components(parse_tld("O a\nO b\n")).count == 2);
  CHECK(components(parse_tld(kCurl)).count == 1);
  // Classical Hopf diagram: two strands meet at two crossings.
  auto hopf = parse_tld("X x -a -c +b +d\nX y -b +c +a -d\n");
  CHECK(validate(hopf).valid());
  CHECK(components(hopf).count == 2);
  CHECK(link_components(project_abstract(hopf)) == 2);
}
