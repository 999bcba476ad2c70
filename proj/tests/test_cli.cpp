#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "tangentfree/gfq.hpp"

using tangentfree::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
  std::string stable() const {
    Json j = json();
    j.erase("wall_time");
    return j.dump();
  }
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = tfs::dispatch(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"search-min"}).code == 2);
  CHECK(run({"search-min", "--q", "9"}).code == 2);
  CHECK(run({"search-min", "--q", "6"}).code == 2);
  CHECK(run({"construct", "--q", "5", "--name", "two-conics"}).code == 2);
  CHECK(run({"verify", "--set", "-"}, "{not json").code == 2);
  CHECK(run({"verify", "--set", "/nonexistent.json"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("search-min") != std::string::npos);
}

TEST_CASE("verify the ten-set of PG(2,5)") {
  const Run c = run({"construct", "--q", "5", "--name", "interior"});
  REQUIRE(c.code == 0);
  const Run v = run({"verify", "--set", "-"}, c.out);
  CHECK(v.code == 0);
  CHECK(v.err.empty());
  const Json r = v.json()["results"];
  CHECK(r["status"] == "VALID");
  CHECK(r["spectrum"] == "0:6 2:15 3:10");
  CHECK(r["desargues"] == true);

  // A bare PointSet document with unnormalized coordinates.
  const Run line = run({"verify", "--set", "-"},
                       R"({"field":{"p":5,"h":1,"modulus":[0,1]},"points":[[0,2,0],[0,1,1],[0,0,3]]})");
  CHECK(line.code == 1);
  CHECK(line.json()["results"]["status"] == "INVALID");
}

TEST_CASE("search-min reports u and a verified witness") {
  const Run r = run({"search-min", "--q", "5", "--cap", "12"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["results"]["u"] == 10);
  CHECK(j["results"]["witness"]["points"].size() == 10);
  CHECK(j["results"]["nodes_expanded"].get<long long>() > 0);
  CHECK(j.contains("wall_time"));
  const Run serial = run({"search-min", "--q", "5", "--cap", "12", "--serial"});
  CHECK(serial.json()["results"] == j["results"]);

  const Run none = run({"search-min", "--q", "7", "--cap", "11"});
  CHECK(none.code == 0);
  CHECK(none.json()["results"]["u"].is_null());
  CHECK(none.json()["results"]["verified_lower_bound"] == 12);
}

TEST_CASE("exterior-extend for q = 7 finds no off-line extender") {
  const Run r = run({"exterior-extend", "--q", "7", "--all-lines"});
  CHECK(r.code == 0);
  CHECK(r.json()["results"]["report"]["extenders_off_line"].empty());
  const Run r5 = run({"exterior-extend", "--q", "5"});
  CHECK(r5.json()["results"]["report"]["extenders_off_line"] == Json::parse("[[1,0,3]]"));
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::vector<std::string>> cmds{
      {"field-info", "--q", "27"},
      {"construct", "--q", "9", "--name", "frobenius"},
      {"spectrum", "--q", "5", "--n", "10", "--max-i", "4"},
      {"search-min", "--q", "7", "--workers", "2"},
      {"enumerate", "--q", "3", "--n", "6"},
      {"exterior-clique", "--q", "7"},
      {"theoremsuite", "--level", "quick"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c[0]);
    const Run a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.stable() == b.stable());
  }
}

TEST_CASE("codes subcommands") {
  const Run t = run({"construct", "--q", "5", "--name", "trivial"});
  const Run d = run({"dual-codeword", "--set", "-"}, t.out);
  CHECK(d.code == 0);
  CHECK(d.json()["results"]["codeword"]["weight"] == 10);

  const Run small = run({"construct", "--q", "7", "--name", "two-conics"});
  const Run none = run({"dual-codeword", "--set", "-"}, small.out);
  CHECK(none.json()["results"]["codeword"] == "NONE");
  CHECK(none.json()["results"]["exact"] == true);

  const Run p = run({"peel", "--q", "5", "--erased", "-"},
                    R"({"field":{"p":5,"h":1,"modulus":[0,1]},"points":[[1,0,0],[0,1,0]]})");
  CHECK(p.code == 0);
  CHECK(p.json()["results"]["recovered"] == true);
}

TEST_CASE("classification and clique subcommands") {
  const Run c = run({"classify", "--q", "5", "--n", "10"});
  CHECK(c.code == 0);
  const Json cls = c.json()["results"]["classes"];
  REQUIRE(cls.size() == 2);
  CHECK(c.json()["results"]["group_order"] == 372000);
  const Run e = run({"exterior-clique", "--q", "13"});
  CHECK(e.code == 0);
  CHECK(e.json()["results"]["non_collinear"] == 0);
  CHECK(run({"exterior-clique", "--q", "17"}).code == 2);
}
