#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "momentrr/cli.hpp"
#include "momentrr/coxeter.hpp"
#include "momentrr/io.hpp"

using namespace momentrr;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("momentrr_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string &name, const std::string &text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
  fs::path path_;
};

const char *kOnes =
    R"({"flavor":"mult","values":{"e":[{"coeff":"1","exp":[0]}],"s1":[{"coeff":"1","exp":[0]}]}})";
const char *kNonMember =
    R"({"flavor":"mult","values":{"e":[{"coeff":"1","exp":[0]}],"s1":[]}})";

} // namespace

TEST_CASE("bruhat bundles re-validate") {
  TempDir dir;
  for (const char *type : {"A", "B"}) {
    const Run bundle = run({"bruhat", "--type", type, "--rank", "2", "--parabolic", "1",
                            "--emit", "bundle"});
    REQUIRE(bundle.code == 0);
    const std::string path = dir.write(std::string(type) + ".json", bundle.out);
    const Run v = run({"validate", "--kind", "bundle", "--input", path});
    CHECK(v.code == 0);
    CHECK(io::Json::parse(v.out)["ok"] == true);
  }

  for (const char *emit : {"graph", "parabolic"}) {
    const Run g = run({"bruhat", "-t", "A", "-r", "3", "-p", "1", "2", "-e", emit});
    REQUIRE(g.code == 0);
    const std::string path = dir.write(std::string(emit) + ".json", g.out);
    CHECK(run({"validate", "-k", "graph", "-i", path}).code == 0);
  }

  const Run graph = run({"bruhat", "-t", "A", "-r", "2"});
  const Run relation = run({"bruhat", "-t", "A", "-r", "2", "-p", "1", "-e", "relation"});
  const Run matching = run({"bruhat", "-t", "A", "-r", "2", "-e", "matching", "-s", "2"});
  const Run mono = run({"bruhat", "-t", "A", "-r", "2", "-e", "monodromy"});
  const std::string g = dir.write("g.json", graph.out);
  CHECK(run({"validate", "-k", "relation", "-i", dir.write("r.json", relation.out), "-g", g})
            .code == 0);
  CHECK(run({"validate", "-k", "matching", "-i", dir.write("m.json", matching.out), "-g", g})
            .code == 0);
  CHECK(run({"validate", "-k", "monodromy", "-i", dir.write("x.json", mono.out), "-g", g})
            .code == 0);

  const Run q = run({"quotient", "-g", g, "--relation", dir.file("r.json")});
  REQUIRE(q.code == 0);
  const auto qj = io::Json::parse(q.out);
  CHECK(qj["graph"]["vertices"].size() == 3);
  const std::string qg = dir.write("q.json", qj["graph"].dump());
  const std::string proj = dir.write("proj.json", qj["projection"].dump());
  CHECK(run({"validate", "-k", "morphism", "-i", proj, "-g", g, "--target", qg}).code == 0);

  // Pull a constant back along the projection.
  io::Json constant{{"flavor", "mult"}, {"values", io::Json::object()}};
  for (const auto &v : qj["graph"]["vertices"])
    constant["values"][v.get<std::string>()] = io::Json::parse(R"([{"coeff":"2","exp":[1,0]}])");
  const Run pulled = run({"pullback", "-g", g, "--target", qg, "-m", proj, "-z",
                          dir.write("c.json", constant.dump())});
  REQUIRE(pulled.code == 0);
  CHECK(io::Json::parse(pulled.out)["values"].size() == 6);
}

TEST_CASE("computations on the A1 bundle") {
  TempDir dir;
  const std::string bundle = dir.write("a1.json", run({"bruhat", "-t", "A", "-r", "1", "-p", "1",
                                                       "-e", "bundle"})
                                                      .out);
  const std::string ones = dir.write("ones.json", kOnes);

  const Run rr = run({"rr", "--bundle", bundle, "--element", ones, "--degree", "4",
                      "--convention", "exact"});
  CHECK(rr.code == 0);
  CHECK(io::Json::parse(rr.out)["agree_through_degree"] == 4);

  const Run all = run({"rr", "-b", bundle, "-z", ones, "-d", "1", "-c", "all"});
  REQUIRE(all.code == 0);
  const auto aj = io::Json::parse(all.out);
  CHECK(aj[0]["convention"] == "paper_stated");
  CHECK(aj[0]["agree_through_degree"] == -1);
  CHECK(aj[1]["agree_through_degree"] == 0);
  CHECK(aj[2]["agree_through_degree"] == 1);

  const Run push = run({"pushforward", "-b", bundle, "-z", ones, "--flavor", "mult"});
  REQUIRE(push.code == 0);
  CHECK(io::Json::parse(push.out)["values"]["e"] == io::Json::parse(R"([{"coeff":"1","exp":[0]}])"));

  const Run bad = run({"pushforward", "-b", bundle, "-z", dir.write("bad.json", kNonMember),
                       "--flavor", "mult"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("z_e - z_s1") != std::string::npos);
  CHECK(run({"pushforward", "-b", bundle, "-z", dir.file("bad.json"), "--unsafe"}).code == 2);

  const Run add = run({"pushforward", "-b", bundle, "-z",
                       dir.write("add.json", R"({"flavor":"add","values":{"e":[{"coeff":"1","exp":[1]}],
                                                 "s1":[{"coeff":"-1","exp":[1]}]}})"),
                       "-f", "add"});
  REQUIRE(add.code == 0);
  CHECK(io::Json::parse(add.out)["values"]["e"] == io::Json::parse(R"([{"coeff":"2","exp":[0]}])"));

  CHECK(run({"chern", "-z", ones, "-b", bundle, "-d", "3"}).code == 0);
  CHECK(run({"todd", "-b", bundle, "-d", "2", "-c", "paper_stated"}).code == 0);
  CHECK(run({"demazure", "-b", bundle, "-z", ones}).code == 0);
  const Run cm = run({"charmap", "-b", bundle, "-q", R"([{"coeff":"1","exp":[1]}])"});
  REQUIRE(cm.code == 0);
  CHECK(io::Json::parse(cm.out)["values"]["s1"] ==
        io::Json::parse(R"([{"coeff":"1","exp":[-1]}])"));

  const Run table = run({"report", "-b", bundle, "-z", ones, "-d", "4"});
  REQUIRE(table.code == 0);
  const auto row = io::Json::parse(table.out)["rows"][0];
  CHECK(row["exact"] == 4);
  CHECK(row["paper_stated"] == -1);
  CHECK(row["sign_flipped"] == 0);
}

TEST_CASE("usage and schema errors") {
  TempDir dir;
  CHECK(run({}).code == 3);
  CHECK(run({"bruhat", "--type", "A", "--rank", "2", "--bogus"}).code == 3);
  CHECK(run({"bruhat", "--type", "E", "--rank", "6"}).code == 3);
  CHECK(run({"bruhat", "--type", "A", "--rank", "2", "--parabolic", "3"}).code == 3);
  CHECK(run({"validate", "-k", "graph", "-i", dir.file("missing.json")}).code == 3);
  CHECK(run({"validate", "-k", "graph", "-i", dir.write("junk.json", "{not json")}).code == 3);
  CHECK(run({"validate", "-k", "graph", "-i", dir.write("norank.json", R"({"vertices":[]})")})
            .code == 3);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("pushforward") != std::string::npos);

  const std::string cyclic = dir.write(
      "cyclic.json",
      R"({"rank":1,"vertices":["a","b"],"covers":[["a","b"],["b","a"]],"edges":[]})");
  const Run v = run({"validate", "-k", "graph", "-i", cyclic});
  CHECK(v.code == 1);
  CHECK(io::Json::parse(v.out)["violations"][0]["rule"] == "MG1");
}

TEST_CASE("output is byte-identical across runs") {
  TempDir dir;
  const std::vector<std::string> emit{"bruhat", "-t", "B", "-r", "2", "-p", "2", "-e", "bundle"};
  const Run first = run(emit);
  CHECK(first.out == run(emit).out);
  const std::string bundle = dir.write("b2.json", first.out);
  const std::vector<std::string> report{"report", "-b", bundle, "-d", "2", "-n", "3", "--seed", "5"};
  CHECK(run(report).out == run(report).out);

  const std::string out = dir.file("out.json");
  CHECK(run({"bruhat", "-t", "B", "-r", "2", "-p", "2", "-e", "bundle", "-o", out}).code == 0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == first.out);
}

TEST_CASE("JSON round trips") {
  const RootSystem rs = build_root_system(CartanMatrix::of_type("B", 2));
  const FiberBundle b = weyl_fibration(rs, Parabolic(rs, {1}));
  const FiberBundle back = io::bundle_from_json(io::to_json(b));
  CHECK(io::to_json(back) == io::to_json(b));
  CHECK(back.total().ids() == b.total().ids());
  CHECK(back.base_class() == b.base_class());

  const MultElement z = characteristic_map(
      LaurentPolynomial::monomial(LatticeVector{1, -2}, 3), b.xi(), b.total_ptr());
  CHECK(io::mult_from_json(io::to_json(z), b.total_ptr()) == z);

  Polynomial p(2);
  p.add_term(LatticeVector{1, 2}, mpq_class(-3, 4));
  p.add_term(LatticeVector{0, 0}, 5);
  CHECK(io::polynomial_from_json(io::to_json(p), 2) == p);
  CHECK(io::to_json(p)[1]["coeff"] == "-3/4");
  CHECK(io::polynomial_from_json(io::Json::parse(R"([{"coeff":"6/8","exp":[1,0]}])"), 2)
            .coeff(LatticeVector{1, 0}) == mpq_class(3, 4));
  CHECK_THROWS_AS(io::polynomial_from_json(io::Json::parse(R"([{"coeff":"1/0","exp":[1,0]}])"), 2),
                  SchemaError);
  CHECK_THROWS_AS(io::laurent_from_json(io::Json::parse(R"([{"coeff":"x","exp":[1,0]}])"), 2),
                  SchemaError);
}
