#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using multitwist::cli::run;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) a = std::string(DATA_DIR) + "/" + a.substr(1);
  }
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check theta against t111") {
    const auto r = call({"check", "@theta.sg", "--twist", "@t111.mt"});
    CHECK(r.code == 1);
    CHECK(r.out ==
          "not a member\n"
          "violated necklace C sum 1\n"
          "violated necklace D sum 1\n"
          "violated necklace E sum 1\n");
    const auto s = call({"check", "@theta.sg", "--twist", "@t111.mt", "--format", "structured"});
    CHECK(s.code == 1);
    const auto doc = json::parse(s.out);
    CHECK(doc["schema"] == multitwist::cli::kSchema);
    CHECK(doc["member"] == false);
    CHECK(doc["violations"].size() == 3);

    CHECK(call({"check", "@theta.sg", "--twist", "@t2mm.mt"}).code == 1);
  }

  TEST_CASE("rank, genus and necklaces") {
    CHECK(call({"rank", "@pants_cycle_g5.sg"}).out.rfind("rank 7\n", 0) == 0);
    CHECK(call({"genus", "@loop1.sg"}).out == "1\n");
    const auto n = call({"necklaces", "@pants_cycle_g5.sg"});
    CHECK(n.code == 0);
    CHECK(n.out ==
          "necklace n01 n02 n03 n04\n"
          "separating s01 s02 s03 s04\n"
          "count 1\n");
  }

  TEST_CASE("text and structured reports carry the same facts") {
    const auto text = call({"bounds", "@torus_cycle_g4.sg"});
    const auto doc = json::parse(call({"bounds", "@torus_cycle_g4.sg", "--format", "structured"}).out);
    for (const char* key : {"genus", "rank", "generic", "refined", "multitwist"}) {
      CHECK(text.out.find(std::string(key) + " " + doc[key].dump() + "\n") != std::string::npos);
    }
    CHECK(doc["exit_code"] == text.code);

    const auto paths = call({"paths", "@tetra.sg", "--from", "P01", "--to", "P02", "-k", "3"});
    const auto pdoc = json::parse(
        call({"paths", "@tetra.sg", "--from", "P01", "--to", "P02", "-k", "3", "--format", "structured"}).out);
    std::size_t lines = 0;
    for (char c : paths.out) lines += c == '\n';
    CHECK(lines == pdoc["paths"].size());
  }

  TEST_CASE("other verbs") {
    CHECK(call({"validate", "@theta.sg"}).out == "valid\n");
    CHECK(call({"invariants", "@torus_cycle_g4.sg"}).out.find("total_defect 3\n") != std::string::npos);
    CHECK(call({"abelian-bound", "@torus_cycle_g4.sg", "--mark", "T01", "--mark", "T02", "--mark", "T03"}).out ==
          "bound 5\n");
    CHECK(call({"two-circles", "@theta.sg", "--edge", "C"}).out == "a +C -D\nb +C -E\n");
    const auto none = call({"paths", "@sep_tree_g4.sg", "--from", "T01", "--to", "T02"});
    CHECK(none.code == 1);
    CHECK(none.out == "none\n");
    CHECK(call({"bp", "@torus_cycle_g4.sg"}).out == "necklace n01 n02 n03 bp\n");
    const auto e = call({"enumerate", "--genus", "2", "--max-edges", "1"});
    CHECK(e.out.find("# count 2\n") != std::string::npos);
    const auto v = call({"verify", "--genus", "2", "--format", "structured"});
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["all_passed"] == true);
  }

  TEST_CASE("normalize writes a system") {
    const auto graph = temp_file("chain.sg",
                                 "mode general\nvertex A 1\nvertex B 1\nvertex M 0\n"
                                 "edge C A M\nedge Cp M B\n");
    const auto twist = temp_file("chain.mt", "twist C 2\ntwist Cp -2\n");
    const auto out = std::string(TEST_TMP_DIR) + "/chain_out.mt";
    const auto r = call({"normalize", graph, "--twist", twist, "--twist-out", out});
    CHECK(r.code == 0);
    CHECK(r.out == "mode system\nvertex A 1\nvertex B 1\nedge C A B\n");
    std::ifstream in(out);
    std::stringstream written;
    written << in.rdbuf();
    CHECK(written.str().empty());
  }

  TEST_CASE("input errors exit 2 and cite the location") {
    const auto bad = temp_file("bad.sg", "vertex A 1\nvertex B 1\nedge X A Z\n");
    auto r = call({"genus", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3: unknown vertex 'Z'") != std::string::npos);

    const auto twist = temp_file("bad.mt", "twist C 1\ntwist Q 2\n");
    r = call({"check", "@theta.sg", "--twist", twist});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2: unknown edge 'Q'") != std::string::npos);

    CHECK(call({"genus", "/nonexistent.sg"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"two-circles", "@theta.sg", "--edge", "Z"}).err == "error: unknown edge 'Z'\n");
    CHECK(call({"enumerate", "--genus", "1"}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }
}
