#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "indexlab/cli.hpp"
#include "indexlab/io.hpp"
#include "support/random_models.hpp"

using namespace indexlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "indexlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "indexlab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& content) {
  const auto path = scratch(name);
  std::ofstream(path) << content;
  return path;
}

const std::string kModel =
    R"({"n": 2, "p": 0, "case": "NCG1", "dec": {"blocks": [{"type": "rot", "rho": "(-1+1*sqrt(2))/1"}]}})";

}  // namespace

TEST_CASE("betti output is exact") {
  const auto r = invoke({"betti", "--n", "2", "--qmax", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"b\":[0,1,0,2,0,2]}\n");
  const auto csv = invoke({"betti", "--n", "3", "--qmax", "2", "--csv"});
  CHECK(csv.out == "q,b\n0,0\n1,0\n2,1\n");
}

TEST_CASE("argument errors exit with 2, help with 0") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"betti", "--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"betti"}).code == 2);
  CHECK(invoke({"betti", "--n", "x"}).code == 2);
  CHECK(invoke({"betti", "--n", "1"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"prove", "--n", "3", "--case", "ncg9"}).code == 2);
  CHECK(invoke({"iterate", "--model", "/nonexistent/model.json"}).code == 2);
}

TEST_CASE("iterate emits the index table") {
  const auto path = write("model.json", kModel);
  const auto r = invoke({"iterate", "--model", path.string(), "--mmax", "3"});
  REQUIRE(r.code == 0);
  const auto j = io::json::parse(r.out);
  CHECK(j["case"] == "NCG1");
  CHECK(j["period"] == 1);
  CHECK(j["mean_index"] == "(-2+2*sqrt(2))/1");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2]["i"] == 3);
  CHECK(j["rows"][2]["k0"] == 1);
  const auto csv = invoke({"iterate", "--model", path.string(), "--mmax", "3", "--csv"});
  CHECK(csv.out == "m,i,nu,epsilon,k0\n1,1,0,1,1\n2,1,0,1,1\n3,3,0,1,1\n");
}

TEST_CASE("malformed input names the offending field") {
  const auto path = write("bad.json", R"({"n": 3, "models": [
    {"n": 3, "p": 1, "dec": {"blocks": [{"type": "hyp", "d": "2"}, {"type": "rot", "rho": "1/3"}]}}]})");
  const auto r = invoke({"morse-check", "--models", path.string(), "--horizon", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("models[0].dec.blocks[1]") != std::string::npos);

  const auto syntax = write("syntax.json", "{\"n\": 2,");
  const auto s = invoke({"identity", "--models", syntax.string()});
  CHECK(s.code == 2);
  CHECK(s.err.find("invalid JSON") != std::string::npos);

  const auto mixed = write("mixed.json", std::string("[") + kModel + R"(, {"n": 3, "p": 1, "dec": {"blocks": [{"type": "hyp", "d": 2}, {"type": "hyp", "d": 3}]}}])");
  const auto m = invoke({"identity", "--models", mixed.string()});
  CHECK(m.code == 2);
  CHECK(m.err.find("models[1].n") != std::string::npos);

  const auto wrong_case = write("case.json", R"({"n": 2, "p": 0, "case": "NCG4", "dec": {"blocks": [{"type": "rot", "rho": "sqrt(2)-1"}]}})");
  CHECK(invoke({"iterate", "--model", wrong_case.string()}).code == 2);
}

TEST_CASE("morse-check reports violations with exit 1") {
  const auto empty = write("empty.json", R"({"n": 2, "models": []})");
  const auto r = invoke({"morse-check", "--models", empty.string(), "--horizon", "1"});
  CHECK(r.code == 1);
  const auto j = io::json::parse(r.out);
  CHECK(j["violations"][0]["q"] == 1);
  CHECK(j["violations"][1]["kind"] == "pointwise");

  const auto bare = write("bare.json", "[]");
  CHECK(invoke({"morse-check", "--models", bare.string(), "--horizon", "1"}).code == 2);
  CHECK(invoke({"morse-check", "--models", bare.string(), "--horizon", "1", "--n", "2"}).code == 1);

  const auto one = write("one.json", std::string("[") + kModel + "]");
  const auto ok = invoke({"morse-check", "--models", one.string(), "--horizon", "1"});
  CHECK(ok.code == 0);
  CHECK(io::json::parse(ok.out)["violations"].empty());
  const auto csv = invoke({"morse-check", "--models", one.string(), "--horizon", "1", "--csv"});
  CHECK(csv.out == "q,M,b\n0,0,0\n1,2,1\n");
}

TEST_CASE("identity command") {
  const auto one = write("identity.json", std::string("[") + kModel + "]");
  const auto r = invoke({"identity", "--models", one.string()});
  CHECK(r.code == 1);
  const auto j = io::json::parse(r.out);
  CHECK(j["rhs"] == "(-1+0*sqrt(0))/1");
  CHECK(j["holds"] == false);
}

TEST_CASE("series command") {
  const auto r = invoke({"series", "--n", "2", "--degree", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"coefficients\":[0,1,0,2,0,2,0,2],\"euler_limit\":\"(-1+0*sqrt(0))/1\",\"matches_betti\":true}\n");
}

TEST_CASE("prove writes a certificate that verifies") {
  const auto r = invoke({"prove", "--n", "3"});
  CHECK(r.code == 0);
  const auto cert = io::json::parse(r.out);
  CHECK(cert["n"] == 3);
  CHECK(io::verify_certificate(cert).empty());

  const auto path = scratch("cert.json");
  const auto w = invoke({"prove", "--n", "6", "--case", "ncg1", "--json", path.string()});
  CHECK(w.code == 0);
  CHECK(io::json::parse(w.out)["traces"] == 1);
  CHECK(invoke({"verify-cert", "--certificate", path.string()}).code == 0);

  auto tampered = io::load_file(path.string());
  auto& claims = tampered["traces"][0]["steps"].back()["claims"];
  for (auto& c : claims) {
    if (c["type"] == "compare") c["holds"] = !c["holds"].get<bool>();
  }
  const auto bad = write("tampered.json", tampered.dump());
  const auto v = invoke({"verify-cert", "--certificate", bad.string()});
  CHECK(v.code == 1);
  CHECK_FALSE(io::json::parse(v.out)["valid"].get<bool>());
}

TEST_CASE("output is byte-identical across runs") {
  CHECK(invoke({"prove", "--n", "8"}).out == invoke({"prove", "--n", "8"}).out);
  const auto path = write("det.json", kModel);
  CHECK(invoke({"iterate", "--model", path.string(), "--mmax", "40"}).out ==
        invoke({"iterate", "--model", path.string(), "--mmax", "40"}).out);
}

TEST_CASE("models round-trip through JSON") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const auto g = testsupport::random_model(rng);
    const auto j = io::to_json(g);
    CHECK(io::model_from_json(io::json::parse(j.dump()), "model") == g);
  }
}

TEST_CASE("certificates round-trip through JSON") {
  for (int n : {2, 5, 12}) {
    const auto traces = replay(n);
    const auto cert = io::certificate(n, traces);
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const auto back = io::trace_from_json(cert["traces"][i], "t");
      CHECK(io::to_json(back) == cert["traces"][i]);
    }
  }
}
