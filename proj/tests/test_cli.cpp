#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"building-forge"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = forge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string group(const std::string& name) {
  const char* dir = std::getenv("FORGE_DATA_DIR");
  return (fs::path(dir ? dir : "data") / "groups" / (name + ".json")).string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("orbits") {
  const auto r = run({"orbits", "--group", group("c3"), "--radius", "3"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("counts") == nlohmann::json::array({1, 1, 2, 4}));
  const auto csv = run({"orbits", "--group", group("s3"), "--radius", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,representative,size\n", 0) == 0);
  const auto md = run({"orbits", "--group", group("s3"), "--radius", "2", "--format", "md"});
  CHECK(md.out.find("| n |") != std::string::npos);
}

TEST_CASE("hecke") {
  const auto r = run({"hecke", "--group", group("s3"), "--radius", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("i,j,k,N\n", 0) == 0);
  const auto c3 = run({"hecke", "--group", group("c3"), "--radius", "3"});
  CHECK(c3.code == 0);
}

TEST_CASE("gelfand on every shipped group") {
  for (const char* g : {"s3", "c3", "trivial3", "s4"}) {
    const auto r = run({"gelfand", "--group", group(g), "--radius", "3"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("consistent").get<bool>());
  }
}

TEST_CASE("find-sr") {
  const auto r = run({"find-sr", "--group", group("c3")});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("translation_length") == doc.at("classify_length"));
  CHECK(run({"find-sr", "--group", group("c3"), "--budget", "0"}).code == 3);
}

TEST_CASE("dynamics") {
  const auto r = run({"dynamics", "--base", "01", "--end", "2/01", "--n-max", "5"});
  CHECK(r.code == 0);
  CHECK(run({"dynamics", "--base", ""}).code == 2);
  CHECK(run({"dynamics", "--base", "01", "--end", "/10"}).code == 2);  // repelling end
  CHECK(run({"dynamics", "--base", "0x"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
  const fs::path bad = fs::temp_directory_path() / "forge-cli-bad-group.json";
  {
    std::ofstream out(bad);
    out << "{\n  \"degree\": 3,\n  \"generators\": [\"1 2 0\",\n}\n";
  }
  const auto r = run({"orbits", "--group", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError at 4:") != std::string::npos);
  CHECK(run({"orbits", "--group", group("missing")}).code == 2);
  CHECK(run({"orbits", "--group", group("s3"), "--format", "xml"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  fs::remove(bad);
}

TEST_CASE("orbit cache through the CLI") {
  const fs::path dir = fs::temp_directory_path() / "forge-cli-cache";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto a = run({"orbits", "--group", group("c3"), "--radius", "3", "--cache", dir.string()});
  REQUIRE(a.code == 0);
  CHECK(nlohmann::json::parse(a.out).at("cache") == "computed");
  REQUIRE(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  const fs::path file = fs::directory_iterator(dir)->path();
  const std::string bytes = slurp(file);

  const auto b = run({"orbits", "--group", group("c3"), "--radius", "3", "--cache", dir.string()});
  CHECK(nlohmann::json::parse(b.out).at("cache") == "hit");
  CHECK(b.out.substr(0, b.out.find("\"cache\"")) == a.out.substr(0, a.out.find("\"cache\"")));

  {
    std::ofstream out(file, std::ios::trunc);
    out << "garbage";
  }
  const auto c = run({"orbits", "--group", group("c3"), "--radius", "3", "--cache", dir.string()});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out).at("cache") == "recomputed");
  CHECK(c.err.find("CacheInvalid") != std::string::npos);
  CHECK(slurp(file) == bytes);
  fs::remove_all(dir);
}
