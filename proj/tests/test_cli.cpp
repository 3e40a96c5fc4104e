#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wasp/cli.hpp"
#include "wasp/io.hpp"

using namespace wasp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(std::filesystem::temp_directory_path() / "wasp_cli_test") {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~Workspace() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST_CASE("dist") {
  Workspace ws;
  const auto a = ws.write("a.json", R"({"dimension":2,"atoms":[[0,0]],"weights":[1]})");
  const auto b = ws.write("b.json", R"({"dimension":2,"atoms":[[3,4]],"weights":[1]})");
  const auto c = ws.write("c.json", R"({"dimension":1,"atoms":[[0],[1]],"weights":[0.5,0.5]})");
  const auto d = ws.write("d.json", R"({"dimension":1,"atoms":[[2],[3]],"weights":[0.5,0.5]})");
  CHECK(run({"dist", a, b}).out == "5.0\n");
  CHECK(run({"dist", a, a}).out == "0.0\n");
  CHECK(run({"dist", c, d}).out == "2.0\n");
  CHECK(run({"--p", "3", "dist", c, d}).out == "2.0\n");
  CHECK(run({"dist", c, d, "--coupling"}).out == "2.0\n0 0 0.5\n1 1 0.5\n");
}

TEST_CASE("exit codes for bad input") {
  Workspace ws;
  const auto a = ws.write("a.json", R"({"dimension":2,"atoms":[[0,0]],"weights":[1]})");
  const auto bad = ws.write("bad.json", "{");
  CHECK(run({"dist", a, bad}).code == cli::kInputError);
  CHECK(run({"dist", a, ws.path("missing.json")}).code == cli::kInputError);
  CHECK(run({"nosuchcommand"}).code == cli::kInputError);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kInputError);
  CHECK(run({"--p", "0.5", "dist", a, a}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("couple and geodesic-section") {
  Workspace ws;
  const auto c = ws.write("c.json", R"({"dimension":1,"atoms":[[0],[1]],"weights":[0.5,0.5]})");
  const auto d = ws.write("d.json", R"({"dimension":1,"atoms":[[2],[3]],"weights":[0.5,0.5]})");
  const auto r = run({"couple", c, d});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("entries":[[0,0,0.5],[1,1,0.5]])") != std::string::npos);

  CHECK(run({"geodesic-section", c, d, "-t", "1", "-o", ws.path("mid.json")}).code == 0);
  CHECK(io::read_measure(ws.path("mid.json")) == DiscreteMeasure::uniform({Point{1.0}, Point{2.0}}));
}

TEST_CASE("ray-new, ray-validate, busemann and coray") {
  Workspace ws;
  CHECK(run({"ray-new", "dirac", "--origin", "0,0", "--velocity", "1,0", "-o", ws.path("ray.json")}).code == 0);
  CHECK(io::read_ray(ws.path("ray.json")) == make_dirac_ray(Point{0.0, 0.0}, Point{1.0, 0.0}, 2.0));

  const auto m = ws.write("m.json", R"({"dimension":2,"atoms":[[0,0],[1,0]],"weights":[0.5,0.5]})");
  CHECK(run({"ray-new", "translation", "--measure", m, "--velocity", "0,1", "-o", ws.path("tr.json")}).code == 0);
  CHECK(io::read_ray(ws.path("tr.json")).speed == 1.0);
  auto r = run({"ray-validate", ws.path("tr.json"), "--pair", "2,7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ray: valid") != std::string::npos);

  const auto crossing = ws.write(
      "x.json",
      R"({"dimension":1,"p":2,"rays":[{"origin":[0],"velocity":[1],"weight":0.5},{"origin":[10],"velocity":[-1],"weight":0.5}]})");
  CHECK(run({"ray-validate", crossing}).code == cli::kCheckFailed);

  const auto on_ray = ws.write("s1.json", R"({"dimension":2,"atoms":[[1,0]],"weights":[1]})");
  r = run({"busemann", ws.path("ray.json"), on_ray, "--csv", ws.path("b.csv")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("value -1.0\n", 0) == 0);
  CHECK(ws.read("b.csv").rfind("t,value\n1.0,-1.0\n2.0,-1.0\n", 0) == 0);

  const auto off = ws.write("n.json", R"({"dimension":2,"atoms":[[0,1]],"weights":[1]})");
  r = run({"busemann", ws.path("ray.json"), off});
  CHECK(r.code == 0);
  const double value = std::stod(r.out.substr(6, r.out.find('\n') - 6));
  CHECK(value >= 0.0);  // sqrt(t^2 + 1) - t decreases to 0
  CHECK(value <= 1e-5);
  r = run({"busemann", ws.path("ray.json"), off, "--max-doublings", "2"});
  CHECK(r.code == cli::kNotConverged);

  const auto far = ws.write("far.json", R"({"dimension":2,"atoms":[[2,5]],"weights":[1]})");
  r = run({"busemann", ws.path("ray.json"), far, "--csv", ws.path("far.csv")});
  CHECK(r.code == 0);
  std::istringstream rows(ws.read("far.csv"));
  std::string line;
  std::getline(rows, line);
  double previous = 1e300;
  while (std::getline(rows, line)) {
    const double value = std::stod(line.substr(line.find(',') + 1));
    CHECK(value <= previous);
    previous = value;
  }
  CHECK(std::abs(previous + 2.0) <= 1e-4);

  r = run({"coray", ws.path("ray.json"), off, "-o", ws.path("co.json"), "--csv", ws.path("co.csv")});
  CHECK(r.code == 0);
  const auto co = io::read_ray(ws.path("co.json"));
  CHECK(co.rays[0].origin == Point{0.0, 1.0});
  CHECK(std::abs(co.rays[0].velocity[0] - 1.0) <= 1e-6);
  CHECK(run({"coray", ws.path("ray.json"), off, "--last-power", "4"}).code == cli::kNotConverged);
  CHECK(run({"coray", ws.path("ray.json"), off, "--schedule", "4,2"}).code == cli::kInputError);
}

TEST_CASE("verify is reproducible") {
  Workspace ws;
  const auto a = run({"--seed", "1", "verify", "--suite", "ot"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"verify", "--suite", "ot", "--seed", "1"}).out);
  CHECK(run({"verify", "--suite", "busemann"}).code == 0);
  CHECK(run({"verify", "--suite", "coray", "--report", ws.path("r.txt")}).code == 0);
  CHECK(ws.read("r.txt").find("FAIL") == std::string::npos);
}
