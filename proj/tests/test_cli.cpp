#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = BOHRLAB_CLI_PATH;

int run(const std::string& args) {
  std::string cmd = kCli + " " + args + " >/dev/null 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("constants command reproduces the catalog and exits 0") {
  CHECK(run("constants") == 0);
  CHECK(run("constants --id alpha") == 0);
  CHECK(run("constants --id lambda_A2 --format csv") == 0);
  CHECK(run("constants --id not-a-constant") == 2);
}

TEST_CASE("constants output is byte-identical across runs") {
  CHECK(run("constants --out cli_c1.json") == 0);
  CHECK(run("constants --out cli_c2.json") == 0);
  std::string a = slurp("cli_c1.json"), b = slurp("cli_c2.json");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.find("\"schema_version\": 1") != std::string::npos);
  CHECK(a.find("\"command\": \"constants\"") != std::string::npos);
  std::remove("cli_c1.json");
  std::remove("cli_c2.json");
}

TEST_CASE("verify command: serial and parallel runs write identical reports") {
  CHECK(run("verify --functional classical --grid 60x60 --serial --out cli_v1.json") == 0);
  CHECK(run("verify --functional classical --grid 60x60 --threads 2 --out cli_v2.json") == 0);
  CHECK(slurp("cli_v1.json") == slurp("cli_v2.json"));
  std::remove("cli_v1.json");
  std::remove("cli_v2.json");
}

TEST_CASE("verify command validates its flags") {
  CHECK(run("verify --functional nope") == 2);
  CHECK(run("verify --functional a1 --grid banana") == 2);
  CHECK(run("verify") == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("harmonic verify honors the k list") {
  CHECK(run("verify --functional harm-j --grid 40x40 --k 0,0.5,1") == 0);
}

TEST_CASE("probe command exit codes distinguish found/not-found violations") {
  CHECK(run("probe --functional a1 --lambda-scale 1.01") == 0);
  CHECK(run("probe --functional classical --radius-excess 0") == 1);
  CHECK(run("probe --functional a1") == 2);
  CHECK(run("probe --functional classical --lambda-scale 1.01") == 2);
}

TEST_CASE("envelope command") {
  CHECK(run("envelope --lemma l32 --family blaschke --samples 40 --grid 10x10") == 0);
  CHECK(run("envelope --lemma l51 --grid 20x10") == 0);
  CHECK(run("envelope --lemma l99") == 2);
}

TEST_CASE("sweep command writes one monotone curve per invocation") {
  CHECK(run("sweep --radius r_u --k 0,0.25,0.5,0.75,1 --out cli_sweep.csv") == 0);
  std::string csv = slurp("cli_sweep.csv");
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "param,value");
  double prev = 1.0;
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    double value = std::stod(line.substr(comma + 1));
    CHECK(value < prev);
    prev = value;
    ++rows;
  }
  CHECK(rows == 5);
  std::remove("cli_sweep.csv");
}

TEST_CASE("sweep harm_j over K reproduces the closed form") {
  CHECK(run("sweep --radius harm_j --K 1,2,5,100 --out cli_sweep_k.csv") == 0);
  std::string csv = slurp("cli_sweep_k.csv");
  CHECK(csv.find("0.20000000000000001") != std::string::npos);  // K=1, 17 digits
  CHECK(csv.find("0.14366998577524892") != std::string::npos);  // K=100
  std::remove("cli_sweep_k.csv");
}

TEST_CASE("sweep with an empty range exits 2") {
  CHECK(run("sweep --radius r_u") == 2);
}

TEST_CASE("sweep output is byte-identical across runs") {
  CHECK(run("sweep --radius r1 --k 0,0.1,0.9 --out cli_s1.csv") == 0);
  CHECK(run("sweep --radius r1 --k 0,0.1,0.9 --out cli_s2.csv") == 0);
  CHECK(slurp("cli_s1.csv") == slurp("cli_s2.csv"));
  std::remove("cli_s1.csv");
  std::remove("cli_s2.csv");
}

TEST_CASE("report documents carry the versioned schema fields") {
  CHECK(run("verify --functional a2 --grid 30x30 --out cli_schema.json") == 0);
  std::string doc = slurp("cli_schema.json");
  for (const char* key : {"\"schema_version\": 1", "\"command\": \"verify\"", "\"config_echo\"",
                          "\"results\"", "\"pass\"", "\"worst_margin\"", "\"argmax\"",
                          "\"radius_provenance\"", "\"flagged\""})
    CHECK(doc.find(key) != std::string::npos);
  std::remove("cli_schema.json");
}

TEST_CASE("BOHRLAB_THREADS caps the worker count without changing reports") {
  CHECK(run("verify --functional refined --grid 50x50 --serial --out cli_t1.json") == 0);
  int status = std::system((std::string("BOHRLAB_THREADS=1 ") + kCli +
                            " verify --functional refined --grid 50x50 --threads 8 --out cli_t2.json"
                            " >/dev/null 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(slurp("cli_t1.json") == slurp("cli_t2.json"));
  std::remove("cli_t1.json");
  std::remove("cli_t2.json");
}

TEST_CASE("unwritable output paths exit 2") {
  CHECK(run("constants --out /no/such/dir/x.json") == 2);
  CHECK(run("sweep --radius r1 --k 0.5 --out /no/such/dir/x.csv") == 2);
}

TEST_CASE("family mismatches are configuration errors") {
  CHECK(run("verify --functional harm-i1 --family moebius --grid 10x10") == 2);
  CHECK(run("verify --functional classical --family harmonic-extremal --grid 10x10") == 2);
}
