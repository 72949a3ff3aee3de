// Scripted end-to-end checks of the command-line tool. The binary path is
// injected by the build as CLI_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef CLI_BIN
#error "CLI_BIN must point at the holoflow binary"
#endif

namespace fs = std::filesystem;

namespace {

const char* kReferenceDoc = R"({
  "ambient_dim": 3,
  "frame": [[[1,0],[0,0]],[[0,0],[1,0]],[[0,0],[0,0]]],
  "g0": [[[0,1],[0,0]],[[0,0],[-1,0]]],
  "omega": [[[0.70710678118654752,0],[-0.70710678118654752,0]],
            [[0.70710678118654752,0],[0.70710678118654752,0]]],
  "winding": 1
})";

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "holoflow_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_doc(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  std::string cmd = std::string(CLI_BIN) + " " + args + " > /dev/null 2>> " +
                    (scratch_dir() / "stderr.log").string();
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

struct CsvRow {
  double t, dist, idem, herm, trace;
};

std::vector<CsvRow> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  REQUIRE(std::getline(in, line));
  REQUIRE(line == "t,dist_to_start,idempotency_drift,hermiticity_drift,trace");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    CsvRow r{};
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r.t, &r.dist,
                        &r.idem, &r.herm, &r.trace) == 5);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("synth succeeds on the reference document") {
  fs::path in = write_doc("ref.json", kReferenceDoc);
  fs::path out = scratch_dir() / "ref_result.json";
  CHECK(run("synth " + in.string() + " --output " + out.string()) == 0);

  std::string result = read_file(out);
  CHECK(result.find("\"H\"") != std::string::npos);
  CHECK(result.find("\"nontrivial\": true") != std::string::npos);

  // determinism: a second run produces identical bytes
  fs::path out2 = scratch_dir() / "ref_result2.json";
  CHECK(run("synth " + in.string() + " --output " + out2.string()) == 0);
  CHECK(read_file(out2) == result);
}

TEST_CASE("synth with zero winding reports a trivial trajectory") {
  std::string doc = kReferenceDoc;
  doc.replace(doc.find("\"winding\": 1"), 12, "\"winding\": 0");
  fs::path in = write_doc("trivial.json", doc);
  CHECK(run("synth " + in.string() + " --output " +
            (scratch_dir() / "trivial.json.out").string()) == 2);
}

TEST_CASE("synth rejects a non-unitary omega with a field-specific error") {
  std::string doc = R"({
    "frame": [[[1,0],[0,0]],[[0,0],[1,0]],[[0,0],[0,0]]],
    "g0": [[[0,1],[0,0]],[[0,0],[-1,0]]],
    "omega": [[[2,0],[0,0]],[[0,0],[1,0]]],
    "winding": 1
  })";
  fs::path in = write_doc("bad_omega.json", doc);
  fs::path err = scratch_dir() / "bad_omega.err";
  std::string cmd = std::string(CLI_BIN) + " synth " + in.string() +
                    " > /dev/null 2> " + err.string();
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 1);
  std::string msg = read_file(err);
  CHECK(msg.find("omega") != std::string::npos);
  CHECK(msg.find("not unitary") != std::string::npos);
}

TEST_CASE("verify accepts the synthesized generator and rejects H=0") {
  fs::path in = write_doc("ref_v.json", kReferenceDoc);
  fs::path synth_out = scratch_dir() / "ref_v_result.json";
  REQUIRE(run("synth " + in.string() + " --output " + synth_out.string()) == 0);

  // splice the synthesized H into a verify document
  std::string result = read_file(synth_out);
  std::size_t h_pos = result.find("\"H\": ");
  std::size_t h_end = result.find("],\n  \"U\"");
  REQUIRE(h_pos != std::string::npos);
  REQUIRE(h_end != std::string::npos);
  std::string h_field = result.substr(h_pos, h_end + 1 - h_pos);
  std::string base(kReferenceDoc);
  std::string verify_doc =
      "{\n  " + h_field + ",\n" + base.substr(base.find("  \"frame\""));
  fs::path vin = write_doc("verify_good.json", verify_doc);
  CHECK(run("verify " + vin.string() + " --output " +
            (scratch_dir() / "verify_good.out").string()) == 0);

  std::string zero_doc =
      "{\n  \"H\": [[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]],\n" +
      base.substr(base.find("  \"frame\""));
  fs::path zin = write_doc("verify_zero.json", zero_doc);
  CHECK(run("verify " + zin.string()) == 1);
}

TEST_CASE("verify reports the skew defect of a non-skew H") {
  std::string base(kReferenceDoc);
  std::string doc =
      "{\n  \"H\": [[[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]],\n" +
      base.substr(base.find("  \"frame\""));
  fs::path in = write_doc("verify_nonskew.json", doc);
  fs::path out = scratch_dir() / "verify_nonskew.out";
  CHECK(run("verify " + in.string() + " --output " + out.string()) == 1);
  std::string text = read_file(out);
  // ||H + H^dag||_F = sqrt(2) for a single real off-diagonal 1
  CHECK(text.find("\"skew_residual\": 1.41421") != std::string::npos);
}

TEST_CASE("simulate exact flow of the reference instance") {
  fs::path in = write_doc("ref_sim.json", kReferenceDoc);
  fs::path csv = scratch_dir() / "ref_sim.csv";
  CHECK(run("simulate " + in.string() + " --exact --steps 100 --output " +
            csv.string()) == 0);
  std::vector<CsvRow> rows = read_csv(csv);
  REQUIRE(rows.size() == 101);
  CHECK(rows.front().dist == 0.0);
  CHECK(rows.back().dist <= 1e-9);
  bool interior_far = false;
  for (const CsvRow& r : rows)
    if (r.dist > 0.5) interior_far = true;
  CHECK(interior_far);
  for (const CsvRow& r : rows) CHECK(std::abs(r.trace - 2.0) <= 1e-9);
}

TEST_CASE("simulate a zero-winding instance stays at the start") {
  std::string doc = kReferenceDoc;
  doc.replace(doc.find("\"winding\": 1"), 12, "\"winding\": 0");
  fs::path in = write_doc("sim_trivial.json", doc);
  fs::path csv = scratch_dir() / "sim_trivial.csv";
  CHECK(run("simulate " + in.string() + " --exact --steps 50 --output " +
            csv.string()) == 0);
  for (const CsvRow& r : read_csv(csv)) CHECK(r.dist <= 1e-12);
}

TEST_CASE("simulate with rk4 closes within tolerance") {
  fs::path in = write_doc("ref_rk4.json", kReferenceDoc);
  fs::path csv = scratch_dir() / "ref_rk4.csv";
  CHECK(run("simulate " + in.string() + " --rk4 --steps 200 --output " +
            csv.string()) == 0);
  std::vector<CsvRow> rows = read_csv(csv);
  REQUIRE(rows.size() == 201);
  CHECK(rows.back().dist <= 1e-6);
}

TEST_CASE("expm command runs both routes on a skew input") {
  std::string doc = R"({"matrix":
    [[[0,6.283185307179586],[0,-3.141592653589793]],
     [[0,-3.141592653589793],[0,6.283185307179586]]]})";
  fs::path in = write_doc("expm_omega.json", doc);
  fs::path out = scratch_dir() / "expm_omega.out";
  CHECK(run("expm " + in.string() + " --output " + out.string()) == 0);
  std::string text = read_file(out);
  CHECK(text.find("expm_spectral") != std::string::npos);
  CHECK(text.find("disagreement") != std::string::npos);

  std::string zero = R"({"matrix": [[[0,0],[0,0]],[[0,0],[0,0]]]})";
  fs::path zin = write_doc("expm_zero.json", zero);
  fs::path zout = scratch_dir() / "expm_zero.out";
  CHECK(run("expm " + zin.string() + " --output " + zout.string()) == 0);
  CHECK(read_file(zout).find("\"disagreement\": 0.0") != std::string::npos);
}

TEST_CASE("missing files and fields exit with status 1") {
  CHECK(run("synth /nonexistent/input.json") == 1);
  fs::path in = write_doc("no_h.json", kReferenceDoc);
  CHECK(run("verify " + in.string()) == 1);
  CHECK(run("simulate " + in.string() + " --exact --rk4") == 1);
}
