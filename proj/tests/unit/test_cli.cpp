#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qharmonics/qsig_io.hpp"
#include "qharmonics_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qharmonics");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qh::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) v.push_back(line);
  return v;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> v;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
  return v;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("qh_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             std::to_string(std::rand()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("usage errors exit 1 and write nothing") {
  TempDir dir;
  CHECK(invoke({}).code == qh::cli::kExitUsage);
  CHECK(invoke({"qft"}).code == qh::cli::kExitUsage);
  CHECK(invoke({"qft", "--fixture", "gaussian"}).code == qh::cli::kExitUsage);
  CHECK(invoke({"nonsense"}).code == qh::cli::kExitUsage);
  const std::string out = dir / "s.qspec";
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"qft", "--fixture", "gaussian", "--in", "x.qsig", "--out", out},
           {"qft", "--fixture", "nope", "--out", out},
           {"qft", "--fixture", "gaussian", "--side", "middle", "--out", out},
           {"qft", "--fixture", "gaussian", "--mu1", "1,1,0", "--out", out},
           {"qft", "--fixture", "gaussian", "--mu2", "1,0,0", "--out", out},
           {"qft", "--fixture", "gaussian", "--window", "0", "--out", out},
           {"qft", "--fixture", "gaussian", "--window", "1,2,3", "--out", out},
           {"qft", "--fixture", "gaussian", "--grid", "1", "--out", out},
           {"qlct", "--fixture", "gaussian", "--a1", "2", "--d1", "2", "--out", out},
           {"qfrft", "--fixture", "gaussian", "--alpha", "0", "--beta", "1", "--out", out},
           {"qfrft", "--fixture", "gaussian", "--alpha", "1", "--out", out},
           {"gauss-mean", "--fixture", "gaussian", "--schedule", "0.1,1"},
           {"jump-demo", "--M", "25,x"},
           {"jump-demo", "--M", "-1"},
           {"lc-diag", "--eps", "0.1"},
           {"lc-diag", "--eps", "0.1,5", "--extent", "4"},
           {"qsig2img", "--in", "a.qsig", "--out", out, "--clamp", "wrap"},
       }) {
    CAPTURE(args.size());
    const Result r = invoke(args);
    CHECK(r.code == qh::cli::kExitUsage);
    CHECK(!r.err.empty());
    CHECK(r.out.empty());
  }
  CHECK(fs::is_empty(dir.path()));
}

TEST_CASE("help exits 0") { CHECK(invoke({"--help"}).code == qh::cli::kExitOk); }

TEST_CASE("roundtrip reports small errors") {
  const Result r = invoke({"roundtrip", "--fixture", "gaussian", "--side", "two", "--grid", "256",
                           "--extent", "10", "--window", "8"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "l1_error,linf_error");
  CHECK(fields(rows[1])[1] < 1e-4);

  const Result lct = invoke({"roundtrip", "--transform", "qlct", "--side", "left", "--grid", "96",
                             "--extent", "7", "--window", "7", "--a1", "1", "--b1", "1", "--c1",
                             "0", "--d1", "1"});
  REQUIRE(lct.code == 0);
  CHECK(fields(lines(lct.out)[1])[1] < 1e-3);
}

TEST_CASE("jump demo sweep") {
  const Result r = invoke({"jump-demo", "--M", "25,50,100"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "M,N,w,x,y,z,abs_error");
  const auto last = fields(rows[3]);
  CHECK(last[0] == 100.0);
  CHECK(last[6] < 0.03);
  CHECK(fields(rows[1])[6] > last[6]);
}

TEST_CASE("file pipeline and determinism") {
  TempDir dir;
  const std::string spec = dir / "g.qspec", back = dir / "g.qsig", spec2 = dir / "g2.qspec";
  const std::vector<std::string> fwd{"qft",    "--fixture", "mixed", "--grid", "64",  "--extent",
                                     "6",      "--window",  "6",     "--side", "left", "--out",
                                     spec};
  REQUIRE(invoke(fwd).code == 0);
  auto fwd2 = fwd;
  fwd2.back() = spec2;
  REQUIRE(invoke(fwd2).code == 0);
  CHECK(qh::read_file(spec) == qh::read_file(spec2));

  REQUIRE(invoke({"iqft", "--in", spec, "--out", back, "--extent", "6"}).code == 0);
  const qh::QSignal2D f = qh::load_qsig(back);
  CHECK(f.grid().ns == 64);
  // (s, t) = (0.09375, 0.09375) is the sample next to the origin.
  CHECK(std::abs(f.at(32, 32).w - std::exp(-2 * 0.09375 * 0.09375)) < 1e-4);

  // Feeding a QFT spectrum to the QLCT inverse is a runtime error.
  const std::string bad = dir / "bad.qsig";
  CHECK(invoke({"iqlct", "--in", spec, "--out", bad}).code == qh::cli::kExitRuntime);
  CHECK(!fs::exists(bad));
  CHECK(invoke({"iqft", "--in", dir / "missing.qspec", "--out", bad}).code ==
        qh::cli::kExitRuntime);

  const std::string lspec = dir / "l.qspec", lback = dir / "l.qsig";
  REQUIRE(invoke({"qlct", "--fixture", "gaussian", "--grid", "64", "--extent", "6", "--window",
                  "6", "--a1", "1", "--b1", "1", "--c1", "0", "--d1", "1", "--out", lspec})
              .code == 0);
  REQUIRE(invoke({"iqlct", "--in", lspec, "--out", lback, "--extent", "6"}).code == 0);
  CHECK(std::abs(qh::load_qsig(lback).at(32, 32).w - std::exp(-2 * 0.09375 * 0.09375)) < 1e-3);

  const std::string fspec = dir / "f.qspec", fback = dir / "f.qsig";
  REQUIRE(invoke({"qfrft", "--fixture", "gaussian", "--grid", "64", "--extent", "6", "--window",
                  "6", "--alpha", "1", "--beta", "1.2", "--phase-corrected", "--out", fspec})
              .code == 0);
  REQUIRE(invoke({"iqlct", "--in", fspec, "--out", fback, "--extent", "6"}).code == 0);
  CHECK(std::abs(qh::load_qsig(fback).at(32, 32).w - std::exp(-2 * 0.09375 * 0.09375)) < 1e-3);
}

TEST_CASE("fixtures, images and reports") {
  TempDir dir;
  const Result r = invoke({"fixtures", "--grid", "16", "--out", dir / "fx"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 6);
  CHECK(fs::exists(dir.path() / "fx" / "indicator.qsig"));

  const std::string ppm = dir / "m.ppm", again = dir / "m2.qsig";
  const Result img = invoke({"qsig2img", "--in", dir / "fx/mixed.qsig", "--out", ppm,
                             "--clamp", "rescale"});
  REQUIRE(img.code == 0);
  CHECK(lines(img.out)[0] == "scalar_min,scalar_max,clipped_channels");
  REQUIRE(invoke({"img2qsig", "--in", ppm, "--out", again}).code == 0);
  CHECK(qh::load_qsig(again).grid().ns == 16);

  const Result var = invoke({"variation", "--fixture", "indicator", "--grid", "32"});
  REQUIRE(var.code == 0);
  CHECK(lines(var.out)[0] == "vitali,line_var_s,line_var_t,is_hardy_bvf,nets_tested");
  CHECK(lines(var.out)[1].rfind("4,", 0) == 0);

  const Result lc = invoke({"lc-diag", "--fixture", "gaussian", "--point", "0,0"});
  REQUIRE(lc.code == 0);
  CHECK(lines(lc.out)[0] == "val1,val2,a,b");

  const Result gm = invoke({"gauss-mean", "--fixture", "gaussian", "--grid", "64"});
  REQUIRE(gm.code == 0);
  const auto gm_rows = lines(gm.out);
  REQUIRE(gm_rows.size() == 4);
  CHECK(fields(gm_rows[1])[1] > fields(gm_rows[3])[1]);
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = QH_CLI_BINARY;
  CHECK(WEXITSTATUS(std::system((bin + " qft > /dev/null 2>&1").c_str())) == 1);
  CHECK(WEXITSTATUS(std::system((bin + " jump-demo --M 5 > /dev/null").c_str())) == 0);
}
