#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the gpd binary with `args`; stderr is folded into out when `merge`.
Run gpd(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(GPD_BINARY) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(GPD_DATA) + "/" + name; }

}  // namespace

TEST_CASE("pd of the three-bar barcode") {
  const auto r = gpd("pd " + data("three_bars.txt"));
  CHECK(r.code == 0);
  CHECK(r.out == "2 8 1\n4 12 1\n6 10 1\n");
}

TEST_CASE("pd reads stdin and map chains") {
  const auto r = gpd("pd - < " + data("three_bars.txt"));
  CHECK(r.out == "2 8 1\n4 12 1\n6 10 1\n");
  const auto chain = gpd("pd " + data("chain.txt"));
  CHECK(chain.code == 0);
  CHECK(chain.out == "0 2 1\n1 3 1\n");
}

TEST_CASE("empty and malformed input") {
  const auto empty = gpd("pd " + data("empty.txt"));
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  const auto bad = gpd("pd " + data("malformed.txt"), true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("line 3") != std::string::npos);
  CHECK(gpd("pd " + data("missing.txt")).code == 2);
  CHECK(gpd("frobnicate").code == 1);
  CHECK(gpd("").code == 1);
}

TEST_CASE("graded diagrams") {
  const auto k1 = gpd("gpd " + data("three_bars.txt") + " --k 1");
  CHECK(k1.out == "# k = 1\n2 8 1\n4 8 -1\n4 12 1\n");
  const auto k3 = gpd("gpd " + data("three_bars.txt") + " --k 3");
  CHECK(k3.out == "# k = 3\n6 8 1\n");
  const auto all = gpd("gpd " + data("three_bars.txt"));
  CHECK(all.out ==
        "# k = 1\n2 8 1\n4 8 -1\n4 12 1\n\n"
        "# k = 2\n4 8 1\n6 8 -1\n6 10 1\n\n"
        "# k = 3\n6 8 1\n");
}

TEST_CASE("sum of graded levels is byte-identical to pd") {
  for (const char* file : {"three_bars.txt", "sharp_d.txt", "chain.txt", "empty.txt"}) {
    const auto pd = gpd("pd " + data(file));
    const auto sum = gpd("gpd --sum " + data(file));
    CHECK(pd.code == 0);
    CHECK(sum.out == pd.out);
    const auto pd_json = gpd("pd --format json " + data(file));
    const auto sum_json = gpd("gpd --sum --format json " + data(file));
    CHECK(sum_json.out == pd_json.out);
  }
}

TEST_CASE("landscape critical points") {
  const auto r = gpd("landscape " + data("three_bars.txt") + " --k 2");
  CHECK(r.out == "2 4 0\n2 6 2\n2 7 1\n2 8 2\n2 10 0\n");
  const auto single = gpd("landscape " + data("single_bar.txt"));
  CHECK(single.out == "1 2 0\n1 5 3\n1 8 0\n");
  const auto scaled = gpd("landscape " + data("single_bar.txt") + " --grid " + data("half_grid.txt"));
  CHECK(scaled.out == "1 1 0\n1 2.5 1.5\n1 4 0\n");
  CHECK(gpd("landscape " + data("empty.txt")).out.empty());
  const auto j = nlohmann::json::parse(gpd("landscape --format json " + data("three_bars.txt")).out);
  CHECK(j["levels"].size() == 3);
}

TEST_CASE("landscape plot data") {
  const std::string plot = (std::filesystem::temp_directory_path() / "gpd_cli_plot_test.txt").string();
  const auto r = gpd("landscape " + data("single_bar.txt") + " --plot " + plot + " --samples 7");
  CHECK(r.code == 0);
  FILE* f = std::fopen(plot.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), f)) text.append(buf.data(), n);
  std::fclose(f);
  std::remove(plot.c_str());
  CHECK(text == "1 2 0\n1 3 1\n1 4 2\n1 5 3\n1 6 2\n1 7 1\n1 8 0\n");
}

TEST_CASE("inf deaths are an output option only") {
  const auto r = gpd("pd --inf-death " + data("three_bars.txt"));
  CHECK(r.out == "2 8 1\n4 inf 1\n6 10 1\n");
}

TEST_CASE("distances") {
  const auto plain = gpd("dist " + data("sharp_d.txt") + " " + data("sharp_e.txt"));
  CHECK(plain.out == "W 1\n");
  const auto graded = gpd("dist --graded " + data("sharp_d.txt") + " " + data("sharp_e.txt"));
  CHECK(graded.out == "W_1 2\nW_2 2\nW_3 1\nsum 5\nW 1\n");
  CHECK(gpd("dist " + data("sharp_d.txt") + " " + data("sharp_d.txt")).out == "W 0\n");
  const auto witness = gpd("dist --witness " + data("sharp_d.txt") + " " + data("sharp_e.txt"));
  CHECK(witness.out.find("pair 3 9 -> 4 9 1") != std::string::npos);
  const auto warn = gpd("dist --graded --p 2 " + data("sharp_d.txt") + " " + data("sharp_e.txt"), true);
  CHECK(warn.code == 0);
  CHECK(warn.out.find("not a metric") != std::string::npos);
  const auto bottleneck = gpd("dist --p inf --q inf " + data("single_bar.txt") + " " + data("empty.txt"));
  CHECK(bottleneck.out == "W 3\n");
  CHECK(gpd("dist --p 0.5 " + data("sharp_d.txt") + " " + data("sharp_e.txt")).code == 2);
}

TEST_CASE("verify suites") {
  const auto sharp = gpd("verify stability --sharp-K 3");
  CHECK(sharp.code == 0);
  const auto report = nlohmann::json::parse(sharp.out);
  CHECK(report["passed"] == true);
  const auto& levels = report["instance"]["levels"];
  REQUIRE(levels.size() == 3);
  CHECK(levels[0]["ratio"] == 2);
  CHECK(levels[1]["ratio"] == 2);
  CHECK(levels[2]["ratio"] == 1);
  CHECK(report["instance"]["upper_bound_sharp"] == true);
  CHECK(report["instance"]["lower_bound_holds"] == true);
  CHECK(report["instance"]["upper_bound_holds"] == true);

  const auto tri = gpd("verify triangle --eps 0.5 --p 2 --q 2");
  CHECK(tri.code == 0);
  CHECK(nlohmann::json::parse(tri.out)["cases"][0]["triangle_violated"] == true);
  // eps = 1 at p = q = 2 is an equality, so the suite reports failure.
  CHECK(gpd("verify triangle --eps 1 --p 2 --q 2").code == 3);

  const auto cons = gpd("verify consistency --seed 7 --count 100");
  CHECK(cons.code == 0);
  CHECK(nlohmann::json::parse(cons.out)["passed"] == true);
  CHECK(gpd("verify geodesic --seed 3 --count 10").code == 0);
  CHECK(gpd("verify stability --count 20").code == 0);
  CHECK(gpd("verify nonsense").code == 1);
}

TEST_CASE("outputs are deterministic") {
  const std::string args = "gpd --format json " + data("three_bars.txt");
  CHECK(gpd(args).out == gpd(args).out);
  CHECK(gpd("verify consistency --seed 9 --count 20").out == gpd("verify consistency --seed 9 --count 20").out);
}
