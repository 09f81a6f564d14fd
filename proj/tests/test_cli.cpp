#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "phishnet/classifier.hpp"
#include "phishnet/cli.hpp"
#include "phishnet/data_io.hpp"

using namespace phishnet;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "phishnet");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err).exit_code;
  return {code, out.str(), err.str()};
}

const std::string kFixtures = PHISHNET_FIXTURE_DIR;

fs::path workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "phishnet_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

std::string zero_model() {
  const auto p = path("zero.json");
  save_model(nn::Network::zeros({27, 10, 1}), {}, p);
  return p;
}

}  // namespace

TEST_CASE("predict on an all-zero model") {
  const auto r = run({"predict", "--model", zero_model(), "--url", "http://203.0.113.7/@sbi-login"});
  CHECK(r.code == 0);
  CHECK(r.out == "score=0.500000 band=Suspicious\n");
  const auto again = run({"predict", "--model", zero_model(), "--url", "http://203.0.113.7/@sbi-login"});
  CHECK(again.out == r.out);

  const auto with_page = run({"predict", "--model", zero_model(), "--url", "http://203.0.113.7/@sbi-login", "--page",
                              kFixtures + "/sbi_login.html", "--config", kFixtures + "/config.json"});
  CHECK(with_page.code == 0);
  CHECK(with_page.out == "score=0.500000 band=Suspicious\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"predict", "--url", "http://a.example/"}).code == 1);
  CHECK(run({"predict", "--model", zero_model(), "--url", "http://a.example/", "--bogus"}).code == 1);
  CHECK(run({"import-urls", kFixtures + "/legit_urls.txt", "--label", "maybe", "--archive", path("a.jsonl")}).code == 1);

  const auto layers = run({"train", "--features", path("none.csv"), "--layers", "27", "--out", path("m.json")});
  CHECK(layers.code == 1);
  CHECK(layers.err.find("--layers") != std::string::npos);
  CHECK(run({"train", "--features", path("none.csv"), "--layers", "27,x,1", "--out", path("m.json")}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data and format errors exit 2 and name the input") {
  const auto missing = run({"import-phishtank", path("no_such.csv"), "--archive", path("a.jsonl")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("no_such.csv") != std::string::npos);

  write_file(path("bad_header.csv"), "id,link\n1,http://a.example/\n");
  const auto header = run({"import-phishtank", path("bad_header.csv"), "--archive", path("a.jsonl")});
  CHECK(header.code == 2);
  CHECK(header.err.find("bad_header.csv") != std::string::npos);

  write_file(path("garbage.csv"), "not,a,feature,matrix\n");
  const auto features = run({"train", "--features", path("garbage.csv"), "--out", path("m.json")});
  CHECK(features.code == 2);
  CHECK(features.err.find("garbage.csv") != std::string::npos);

  const auto url = run({"predict", "--model", zero_model(), "--url", "not a url"});
  CHECK(url.code == 2);
  CHECK(url.err.find("not a url") != std::string::npos);

  write_file(path("bad_config.json"), "{\"long_url_address\": [80, 20]}");
  const auto cfg = run({"predict", "--model", zero_model(), "--url", "http://a.example/", "--config",
                        path("bad_config.json")});
  CHECK(cfg.code == 2);
  CHECK(cfg.err.find("bad_config.json") != std::string::npos);
}

TEST_CASE("model and shape errors exit 3") {
  write_file(path("corrupt.json"), "{\"format_version\": 1, \"layer_si");
  const auto corrupt = run({"predict", "--model", path("corrupt.json"), "--url", "http://a.example/"});
  CHECK(corrupt.code == 3);
  CHECK(corrupt.err.find("corrupt.json") != std::string::npos);

  save_model(nn::Network::zeros({5, 1}), {}, path("narrow.json"));
  const auto narrow = run({"predict", "--model", path("narrow.json"), "--url", "http://a.example/"});
  CHECK(narrow.code == 3);
  CHECK(narrow.err.find("narrow.json") != std::string::npos);

  write_file(path("one.csv"), export_feature_matrix({}, ExtractionConfig::defaults()).csv +
                                  "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1\n");
  CHECK(run({"evaluate", "--model", path("narrow.json"), "--features", path("one.csv")}).code == 3);
  CHECK(run({"train", "--features", path("one.csv"), "--layers", "26,1", "--out", path("m.json")}).code == 3);
}

TEST_CASE("PHISHNET_CONFIG supplies the default config") {
  write_file(path("env_bad.json"), "{ not json");
  ::setenv("PHISHNET_CONFIG", path("env_bad.json").c_str(), 1);
  const auto bad = run({"predict", "--model", zero_model(), "--url", "http://a.example/"});
  ::unsetenv("PHISHNET_CONFIG");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("env_bad.json") != std::string::npos);
  CHECK(run({"predict", "--model", zero_model(), "--url", "http://a.example/"}).code == 0);
}

TEST_CASE("pipeline in process") {
  const auto archive = path("pipeline.jsonl");
  fs::remove(archive);
  const auto imp = run({"import-phishtank", kFixtures + "/phishtank_sample.csv", "--archive", archive});
  CHECK(imp.code == 0);
  CHECK(imp.out == "imported=40 skipped=1\n");
  CHECK(imp.err.find("row 42") != std::string::npos);
  const auto urls = run({"import-urls", kFixtures + "/legit_urls.txt", "--label", "legit", "--archive", archive,
                         "--now", "2024-03-10T00:00:00Z"});
  CHECK(urls.code == 0);
  CHECK(urls.out == "imported=40 skipped=0\n");

  const auto ext = run({"extract", "--archive", archive, "--config", kFixtures + "/config.json", "--out",
                        path("features.csv")});
  CHECK(ext.code == 0);
  CHECK(ext.out == "rows=80 skipped=0\n");

  const auto stale = run({"extract", "--archive", archive, "--out", path("fresh.csv"), "--max-age-days", "2.25",
                          "--now", "2024-03-11T00:00:00Z"});
  CHECK(stale.code == 0);
  // 40 legit rows ingested a day earlier plus the 24 phish rows stamped after 2024-03-08T18:00
  CHECK(stale.out == "rows=64 skipped=0\n");

  for (const char* m : {"m1.json", "m2.json"}) {
    const auto t = run({"train", "--features", path("features.csv"), "--layers", "27,10,1", "--lr", "0.5",
                        "--epochs", "200", "--seed", "7", "--out", path(m)});
    CHECK(t.code == 0);
  }
  CHECK(read_file(path("m1.json")) == read_file(path("m2.json")));

  const auto ev = run({"evaluate", "--model", path("m1.json"), "--features", path("features.csv"), "--report",
                       path("report.json")});
  CHECK(ev.code == 0);
  const auto report = evaluate(load_model(path("m1.json")).network, parse_feature_matrix(read_file(path("features.csv"))));
  CHECK(report.accuracy >= 0.95);
  CHECK(ev.out == render_text(report));
  CHECK(read_file(path("report.json")) == render_json(report));
}
