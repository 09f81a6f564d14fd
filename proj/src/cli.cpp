#include "phishnet/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phishnet/classifier.hpp"
#include "phishnet/data_io.hpp"
#include "phishnet/errors.hpp"
#include "phishnet/extraction_config.hpp"

namespace phishnet::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Carries the name of the input that failed so every non-zero exit names it.
[[noreturn]] void rethrow_with(const std::string& input) {
  try {
    throw;
  } catch (const ShapeError& e) {
    throw ShapeError(input + ": " + e.what());
  } catch (const RangeError& e) {
    throw RangeError(input + ": " + e.what());
  } catch (const VersionError& e) {
    throw VersionError(input + ": " + e.what());
  } catch (const ModelShapeError& e) {
    throw ModelShapeError(input + ": " + e.what());
  } catch (const ModelLoadError& e) {
    throw CorruptFileError(input + ": " + e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(input + ": " + e.what());
  }
}

ExtractionConfig config_from(const std::string& path) {
  std::string p = path;
  if (p.empty()) {
    if (const char* env = std::getenv("PHISHNET_CONFIG"); env != nullptr) p = env;
  }
  if (p.empty()) return ExtractionConfig::defaults();
  try {
    return load_extraction_config(p);
  } catch (...) {
    rethrow_with("config '" + p + "'");
  }
}

Timestamp now_or(const std::string& text) {
  if (text.empty()) return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const auto ts = parse_timestamp(text);
  if (!ts) throw UsageError("--now '" + text + "' is not an ISO-8601 timestamp");
  return *ts;
}

std::vector<nn::Index> parse_layers(const std::string& text) {
  std::vector<nn::Index> sizes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--layers '" + text + "': '" + part + "' is not a positive integer");
    }
  }
  if (sizes.size() < 2) {
    throw UsageError("--layers '" + text + "' needs at least an input and an output size, e.g. 27,10,1");
  }
  return sizes;
}

void report_rows(std::ostream& err, const std::string& input, const std::vector<RowError>& errors) {
  for (const auto& e : errors) err << "warning: " << input << ": row " << e.row << ": " << e.message << "\n";
}

struct Options {
  std::string input;
  std::string archive;
  std::string label;
  std::string config;
  std::string out;
  std::string features;
  std::string layers = "27,10,1";
  double lr = 0.5;
  int epochs = 1000;
  double mse_stop = 0.0;
  std::uint64_t seed = 0;
  bool no_shuffle = false;
  std::string model;
  std::string url;
  std::string page;
  std::string lure;
  bool fetch = false;
  std::string report;
  double max_age_days = kNoMaxAge;
  std::string now;
};

int cmd_import_phishtank(const Options& o, std::ostream& out, std::ostream& err) {
  ParseResult<WebsiteRecord> parsed;
  try {
    parsed = parse_phishtank_csv(read_file(o.input));
  } catch (...) {
    rethrow_with("'" + o.input + "'");
  }
  report_rows(err, o.input, parsed.errors);
  try {
    ArchiveStore(o.archive).append(parsed.items);
  } catch (...) {
    rethrow_with("archive '" + o.archive + "'");
  }
  out << "imported=" << parsed.items.size() << " skipped=" << parsed.errors.size() << "\n";
  return kOk;
}

int cmd_import_urls(const Options& o, std::ostream& out, std::ostream& err) {
  const Label label = *parse_label(o.label);
  const Timestamp now = now_or(o.now);
  ParseResult<WebsiteRecord> parsed;
  try {
    parsed = parse_url_list(read_file(o.input), label, now);
  } catch (...) {
    rethrow_with("'" + o.input + "'");
  }
  report_rows(err, o.input, parsed.errors);
  try {
    ArchiveStore(o.archive).append(parsed.items);
  } catch (...) {
    rethrow_with("archive '" + o.archive + "'");
  }
  out << "imported=" << parsed.items.size() << " skipped=" << parsed.errors.size() << "\n";
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out, std::ostream& err) {
  const ExtractionConfig cfg = config_from(o.config);
  std::vector<WebsiteRecord> records;
  try {
    records = ArchiveStore(o.archive).read_all();
  } catch (...) {
    rethrow_with("archive '" + o.archive + "'");
  }
  if (o.max_age_days != kNoMaxAge) {
    if (!(o.max_age_days > 0.0)) throw UsageError("--max-age-days must be > 0");
    records = filter_stale(records, now_or(o.now), o.max_age_days);
  }
  const auto exported = export_feature_matrix(records, cfg);
  report_rows(err, o.archive, exported.errors);
  try {
    write_file(o.out, exported.csv);
  } catch (...) {
    rethrow_with("'" + o.out + "'");
  }
  out << "rows=" << records.size() - exported.errors.size() << " skipped=" << exported.errors.size() << "\n";
  return kOk;
}

int cmd_train(const Options& o, std::ostream& out, std::ostream&) {
  const auto sizes = parse_layers(o.layers);
  std::vector<nn::Example> data;
  try {
    data = parse_feature_matrix(read_file(o.features));
  } catch (...) {
    rethrow_with("'" + o.features + "'");
  }
  if (data.empty()) throw FormatError("'" + o.features + "': feature matrix has no rows");
  if (sizes.front() != static_cast<nn::Index>(kIndicatorCount) || sizes.back() != 1) {
    throw ShapeError("--layers '" + o.layers + "': feature matrix needs " + std::to_string(kIndicatorCount) +
                     " inputs and 1 output");
  }
  nn::TrainConfig tc;
  tc.learning_rate = o.lr;
  tc.max_epochs = o.epochs;
  tc.mse_stop = o.mse_stop;
  tc.shuffle = !o.no_shuffle;
  tc.seed = o.seed;
  auto result = nn::train(nn::init_network(sizes, o.seed), data, tc);
  try {
    save_model(result.network, BandThresholds{}, o.out);
  } catch (...) {
    rethrow_with("'" + o.out + "'");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(result.mse_history.back()));
  out << "epochs=" << result.mse_history.size() << " mse=" << buf << " model=" << o.out << "\n";
  return kOk;
}

SavedModel model_from(const std::string& path) {
  try {
    return load_model(path);
  } catch (const IoError&) {
    rethrow_with("model '" + path + "'");
  } catch (...) {
    rethrow_with("model '" + path + "'");
  }
}

int cmd_predict(const Options& o, std::ostream& out, std::ostream&) {
  const ExtractionConfig cfg = config_from(o.config);
  const SavedModel model = model_from(o.model);
  WebsiteRecord rec;
  if (o.fetch) {
    try {
      rec = fetch_record(o.url);
    } catch (...) {
      rethrow_with("url '" + o.url + "'");
    }
  } else {
    rec.url = o.url;
    rec.observed_at = now_or(o.now);
  }
  try {
    if (!o.page.empty()) rec.page_source = read_file(o.page);
    if (!o.lure.empty()) rec.lure_text = read_file(o.lure);
  } catch (...) {
    rethrow_with("page/lure input");
  }
  PhishVerdict verdict;
  try {
    verdict = classify(rec, model.network, cfg, model.bands);
  } catch (const ShapeError&) {
    rethrow_with("model '" + o.model + "'");
  } catch (...) {
    rethrow_with("url '" + o.url + "'");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", verdict.score);
  out << "score=" << buf << " band=" << to_string(verdict.band) << "\n";
  return kOk;
}

int cmd_evaluate(const Options& o, std::ostream& out, std::ostream&) {
  const SavedModel model = model_from(o.model);
  std::vector<nn::Example> data;
  try {
    data = parse_feature_matrix(read_file(o.features));
  } catch (...) {
    rethrow_with("'" + o.features + "'");
  }
  if (data.empty()) throw FormatError("'" + o.features + "': feature matrix has no rows");
  EvalReport report;
  try {
    report = evaluate(model.network, data, model.bands);
  } catch (...) {
    rethrow_with("model '" + o.model + "'");
  }
  out << render_text(report);
  if (!o.report.empty()) {
    try {
      write_file(o.report, render_json(report));
    } catch (...) {
      rethrow_with("'" + o.report + "'");
    }
  }
  return kOk;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phishing website feature extraction, training and classification", "phishnet"};
  app.require_subcommand(1);
  Options o;

  auto* imp = app.add_subcommand("import-phishtank", "Append a PhishTank CSV export to an archive");
  imp->add_option("csv", o.input, "PhishTank CSV export")->required();
  imp->add_option("--archive", o.archive, "Archive file (JSON lines)")->required();

  auto* urls = app.add_subcommand("import-urls", "Append a plain URL list to an archive");
  urls->add_option("file", o.input, "One URL per line")->required();
  urls->add_option("--label", o.label, "legit or phish")->required()->check(CLI::IsMember({"legit", "phish"}));
  urls->add_option("--archive", o.archive, "Archive file (JSON lines)")->required();
  urls->add_option("--now", o.now, "Ingestion time (ISO-8601), default: current time");

  auto* ext = app.add_subcommand("extract", "Write the feature matrix for an archive");
  ext->add_option("--archive", o.archive, "Archive file")->required();
  ext->add_option("--config", o.config, "Extraction config (JSON)");
  ext->add_option("--out", o.out, "Feature matrix CSV")->required();
  ext->add_option("--max-age-days", o.max_age_days, "Drop records older than this many days");
  ext->add_option("--now", o.now, "Reference time for --max-age-days (ISO-8601)");

  auto* trn = app.add_subcommand("train", "Train a network on a feature matrix");
  trn->add_option("--features", o.features, "Feature matrix CSV")->required();
  trn->add_option("--layers", o.layers, "Comma-separated layer sizes")->capture_default_str();
  trn->add_option("--lr", o.lr, "Learning rate")->check(CLI::PositiveNumber)->capture_default_str();
  trn->add_option("--epochs", o.epochs, "Maximum epochs")->check(CLI::PositiveNumber)->capture_default_str();
  trn->add_option("--mse-stop", o.mse_stop, "Stop once epoch MSE is at or below this")
      ->check(CLI::NonNegativeNumber);
  trn->add_option("--seed", o.seed, "Seed for initialization and shuffling")->capture_default_str();
  trn->add_flag("--no-shuffle", o.no_shuffle, "Visit examples in file order every epoch");
  trn->add_option("--out", o.out, "Model file")->required();

  auto* pred = app.add_subcommand("predict", "Score one site");
  pred->add_option("--model", o.model, "Model file")->required();
  pred->add_option("--url", o.url, "Site URL")->required();
  pred->add_option("--page", o.page, "Saved HTML of the page");
  pred->add_option("--lure", o.lure, "Text of the message that linked to the site");
  pred->add_option("--config", o.config, "Extraction config (JSON)");
  pred->add_flag("--fetch", o.fetch, "Download the page and certificate details first");

  auto* ev = app.add_subcommand("evaluate", "Evaluate a model on a feature matrix");
  ev->add_option("--model", o.model, "Model file")->required();
  ev->add_option("--features", o.features, "Feature matrix CSV")->required();
  ev->add_option("--report", o.report, "Also write a JSON report here");

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  if (cargv.empty()) cargv.push_back("phishnet");

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {kOk};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {kOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return {kUsage};
  }

  try {
    if (imp->parsed()) return {cmd_import_phishtank(o, out, err)};
    if (urls->parsed()) return {cmd_import_urls(o, out, err)};
    if (ext->parsed()) return {cmd_extract(o, out, err)};
    if (trn->parsed()) return {cmd_train(o, out, err)};
    if (pred->parsed()) return {cmd_predict(o, out, err)};
    if (ev->parsed()) return {cmd_evaluate(o, out, err)};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return {kUsage};
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return {kModelError};
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return {kModelError};
  } catch (const ModelLoadError& e) {
    err << "error: " << e.what() << "\n";
    return {kModelError};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return {kDataError};
  }
  err << app.help();
  return {kUsage};
}

}  // namespace phishnet::cli
