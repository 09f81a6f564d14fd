#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "phishnet/data_io.hpp"
#include "phishnet/url.hpp"

namespace phishnet {

namespace {

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string render_encoded(double v) {
  if (v == 0.0) return "0";
  if (v == 0.5) return "0.5";
  if (v == 1.0) return "1";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<CsvRow> parse_csv(std::string_view content) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1;
  row.line = 1;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t quote_line = 0;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          in_quotes = true;
          quote_line = line;
        } else {
          field += c;  // stray quote inside an unquoted field: keep it
        }
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < content.size() && content[i + 1] == '\n') break;
        ++line;
        end_row();
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) {
    throw FormatError("unterminated quoted field starting on line " + std::to_string(quote_line));
  }
  if (field_started || !row.fields.empty() || !field.empty()) end_row();
  return rows;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ParseResult<WebsiteRecord> parse_phishtank_csv(std::string_view content) {
  if (content.substr(0, 3) == "\xEF\xBB\xBF") content.remove_prefix(3);
  const auto rows = parse_csv(content);
  if (rows.empty()) throw FormatError("PhishTank CSV is empty (missing header row)");

  const auto& header = rows.front().fields;
  auto column = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (to_lower(trim(header[i])) == name) return i;
    }
    throw FormatError("PhishTank CSV is missing required column '" + std::string(name) + "'");
  };
  const std::size_t url_col = column("url");
  const std::size_t time_col = column("submission_time");

  ParseResult<WebsiteRecord> result;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() <= std::max(url_col, time_col)) {
      result.errors.push_back({row.line, "row has " + std::to_string(row.fields.size()) + " fields"});
      continue;
    }
    const std::string url(trim(row.fields[url_col]));
    if (!parse_url(url)) {
      result.errors.push_back({row.line, "malformed URL '" + url + "'"});
      continue;
    }
    const auto ts = parse_timestamp(row.fields[time_col]);
    if (!ts) {
      result.errors.push_back({row.line, "unparseable submission_time '" + row.fields[time_col] + "'"});
      continue;
    }
    WebsiteRecord rec;
    rec.url = url;
    rec.observed_at = *ts;
    rec.label = Label::Phish;
    result.items.push_back(std::move(rec));
  }
  return result;
}

ParseResult<WebsiteRecord> parse_url_list(std::string_view content, Label label, Timestamp ingested_at) {
  ParseResult<WebsiteRecord> result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    const std::string_view line = trim(content.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!parse_url(line)) {
      result.errors.push_back({line_no, "not an absolute URL: '" + std::string(line) + "'"});
      continue;
    }
    WebsiteRecord rec;
    rec.url = std::string(line);
    rec.observed_at = ingested_at;
    rec.label = label;
    result.items.push_back(std::move(rec));
  }
  return result;
}

FeatureMatrixExport export_feature_matrix(const std::vector<WebsiteRecord>& records,
                                          const ExtractionConfig& cfg) {
  FeatureMatrixExport out;
  std::string& csv = out.csv;
  for (const auto& id : all_indicators()) {
    csv += id.name;
    csv += ',';
  }
  csv += "label\n";
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (!rec.label) {
      out.errors.push_back({r + 1, "record '" + rec.url + "' has no label"});
      continue;
    }
    FeatureVector fv;
    try {
      fv = extract_all(rec, cfg);
    } catch (const Error& e) {
      out.errors.push_back({r + 1, "extraction failed for '" + rec.url + "': " + e.what()});
      continue;
    }
    for (double v : fv.encode()) {
      csv += render_encoded(v);
      csv += ',';
    }
    csv += *rec.label == Label::Phish ? "1\n" : "0\n";
  }
  return out;
}

std::vector<nn::Example> parse_feature_matrix(std::string_view content) {
  const auto rows = parse_csv(content);
  if (rows.empty()) throw FormatError("feature matrix is empty (missing header row)");
  const auto& header = rows.front().fields;
  if (header.size() != kIndicatorCount + 1) {
    throw FormatError("feature matrix header has " + std::to_string(header.size()) +
                      " columns, expected " + std::to_string(kIndicatorCount + 1));
  }
  for (std::size_t i = 0; i < kIndicatorCount; ++i) {
    if (trim(header[i]) != all_indicators()[i].name) {
      throw FormatError("feature matrix column " + std::to_string(i + 1) + " is '" + header[i] +
                        "', expected '" + std::string(all_indicators()[i].name) + "'");
    }
  }
  if (trim(header.back()) != "label") throw FormatError("feature matrix last column must be 'label'");

  std::vector<nn::Example> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != kIndicatorCount + 1) {
      throw FormatError("line " + std::to_string(row.line) + ": expected " +
                        std::to_string(kIndicatorCount + 1) + " fields, got " +
                        std::to_string(row.fields.size()));
    }
    nn::Example ex;
    ex.input.resize(static_cast<Eigen::Index>(kIndicatorCount));
    for (std::size_t i = 0; i <= kIndicatorCount; ++i) {
      const auto v = parse_number(row.fields[i]);
      if (!v || *v < 0.0 || *v > 1.0) {
        throw FormatError("line " + std::to_string(row.line) + ", column " + std::to_string(i + 1) +
                          ": '" + row.fields[i] + "' is not a number in [0, 1]");
      }
      if (i < kIndicatorCount) {
        ex.input(static_cast<Eigen::Index>(i)) = *v;
      } else {
        if (*v != 0.0 && *v != 1.0) {
          throw FormatError("line " + std::to_string(row.line) + ": label must be 0 or 1");
        }
        ex.target = nn::Vector<double>::Constant(1, *v);
      }
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace phishnet
