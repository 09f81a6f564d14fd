#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phishnet/data_io.hpp"
#include "phishnet/url.hpp"

namespace phishnet {

namespace {

using json = nlohmann::ordered_json;

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

std::string record_to_json_line(const WebsiteRecord& r) {
  json j;
  j["url"] = r.url;
  if (r.page_source) j["page_source"] = *r.page_source;
  if (r.response_headers) {
    json headers = json::array();
    for (const auto& [k, v] : *r.response_headers) headers.push_back(json::array({k, v}));
    j["response_headers"] = std::move(headers);
  }
  if (r.redirect_chain) j["redirect_chain"] = *r.redirect_chain;
  if (r.cert_evidence) {
    j["cert_evidence"] = {{"issuer", r.cert_evidence->issuer},
                          {"subject_common_name", r.cert_evidence->subject_common_name},
                          {"valid", r.cert_evidence->valid},
                          {"self_signed", r.cert_evidence->self_signed}};
  }
  if (r.dns_evidence) {
    json dns = {{"resolvable", r.dns_evidence->resolvable}};
    if (r.dns_evidence->domain_age_days) dns["domain_age_days"] = *r.dns_evidence->domain_age_days;
    j["dns_evidence"] = std::move(dns);
  }
  if (r.lure_text) j["lure_text"] = *r.lure_text;
  j["observed_at"] = format_timestamp(r.observed_at);
  if (r.label) j["label"] = std::string(to_string(*r.label));
  // Invalid UTF-8 in scraped pages is replaced with U+FFFD rather than failing the append.
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

WebsiteRecord record_from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("archive line is not a JSON object");
  WebsiteRecord r;
  try {
    r.url = field<std::string>(j, "url");
    if (j.contains("page_source")) r.page_source = j.at("page_source").get<std::string>();
    if (j.contains("response_headers")) {
      std::vector<Header> headers;
      for (const auto& h : j.at("response_headers")) {
        if (!h.is_array() || h.size() != 2) throw FormatError("response_headers entries must be [name, value]");
        headers.emplace_back(h[0].get<std::string>(), h[1].get<std::string>());
      }
      r.response_headers = std::move(headers);
    }
    if (j.contains("redirect_chain")) r.redirect_chain = j.at("redirect_chain").get<std::vector<std::string>>();
    if (j.contains("cert_evidence")) {
      const auto& c = j.at("cert_evidence");
      r.cert_evidence = CertEvidence{field<std::string>(c, "issuer"), field<std::string>(c, "subject_common_name"),
                                     field<bool>(c, "valid"), field<bool>(c, "self_signed")};
    }
    if (j.contains("dns_evidence")) {
      const auto& d = j.at("dns_evidence");
      DnsEvidence dns;
      dns.resolvable = field<bool>(d, "resolvable");
      if (d.contains("domain_age_days")) dns.domain_age_days = d.at("domain_age_days").get<double>();
      r.dns_evidence = dns;
    }
    if (j.contains("lure_text")) r.lure_text = j.at("lure_text").get<std::string>();
    const auto ts_text = field<std::string>(j, "observed_at");
    const auto ts = parse_timestamp(ts_text);
    if (!ts) throw FormatError("unparseable observed_at '" + ts_text + "'");
    r.observed_at = *ts;
    if (j.contains("label")) {
      const auto l = parse_label(j.at("label").get<std::string>());
      if (!l) throw FormatError("label must be 'phish' or 'legit'");
      r.label = *l;
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad field type: ") + e.what());
  }
  try {
    validate(r);
  } catch (const ConfigError& e) {
    throw FormatError(e.what());
  }
  return r;
}

ArchiveStore::ArchiveStore(std::string path) : path_(std::move(path)) {}

void ArchiveStore::append(const WebsiteRecord& record) const { append(std::vector<WebsiteRecord>{record}); }

void ArchiveStore::append(const std::vector<WebsiteRecord>& records) const {
  std::string buf;
  for (const auto& r : records) {
    buf += record_to_json_line(r);
    buf += '\n';
  }
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open archive '" + path_ + "' for append");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("failed appending to archive '" + path_ + "'");
}

std::vector<WebsiteRecord> ArchiveStore::read_all() const {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return {};
  std::vector<WebsiteRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(record_from_json_line(line));
    } catch (const FormatError& e) {
      throw FormatError("archive '" + path_ + "' line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::optional<WebsiteRecord> ArchiveStore::find(std::string_view url) const {
  std::optional<WebsiteRecord> found;
  for (auto& r : read_all()) {
    if (r.url == url) found = std::move(r);
  }
  return found;
}

}  // namespace phishnet
