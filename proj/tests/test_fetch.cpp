#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <thread>

#include "phishnet/data_io.hpp"
#include "phishnet/errors.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <openssl/evp.h>
#include <openssl/pem.h>
#include <openssl/x509.h>

using namespace phishnet;

namespace {

// Runs a server on an ephemeral loopback port for the lifetime of the object.
template <typename Server>
class Running {
 public:
  explicit Running(std::unique_ptr<Server> server) : server_(std::move(server)) {
    port_ = server_->bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
  }
  ~Running() {
    server_->stop();
    thread_.join();
  }
  int port() const { return port_; }
  Server& server() { return *server_; }

 private:
  std::unique_ptr<Server> server_;
  std::thread thread_;
  int port_ = 0;
};

void install_routes(httplib::Server& s) {
  s.Get("/start", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/page"); });
  s.Get("/page", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Set-Cookie", "sid=1; Path=/");
    res.set_content("<html><title>Fixture</title><body>hello</body></html>", "text/html");
  });
}

// Writes a fresh self-signed certificate and key for "localhost".
void make_self_signed(const std::string& cert_path, const std::string& key_path) {
  EVP_PKEY* key = EVP_RSA_gen(2048);
  REQUIRE(key);
  X509* x = X509_new();
  ASN1_INTEGER_set(X509_get_serialNumber(x), 1);
  X509_gmtime_adj(X509_getm_notBefore(x), 0);
  X509_gmtime_adj(X509_getm_notAfter(x), 3600);
  X509_set_pubkey(x, key);
  X509_NAME* name = X509_get_subject_name(x);
  X509_NAME_add_entry_by_txt(name, "O", MBSTRING_ASC, reinterpret_cast<const unsigned char*>("Fixture Org"), -1, -1, 0);
  X509_NAME_add_entry_by_txt(name, "CN", MBSTRING_ASC, reinterpret_cast<const unsigned char*>("localhost"), -1, -1, 0);
  X509_set_issuer_name(x, name);
  REQUIRE(X509_sign(x, key, EVP_sha256()) > 0);
  FILE* f = std::fopen(cert_path.c_str(), "wb");
  REQUIRE(f);
  PEM_write_X509(f, x);
  std::fclose(f);
  f = std::fopen(key_path.c_str(), "wb");
  REQUIRE(f);
  PEM_write_PrivateKey(f, key, nullptr, nullptr, 0, nullptr, nullptr);
  std::fclose(f);
  X509_free(x);
  EVP_PKEY_free(key);
}

}  // namespace

TEST_CASE("fetch from a local server") {
  Running<httplib::Server> srv(std::make_unique<httplib::Server>());
  install_routes(srv.server());
  const std::string base = "http://127.0.0.1:" + std::to_string(srv.port());

  const auto rec = fetch_record(base + "/start", std::chrono::seconds(5));
  CHECK(rec.url == base + "/start");
  REQUIRE(rec.page_source);
  CHECK(rec.page_source->find("<title>Fixture</title>") != std::string::npos);
  REQUIRE(rec.redirect_chain);
  CHECK(rec.redirect_chain->size() == 2);
  CHECK(rec.redirect_chain->back() == base + "/page");
  REQUIRE(rec.response_headers);
  bool cookie = false;
  for (const auto& [k, v] : *rec.response_headers) cookie |= k == "Set-Cookie" && v == "sid=1; Path=/";
  CHECK(cookie);
  CHECK_FALSE(rec.cert_evidence);
  CHECK_NOTHROW(validate(rec));
}

TEST_CASE("unreachable host") {
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }  // closed again: nothing listens there now
  CHECK_THROWS_AS(fetch_record("http://127.0.0.1:" + std::to_string(port) + "/", std::chrono::seconds(2)), FetchError);
  CHECK_THROWS_AS(fetch_record("not a url"), FetchError);
}

TEST_CASE("self-signed https server") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string cert = (dir / "phishnet_fetch_cert.pem").string();
  const std::string key = (dir / "phishnet_fetch_key.pem").string();
  make_self_signed(cert, key);

  Running<httplib::SSLServer> srv(std::make_unique<httplib::SSLServer>(cert.c_str(), key.c_str()));
  REQUIRE(srv.server().is_valid());
  install_routes(srv.server());

  const auto rec = fetch_record("https://localhost:" + std::to_string(srv.port()) + "/page", std::chrono::seconds(5));
  REQUIRE(rec.page_source);
  REQUIRE(rec.cert_evidence);
  CHECK(rec.cert_evidence->self_signed);
  CHECK_FALSE(rec.cert_evidence->valid);
  CHECK(rec.cert_evidence->subject_common_name == "localhost");
  CHECK(rec.cert_evidence->issuer == "Fixture Org");
}
