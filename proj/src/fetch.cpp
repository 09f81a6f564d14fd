// Eigen (via data_io.hpp) must precede <resolv.h>, which defines `_res`.
#include "phishnet/data_io.hpp"
#include "phishnet/url.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <fcntl.h>
#include <openssl/err.h>
#include <openssl/ssl.h>
#include <openssl/x509v3.h>

#include <cerrno>
#include <memory>

namespace phishnet {

namespace {

constexpr int kMaxRedirects = 10;

class Socket {
 public:
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  int get() const { return fd_; }

 private:
  int fd_;
};

std::string default_port(const Url& u) {
  if (!u.port.empty()) return u.port;
  return u.scheme == "https" ? "443" : "80";
}

std::string bare_host(const std::string& host) {
  if (host.size() >= 2 && host.front() == '[' && host.back() == ']') return host.substr(1, host.size() - 2);
  return host;
}

// Non-blocking connect bounded by `timeout`; returns -1 on failure.
int connect_with_timeout(const std::string& host, const std::string& port, std::chrono::milliseconds timeout) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (::getaddrinfo(bare_host(host).c_str(), port.c_str(), &hints, &res) != 0) return -1;
  std::unique_ptr<addrinfo, decltype(&::freeaddrinfo)> guard(res, &::freeaddrinfo);
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    const int flags = ::fcntl(fd, F_GETFL, 0);
    ::fcntl(fd, F_SETFL, flags | O_NONBLOCK);
    int rc = ::connect(fd, ai->ai_addr, ai->ai_addrlen);
    if (rc != 0 && errno == EINPROGRESS) {
      pollfd p{fd, POLLOUT, 0};
      rc = ::poll(&p, 1, static_cast<int>(timeout.count())) == 1 ? 0 : -1;
      if (rc == 0) {
        int err = 0;
        socklen_t len = sizeof err;
        ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
        rc = err == 0 ? 0 : -1;
      }
    }
    if (rc == 0) {
      ::fcntl(fd, F_SETFL, flags);
      timeval tv{static_cast<time_t>(timeout.count() / 1000),
                 static_cast<suseconds_t>((timeout.count() % 1000) * 1000)};
      ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
      ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
      return fd;
    }
    ::close(fd);
  }
  return -1;
}

std::string name_entry(X509_NAME* name, int nid) {
  if (name == nullptr) return {};
  char buf[512] = {};
  const int n = X509_NAME_get_text_by_NID(name, nid, buf, sizeof buf);
  return n > 0 ? std::string(buf, static_cast<std::size_t>(n)) : std::string();
}

// Handshake-only probe: records issuer, subject CN, chain verification against
// the system trust store, and whether the leaf signs itself.
std::optional<CertEvidence> probe_certificate(const Url& url, std::chrono::milliseconds timeout) {
  Socket sock(connect_with_timeout(url.host, default_port(url), timeout));
  if (sock.get() < 0) return std::nullopt;

  std::unique_ptr<SSL_CTX, decltype(&SSL_CTX_free)> ctx(SSL_CTX_new(TLS_client_method()), &SSL_CTX_free);
  if (!ctx) return std::nullopt;
  SSL_CTX_set_default_verify_paths(ctx.get());
  SSL_CTX_set_verify(ctx.get(), SSL_VERIFY_NONE, nullptr);
  std::unique_ptr<SSL, decltype(&SSL_free)> ssl(SSL_new(ctx.get()), &SSL_free);
  if (!ssl) return std::nullopt;
  const std::string host = bare_host(url.host);
  if (!is_ip_literal(url.host)) SSL_set_tlsext_host_name(ssl.get(), host.c_str());
  SSL_set_fd(ssl.get(), sock.get());
  if (SSL_connect(ssl.get()) != 1) {
    ERR_clear_error();
    return std::nullopt;
  }
  std::unique_ptr<X509, decltype(&X509_free)> cert(SSL_get1_peer_certificate(ssl.get()), &X509_free);
  if (!cert) return std::nullopt;

  CertEvidence ev;
  ev.issuer = name_entry(X509_get_issuer_name(cert.get()), NID_organizationName);
  if (ev.issuer.empty()) ev.issuer = name_entry(X509_get_issuer_name(cert.get()), NID_commonName);
  ev.subject_common_name = name_entry(X509_get_subject_name(cert.get()), NID_commonName);
  ev.self_signed = X509_check_issued(cert.get(), cert.get()) == X509_V_OK;
  const bool chain_ok = SSL_get_verify_result(ssl.get()) == X509_V_OK;
  const bool host_ok = is_ip_literal(url.host)
                           ? X509_check_ip_asc(cert.get(), host.c_str(), 0) == 1
                           : X509_check_host(cert.get(), host.c_str(), host.size(), 0, nullptr) == 1;
  ev.valid = chain_ok && host_ok && !ev.self_signed;
  SSL_shutdown(ssl.get());
  ERR_clear_error();
  return ev;
}

std::string origin(const Url& u) {
  std::string o = u.scheme + "://" + u.host;
  if (!u.port.empty()) o += ":" + u.port;
  return o;
}

std::string path_and_query(const Url& u) {
  std::string p = u.path.empty() ? "/" : u.path;
  if (!u.query.empty()) p += "?" + u.query;
  return p;
}

std::string resolve_location(const Url& base, const std::string& location) {
  if (parse_url(location)) return location;
  if (location.rfind("//", 0) == 0) return base.scheme + ":" + location;
  if (!location.empty() && location.front() == '/') return origin(base) + location;
  std::string dir = base.path.empty() ? "/" : base.path.substr(0, base.path.rfind('/') + 1);
  return origin(base) + dir + location;
}

}  // namespace

WebsiteRecord fetch_record(const std::string& url, std::chrono::milliseconds timeout) {
  auto parsed = parse_url(url);
  if (!parsed || (parsed->scheme != "http" && parsed->scheme != "https")) {
    throw FetchError("cannot fetch '" + url + "': not an absolute http(s) URL");
  }

  WebsiteRecord rec;
  rec.url = url;
  rec.observed_at = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  std::vector<std::string> chain{url};
  Url current = *parsed;

  for (int hop = 0;; ++hop) {
    httplib::Client client(origin(current));
    client.enable_server_certificate_verification(false);
    client.set_follow_location(false);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());

    auto res = client.Get(path_and_query(current));
    if (!res) {
      throw FetchError("cannot fetch '" + chain.back() + "': " + httplib::to_string(res.error()));
    }
    if (res->status >= 300 && res->status < 400 && res->has_header("Location") && hop < kMaxRedirects) {
      const std::string next = resolve_location(current, res->get_header_value("Location"));
      auto next_url = parse_url(next);
      if (!next_url) break;
      chain.push_back(next);
      current = *next_url;
      continue;
    }
    rec.page_source = res->body;
    std::vector<Header> headers;
    for (const auto& [k, v] : res->headers) headers.emplace_back(k, v);
    rec.response_headers = std::move(headers);
    break;
  }

  rec.redirect_chain = std::move(chain);
  if (current.scheme == "https") rec.cert_evidence = probe_certificate(current, timeout);
  rec.dns_evidence = DnsEvidence{true, std::nullopt};
  return rec;
}

}  // namespace phishnet
