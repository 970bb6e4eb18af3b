// Copyright 2026 The cl1lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <httplib.h>


#include "cl1/http.hpp"

namespace cl1 {
namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

// Parses the request body; an empty body is an empty object.
bool read_body(const httplib::Request& req, httplib::Response& res, Json& out) {
  if (req.body.empty()) {
    out = Json::object();
    return true;
  }
  out = Json::parse(req.body, nullptr, false);
  if (out.is_discarded()) {
    reply(res, {400, {{"error", "request body is not valid JSON"}}});
    return false;
  }
  return true;
}

}  // namespace

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService(SessionManager& manager) : impl_(std::make_unique<Impl>()) {
  httplib::Server& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/session", [&](const httplib::Request& req, httplib::Response& res) {
    Json body;
    if (read_body(req, res, body)) reply(res, manager.create(body));
  });
  server.Get(R"(/session/([A-Za-z0-9]+))", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, manager.get(req.matches[1]));
  });
  server.Delete(R"(/session/([A-Za-z0-9]+))", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, manager.remove(req.matches[1]));
  });
  server.Post(R"(/session/([A-Za-z0-9]+)/move)", [&](const httplib::Request& req, httplib::Response& res) {
    Json body;
    if (read_body(req, res, body)) reply(res, manager.move(req.matches[1], body));
  });
  server.Post(R"(/session/([A-Za-z0-9]+)/stop)", [&](const httplib::Request& req, httplib::Response& res) {
    reply(res, manager.stop(req.matches[1]));
  });
  server.Post(R"(/session/([A-Za-z0-9]+)/itp)", [&](const httplib::Request& req, httplib::Response& res) {
    Json body;
    if (read_body(req, res, body)) reply(res, manager.set_interpretation(req.matches[1], body));
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::run() { return impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

}  // namespace cl1
