// Remote completion-endpoint extractor: substitutes the rendered prompt into
// a request template, POSTs it, and pulls the answer text back out of the
// response JSON. Transient failures (transport errors, 429, 5xx) retry with
// exponential backoff.

#include <chrono>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "locdesc/errors.hpp"
#include "locdesc/extraction.hpp"

namespace locdesc {

namespace {

std::size_t count_occurrences(std::string_view haystack, std::string_view needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
  for (std::size_t pos = text.find(from); pos != std::string::npos;
       pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

// "choices.0.text" and "/choices/0/text" both address the same element.
std::string to_json_pointer(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  std::string pointer;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    std::size_t dot = path.find('.', pos);
    std::string part = path.substr(pos, dot == std::string::npos ? dot : dot - pos);
    pointer += "/" + part;
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return pointer;
}

// JSON string escaping without the surrounding quotes, for template holes.
std::string json_escape(const std::string& text) {
  std::string quoted = nlohmann::json(text).dump();
  return quoted.substr(1, quoted.size() - 2);
}

struct SplitUrl {
  std::string base;  // scheme://host[:port]
  std::string path;  // leading slash
};

SplitUrl split_url(const std::string& endpoint) {
  std::size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos) {
    throw RemoteError(RemoteErrorKind::BadConfig, "endpoint must be an http(s) URL: " + endpoint);
  }
  std::size_t slash = endpoint.find('/', scheme + 3);
  if (slash == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, slash), endpoint.substr(slash)};
}

class RemoteExtractor : public Extractor {
 public:
  explicit RemoteExtractor(ExtractorConfig config) : config_(std::move(config)) {
    const char* token = std::getenv(config_.auth_env_var.c_str());
    if (token == nullptr || *token == '\0') {
      throw RemoteError(RemoteErrorKind::AuthMissing,
                        "environment variable " + config_.auth_env_var + " is not set");
    }
    token_ = token;
    url_ = split_url(config_.endpoint);
  }

  std::string name() const override { return "remote"; }

  std::string answer(const AnnotatedMessage&, const std::string& prompt) override {
    char temperature[32];
    std::snprintf(temperature, sizeof temperature, "%g", config_.temperature);
    std::string body = replace_all(config_.request_template, "{{PROMPT}}", json_escape(prompt));
    body = replace_all(std::move(body), "{{TEMPERATURE}}", temperature);

    bool reached_endpoint = false;
    int last_status = 0;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
      if (attempt > 0) {
        auto delay = std::chrono::milliseconds(
            static_cast<long long>(config_.backoff_base_ms) << (attempt - 1));
        std::this_thread::sleep_for(delay);
      }
      httplib::Client client(url_.base);
      client.set_connection_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
      client.set_read_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
      httplib::Headers headers = {{"Authorization", "Bearer " + token_}};
      auto res = client.Post(url_.path, headers, body, "application/json");
      if (!res) continue;  // transport error: retry
      reached_endpoint = true;
      last_status = res->status;
      if (res->status >= 200 && res->status < 300) return extract_text(res->body);
      if (res->status == 429 || res->status >= 500) continue;  // transient: retry
      throw RemoteError(RemoteErrorKind::HttpStatus,
                        "endpoint returned HTTP " + std::to_string(res->status));
    }
    if (!reached_endpoint) {
      throw RemoteError(RemoteErrorKind::EndpointUnreachable,
                        "could not reach " + config_.endpoint);
    }
    throw RemoteError(RemoteErrorKind::RetriesExhausted,
                      "gave up after " + std::to_string(config_.max_retries + 1) +
                          " attempts; last HTTP status " + std::to_string(last_status));
  }

 private:
  std::string extract_text(const std::string& body) const {
    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded()) {
      throw RemoteError(RemoteErrorKind::BadResponseShape, "response is not JSON");
    }
    nlohmann::json::json_pointer pointer(to_json_pointer(config_.response_text_path));
    if (!doc.contains(pointer) || !doc.at(pointer).is_string()) {
      throw RemoteError(RemoteErrorKind::BadResponseShape,
                        "response has no string at " + config_.response_text_path);
    }
    return doc.at(pointer).get<std::string>();
  }

  ExtractorConfig config_;
  std::string token_;
  SplitUrl url_;
};

}  // namespace

ExtractorConfig parse_extractor_config(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw RemoteError(RemoteErrorKind::BadConfig, "extractor config must be a JSON object");
  }
  ExtractorConfig config;
  auto need_string = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw RemoteError(RemoteErrorKind::BadConfig,
                        std::string("config needs string field '") + key + "'");
    }
    return doc[key].get<std::string>();
  };
  config.endpoint = need_string("endpoint");
  config.request_template = need_string("request_template");
  config.response_text_path = need_string("response_text_path");
  if (doc.contains("auth_env_var")) config.auth_env_var = need_string("auth_env_var");
  auto take_int = [&](const char* key, int& slot) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_integer() || doc[key].get<int>() < 0) {
      throw RemoteError(RemoteErrorKind::BadConfig,
                        std::string("config field '") + key + "' must be a non-negative integer");
    }
    slot = doc[key].get<int>();
  };
  take_int("max_retries", config.max_retries);
  take_int("backoff_base_ms", config.backoff_base_ms);
  take_int("max_in_flight", config.max_in_flight);
  take_int("timeout_ms", config.timeout_ms);
  if (doc.contains("temperature")) {
    if (!doc["temperature"].is_number()) {
      throw RemoteError(RemoteErrorKind::BadConfig, "config field 'temperature' must be a number");
    }
    config.temperature = doc["temperature"].get<double>();
  }
  if (count_occurrences(config.request_template, "{{PROMPT}}") != 1) {
    throw RemoteError(RemoteErrorKind::BadConfig,
                      "request_template must contain {{PROMPT}} exactly once");
  }
  if (config.max_in_flight < 1) config.max_in_flight = 1;
  return config;
}

std::unique_ptr<Extractor> make_remote(ExtractorConfig config) {
  return std::make_unique<RemoteExtractor>(std::move(config));
}

}  // namespace locdesc
