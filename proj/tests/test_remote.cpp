#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "locdesc/errors.hpp"
#include "locdesc/extraction.hpp"

using namespace locdesc;

namespace {

constexpr const char* kTokenVar = "LOCDESC_TEST_TOKEN";

// One throwaway HTTP server per test, bound to a free localhost port.
struct TestServer {
  httplib::Server server;
  int port = 0;
  std::thread thread;

  TestServer() {
    ::setenv(kTokenVar, "sekrit-token", 1);
    port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  ~TestServer() {
    server.stop();
    thread.join();
  }

  std::string endpoint(const std::string& path = "/v1/completions") const {
    return "http://127.0.0.1:" + std::to_string(port) + path;
  }
};

ExtractorConfig base_config(const TestServer& ts) {
  ExtractorConfig config;
  config.endpoint = ts.endpoint();
  config.request_template =
      R"({"model":"test","prompt":"{{PROMPT}}","temperature":{{TEMPERATURE}}})";
  config.response_text_path = "/choices/0/text";
  config.auth_env_var = kTokenVar;
  config.max_retries = 3;
  config.backoff_base_ms = 1;
  config.timeout_ms = 5000;
  return config;
}

AnnotatedMessage dummy_message() { return make_message("m", {"hello"}, {}); }

RemoteErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const RemoteError& err) {
    return err.kind();
  }
  FAIL("expected RemoteError");
  return RemoteErrorKind::BadConfig;  // unreachable
}

}  // namespace

TEST_CASE("remote extractor substitutes the template and reads the answer back") {
  TestServer ts;
  std::mutex mu;
  std::string seen_body;
  std::string seen_auth;
  std::string seen_content_type;
  ts.server.Post("/v1/completions",
                 [&](const httplib::Request& req, httplib::Response& res) {
                   std::lock_guard<std::mutex> lock(mu);
                   seen_body = req.body;
                   seen_auth = req.get_header_value("Authorization");
                   seen_content_type = req.get_header_value("Content-Type");
                   res.set_content(R"({"choices":[{"text":"C9: Katy; C2: Main St"}]})",
                                   "application/json");
                 });

  ExtractorConfig config = base_config(ts);
  config.temperature = 0.5;
  auto extractor = make_remote(config);
  CHECK(extractor->name() == "remote");

  std::string prompt = "Sentence: line one\nQ: \"quoted\"?\nA:";
  CHECK(extractor->answer(dummy_message(), prompt) == "C9: Katy; C2: Main St");

  std::lock_guard<std::mutex> lock(mu);
  CHECK(seen_auth == "Bearer sekrit-token");
  CHECK(seen_content_type == "application/json");

  // The body is valid JSON and the prompt survives the escaping round trip.
  nlohmann::json body = nlohmann::json::parse(seen_body);
  CHECK(body["model"] == "test");
  CHECK(body["prompt"] == prompt);
  CHECK(body["temperature"] == 0.5);
}

TEST_CASE("dotted response paths address the same element as JSON pointers") {
  TestServer ts;
  ts.server.Post("/v1/completions", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"choices":[{"text":"the answer"}]})", "application/json");
  });
  ExtractorConfig config = base_config(ts);
  config.response_text_path = "choices.0.text";
  auto extractor = make_remote(config);
  CHECK(extractor->answer(dummy_message(), "p") == "the answer");
}

TEST_CASE("transient statuses retry until the endpoint recovers") {
  TestServer ts;
  std::atomic<int> calls{0};
  ts.server.Post("/v1/completions", [&](const httplib::Request&, httplib::Response& res) {
    int n = ++calls;
    if (n <= 2) {
      res.status = n == 1 ? 429 : 503;
      res.set_content("busy", "text/plain");
      return;
    }
    res.set_content(R"({"choices":[{"text":"recovered"}]})", "application/json");
  });
  auto extractor = make_remote(base_config(ts));
  CHECK(extractor->answer(dummy_message(), "p") == "recovered");
  CHECK(calls.load() == 3);
}

TEST_CASE("persistent transient failures exhaust the retry budget") {
  TestServer ts;
  std::atomic<int> calls{0};
  ts.server.Post("/v1/completions", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 500;
  });
  ExtractorConfig config = base_config(ts);
  config.max_retries = 2;
  auto extractor = make_remote(config);
  CHECK(kind_of([&] { extractor->answer(dummy_message(), "p"); }) ==
        RemoteErrorKind::RetriesExhausted);
  CHECK(calls.load() == 3);  // first attempt plus two retries
}

TEST_CASE("non-transient HTTP statuses fail immediately") {
  TestServer ts;
  std::atomic<int> calls{0};
  ts.server.Post("/v1/completions", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.status = 404;
  });
  auto extractor = make_remote(base_config(ts));
  CHECK(kind_of([&] { extractor->answer(dummy_message(), "p"); }) == RemoteErrorKind::HttpStatus);
  CHECK(calls.load() == 1);
}

TEST_CASE("unusable response bodies are reported as shape errors") {
  TestServer ts;
  std::mutex mu;
  std::string body = R"({"choices":[]})";
  ts.server.Post("/v1/completions", [&](const httplib::Request&, httplib::Response& res) {
    std::lock_guard<std::mutex> lock(mu);
    res.set_content(body, "application/json");
  });
  auto extractor = make_remote(base_config(ts));

  auto expect_shape_error = [&](const char* next_body) {
    CHECK(kind_of([&] { extractor->answer(dummy_message(), "p"); }) ==
          RemoteErrorKind::BadResponseShape);
    std::lock_guard<std::mutex> lock(mu);
    body = next_body;
  };
  expect_shape_error("not json at all");          // path missing
  expect_shape_error(R"({"choices":[{"text":42}]})");  // body not JSON
  expect_shape_error("");                         // value not a string
}

TEST_CASE("a missing auth token is rejected before any request is made") {
  ::unsetenv("LOCDESC_TEST_MISSING_TOKEN");
  ExtractorConfig config;
  config.endpoint = "http://127.0.0.1:9/v1/completions";
  config.request_template = R"({"prompt":"{{PROMPT}}"})";
  config.response_text_path = "/text";
  config.auth_env_var = "LOCDESC_TEST_MISSING_TOKEN";
  CHECK(kind_of([&] { make_remote(config); }) == RemoteErrorKind::AuthMissing);

  ::setenv("LOCDESC_TEST_MISSING_TOKEN", "", 1);  // empty counts as missing
  CHECK(kind_of([&] { make_remote(config); }) == RemoteErrorKind::AuthMissing);
}

TEST_CASE("a dead endpoint is reported as unreachable, not as exhausted retries") {
  ::setenv(kTokenVar, "sekrit-token", 1);
  ExtractorConfig config;
  // Port 9 (discard) is not listening in this sandbox: connection refused.
  config.endpoint = "http://127.0.0.1:9/v1/completions";
  config.request_template = R"({"prompt":"{{PROMPT}}"})";
  config.response_text_path = "/text";
  config.auth_env_var = kTokenVar;
  config.max_retries = 1;
  config.backoff_base_ms = 1;
  config.timeout_ms = 500;
  auto extractor = make_remote(config);
  CHECK(kind_of([&] { extractor->answer(dummy_message(), "p"); }) ==
        RemoteErrorKind::EndpointUnreachable);
}

TEST_CASE("run_extraction bounds in-flight remote calls") {
  TestServer ts;
  std::atomic<int> in_flight{0};
  std::atomic<int> peak{0};
  ts.server.Post("/v1/completions", [&](const httplib::Request& req, httplib::Response& res) {
    int now = ++in_flight;
    int seen = peak.load();
    while (now > seen && !peak.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(25));
    --in_flight;
    nlohmann::json body = nlohmann::json::parse(req.body);
    res.set_content(nlohmann::json({{"text", body["prompt"]}}).dump(), "application/json");
  });

  ExtractorConfig config = base_config(ts);
  config.response_text_path = "/text";
  auto extractor = make_remote(config);

  Corpus corpus;
  for (int i = 0; i < 9; ++i) {
    corpus.messages.push_back(make_message("msg-" + std::to_string(i),
                                           {"message", std::to_string(i), "here"}, {}));
  }
  PromptPlan plan;
  plan.mode = "default";

  auto run_path = std::filesystem::temp_directory_path() / "locdesc-remote-run.jsonl";
  std::filesystem::remove(run_path);
  RunProgress progress = run_extraction(corpus, *extractor, plan, run_path.string(), 3);
  CHECK(progress.answered == 9);
  CHECK(peak.load() <= 3);

  // Each answer is the prompt the server saw, so order and content both check out.
  auto records = read_run_file(run_path.string());
  REQUIRE(records.size() == 9);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].id == corpus.messages[i].id);
    CHECK(records[i].answer ==
          render_default_prompt(corpus.messages[i].canonical_text).text);
  }
  std::filesystem::remove(run_path);
}

TEST_CASE("parse_extractor_config validates and applies defaults") {
  ExtractorConfig config = parse_extractor_config(R"({
    "endpoint": "https://api.example.com/v1/completions",
    "request_template": "{\"prompt\":\"{{PROMPT}}\"}",
    "response_text_path": "/choices/0/text"
  })");
  CHECK(config.endpoint == "https://api.example.com/v1/completions");
  CHECK(config.auth_env_var == "LLM_API_TOKEN");
  CHECK(config.max_retries == 3);
  CHECK(config.backoff_base_ms == 250);
  CHECK(config.max_in_flight == 2);
  CHECK(config.timeout_ms == 30000);
  CHECK(config.temperature == 0.0);

  config = parse_extractor_config(R"({
    "endpoint": "http://localhost:8000/gen",
    "request_template": "{\"p\":\"{{PROMPT}}\",\"t\":{{TEMPERATURE}}}",
    "response_text_path": "text",
    "auth_env_var": "MY_TOKEN",
    "max_retries": 0,
    "backoff_base_ms": 10,
    "max_in_flight": 8,
    "timeout_ms": 1000,
    "temperature": 0.7
  })");
  CHECK(config.auth_env_var == "MY_TOKEN");
  CHECK(config.max_retries == 0);
  CHECK(config.max_in_flight == 8);
  CHECK(config.temperature == 0.7);

  auto bad = [](const char* text) {
    try {
      parse_extractor_config(text);
    } catch (const RemoteError& err) {
      return err.kind() == RemoteErrorKind::BadConfig;
    }
    return false;
  };
  CHECK(bad("not json"));
  CHECK(bad("[1,2,3]"));
  CHECK(bad(R"({"request_template":"{{PROMPT}}","response_text_path":"/t"})"));
  CHECK(bad(R"({"endpoint":"http://x","response_text_path":"/t"})"));
  CHECK(bad(R"({"endpoint":"http://x","request_template":"{{PROMPT}}"})"));
  CHECK(bad(R"({"endpoint":"http://x","request_template":"no hole","response_text_path":"/t"})"));
  CHECK(bad(
      R"({"endpoint":"http://x","request_template":"{{PROMPT}} {{PROMPT}}","response_text_path":"/t"})"));
  CHECK(bad(
      R"({"endpoint":"http://x","request_template":"{{PROMPT}}","response_text_path":"/t","max_retries":-1})"));
  CHECK(bad(
      R"({"endpoint":"http://x","request_template":"{{PROMPT}}","response_text_path":"/t","timeout_ms":"soon"})"));
  CHECK(bad(
      R"({"endpoint":"http://x","request_template":"{{PROMPT}}","response_text_path":"/t","temperature":"warm"})"));

  // max_in_flight is clamped to a sane floor rather than rejected.
  config = parse_extractor_config(
      R"({"endpoint":"http://x","request_template":"{{PROMPT}}","response_text_path":"/t","max_in_flight":0})");
  CHECK(config.max_in_flight == 1);
}

TEST_CASE("a config endpoint without a scheme is rejected when the extractor is built") {
  ::setenv(kTokenVar, "sekrit-token", 1);
  ExtractorConfig config;
  config.endpoint = "api.example.com/v1";
  config.request_template = "{{PROMPT}}";
  config.response_text_path = "/t";
  config.auth_env_var = kTokenVar;
  CHECK(kind_of([&] { make_remote(config); }) == RemoteErrorKind::BadConfig);
}
