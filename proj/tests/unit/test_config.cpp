#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "config/backend_factory.hpp"
#include "config/config.hpp"
#include "core/errors.hpp"
#include "gateway/http_backend.hpp"
#include "gateway/mock_backend.hpp"

using namespace bias_forge;
using namespace bias_forge::config;

TEST(Config, DefaultsAreValid) {
    Config c;
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.pipeline.target_pairs, 10u);
    EXPECT_DOUBLE_EQ(c.pipeline.band.tau_lo, 0.80);
    EXPECT_DOUBLE_EQ(c.pipeline.band.tau_hi, 0.95);
    EXPECT_EQ(c.backend(BackendRole::Judge).http.token_env, "BIAS_FORGE_API_KEY");
}

TEST(Config, ParsesSections) {
    const auto c = parse_config(R"(
# comment
[pipeline]
n = 25
band_lo = 0.75
max_attempts = 400
seed = -3
parallelism = 4

[templates]
family = mistral

[eval]
fewshot_k = 2
fewshot_stance = yes

[backend.judge]
kind = http
endpoint = https://example.invalid
model = judge-model
max_retries = 5
; trailing comment
)", "test.ini");
    EXPECT_EQ(c.pipeline.target_pairs, 25u);
    EXPECT_DOUBLE_EQ(c.pipeline.band.tau_lo, 0.75);
    EXPECT_EQ(c.pipeline.attempt_budget(), 400u);
    EXPECT_EQ(c.pipeline.seed, -3);
    EXPECT_EQ(c.template_family, "mistral");
    EXPECT_TRUE(c.eval.fewshot_stance);
    EXPECT_EQ(c.backend(BackendRole::Judge).kind, "http");
    EXPECT_EQ(c.backend(BackendRole::Judge).http.max_retries, 5);
    EXPECT_EQ(c.backend(BackendRole::Gen).kind, "mock");
}

TEST(Config, RejectsUnknownAndBadValues) {
    auto err = [](const char* text) {
        try {
            parse_config(text, "t");
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Config) << e.what();
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(err("[pipeline]\nbogus = 1\n").find("t:2"), std::string::npos);
    EXPECT_NE(err("[nosuch]\nn = 1\n").find("unknown section"), std::string::npos);
    EXPECT_NE(err("n = 1\n").find("outside"), std::string::npos);
    EXPECT_NE(err("[pipeline]\nn = ten\n").find("not an integer"), std::string::npos);
    EXPECT_NE(err("[pipeline]\nband_lo = 0.99\n").find("no error"), 0u);
    EXPECT_NE(err("[templates]\nfamily = gpt\n").find("no error"), 0u);
    EXPECT_NE(err("[backend.eval]\nkind = http\n").find("no error"), 0u);
    EXPECT_NE(err("[pipeline\n").find("unterminated"), std::string::npos);
}

TEST(Config, Overrides) {
    Config c;
    c.apply_override("pipeline.n=3");
    c.apply_override("backend.neutral.model = x");
    EXPECT_EQ(c.pipeline.target_pairs, 3u);
    EXPECT_EQ(c.backend(BackendRole::Neutral).http.model, "x");
    EXPECT_THROW(c.apply_override("pipeline"), Error);
    EXPECT_THROW(c.apply_override("n=3"), Error);
    EXPECT_THROW(c.apply_override("pipeline.nope=3"), Error);
}

TEST(Config, LoadMissingFileIsConfigError) {
    try {
        load_config("/nonexistent/bias.ini");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Config);
    }
}

TEST(BackendFactory, BuildsMockAndHttp) {
    Config c;
    auto mock = make_backend(c, BackendRole::Gen);
    EXPECT_NE(dynamic_cast<gateway::MockBackend*>(mock.get()), nullptr);
    EXPECT_EQ(mock->model_id(), "mock");
    c.backend(BackendRole::Eval).kind = "http";
    c.backend(BackendRole::Eval).http.model = "m";
    auto http = make_backend(c, BackendRole::Eval);
    EXPECT_NE(dynamic_cast<gateway::HttpBackend*>(http.get()), nullptr);
    force_mock(c);
    EXPECT_EQ(c.backend(BackendRole::Eval).kind, "mock");
}

TEST(BackendFactory, FallbackNoneIsStrict) {
    Config c;
    c.backend(BackendRole::Judge).fallback = "none";
    auto b = make_backend(c, BackendRole::Judge);
    EXPECT_THROW(b->complete(gateway::user_request("x", 0.0, 4)), Error);
}
