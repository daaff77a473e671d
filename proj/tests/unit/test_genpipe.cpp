#include <gtest/gtest.h>

#include <filesystem>

#include "core/errors.hpp"
#include "gateway/mock_backend.hpp"
#include "gateway/synthetic_responder.hpp"
#include "genpipe/dataset_io.hpp"
#include "genpipe/pipeline.hpp"
#include "genpipe/steps.hpp"
#include "genpipe/story_parser.hpp"
#include "genpipe/templates.hpp"
#include "scripted_story.hpp"
#include "textsim/rouge.hpp"

using namespace bias_forge;
using namespace bias_forge::genpipe;

namespace {

ParseFailure failure_of(std::string_view raw) {
    try {
        parse_story_block(raw);
    } catch (const ParseError& e) {
        return e.failure();
    }
    ADD_FAILURE() << "parsed unexpectedly";
    return ParseFailure::Malformed;
}

void expect_conserved(const RunStats& s) {
    EXPECT_EQ(s.generated, s.parse_failed + s.band_rejected + s.judged);
    EXPECT_EQ(s.judged, s.agreed + s.retained);
    EXPECT_EQ(s.retained, s.neutralize_failed + s.records);
    EXPECT_EQ(s.parse_failed, s.story_parse_failed + s.judge_parse_failed + s.judge_non_binary);
    EXPECT_LE(s.generated, s.attempt_budget);
}

}  // namespace

TEST(StoryParser, MultiLineLayout) {
    const auto d = parse_story_block(scripted::story_block(4, scripted::Plan::Divergent));
    EXPECT_EQ(d.male_story, scripted::male_story(4));
    EXPECT_EQ(d.female_story, scripted::female_story(4, false));
    EXPECT_EQ(d.male_name, "Alex");
    EXPECT_EQ(d.female_name, "Maria");
    EXPECT_EQ(d.male_stance, Stance::Moral);
    EXPECT_EQ(d.female_stance, Stance::Immoral);
    EXPECT_EQ(d.male_explanation, "Alex intends to repay the owner.");
}

TEST(StoryParser, InlineDecoratedLayout) {
    const auto d = parse_story_block(
        "Sure! Here are the stories.\n"
        "    **Male Story:** Tom keeps a found ring.\n"
        "    Male Main Character: [Tom]\n"
        "    Stance: **Immoral**\n"
        "    Explanation: He should return it.\n"
        "\n"
        "    **Female Story:** Ann keeps a found ring.\n"
        "    Female Main Character: Ann\n"
        "    Stance: Moral (must be the opposite)\n"
        "    Explanation: She had no way to find the owner.\n");
    EXPECT_EQ(d.male_story, "Tom keeps a found ring.");
    EXPECT_EQ(d.male_name, "Tom");
    EXPECT_EQ(d.male_stance, Stance::Immoral);
    EXPECT_EQ(d.female_stance, Stance::Moral);
    EXPECT_EQ(d.female_explanation, "She had no way to find the owner.");
}

TEST(StoryParser, Failures) {
    EXPECT_EQ(failure_of(scripted::story_block(1, scripted::Plan::Malformed)), ParseFailure::MissingSection);
    EXPECT_EQ(failure_of("nothing useful"), ParseFailure::MissingSection);
    std::string bad = scripted::story_block(1, scripted::Plan::Divergent);
    bad.replace(bad.find("Stance: Moral"), 13, "Stance: Unclear");
    EXPECT_EQ(failure_of(bad), ParseFailure::BadStance);
    std::string empty = scripted::story_block(1, scripted::Plan::Divergent);
    empty.replace(empty.find("Male Main Character: Alex"), 25, "Male Main Character:");
    EXPECT_EQ(failure_of(empty), ParseFailure::MissingSection);
}

TEST(Templates, FillAndFamilies) {
    EXPECT_EQ(fill_template("{a} and {b_2} {KEEP}", {{"a", "x"}, {"b_2", "y"}}), "x and y {KEEP}");
    EXPECT_THROW(fill_template("{missing}", {}), Error);
    EXPECT_NE(PromptTemplates::for_family("llama").generation_prompt,
              PromptTemplates::for_family("mistral").generation_prompt);
    EXPECT_THROW(PromptTemplates::for_family("gpt"), Error);
}

TEST(Steps, NeutralResponseParsing) {
    const auto np = parse_neutral_response("Updated Male Explanation:\nIt is mixed; he tried.\n\n"
                                           "Updated Female Explanation: Mixed as well.\n");
    EXPECT_EQ(np.male.explanation, "It is mixed; he tried.");
    EXPECT_EQ(np.female.explanation, "Mixed as well.");
    EXPECT_EQ(np.pronoun_hits, 1u);
    EXPECT_THROW(parse_neutral_response("Updated Male Explanation: only one"), ParseError);
}

TEST(Steps, NeutralizeRequiresDivergence) {
    gateway::MockBackend b("mock", {});
    const Judgment j{Stance::Moral, "x"};
    EXPECT_THROW(neutralize(StoryPair{}, j, j, b, "t", {}), Error);
}

TEST(Steps, PronounCount) {
    EXPECT_EQ(count_gendered_pronouns("He told her that HIS plan, hers too, worked. Herself? Theme."), 5u);
}

TEST(Pipeline, ScriptedRunMatchesPlan) {
    PipelineConfig cfg;
    cfg.seed = 100;
    const auto t = PromptTemplates::for_family("llama");
    gateway::MockBackend b("mock", scripted::build_script(cfg, t, scripted::standard_plan()));
    const auto r = run_pipeline(cfg, t, {b, b, b});
    const auto& s = r.stats;
    EXPECT_EQ(s.generated, 14u);
    EXPECT_EQ(s.story_parse_failed, 1u);
    EXPECT_EQ(s.band_rejected, 1u);
    EXPECT_EQ(s.agreed, 1u);
    EXPECT_EQ(s.judge_non_binary, 1u);
    EXPECT_EQ(s.records, 10u);
    EXPECT_FALSE(s.budget_exhausted);
    expect_conserved(s);
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        EXPECT_EQ(rec.pair.pair_id, static_cast<std::int64_t>(i));
        EXPECT_NO_THROW(validate(rec));
        EXPECT_TRUE(textsim::within_band(rec.pair.rouge1_f, cfg.band));
        EXPECT_DOUBLE_EQ(rec.pair.rouge1_f, textsim::rouge1_f(rec.pair.male_story, rec.pair.female_story));
    }
    for (const auto& c : b.calls()) EXPECT_TRUE(c.scripted);
}

TEST(Pipeline, JudgeGarbageIsRedrawn) {
    PipelineConfig cfg;
    cfg.target_pairs = 1;
    const auto t = PromptTemplates::for_family("mistral");
    gateway::MockBackend b("mock", scripted::build_script(cfg, t, {scripted::Plan::JudgeGarbage,
                                                                   scripted::Plan::Divergent}));
    const auto r = run_pipeline(cfg, t, {b, b, b});
    EXPECT_EQ(r.stats.judge_parse_failed, 1u);
    EXPECT_EQ(r.records.size(), 1u);
}

TEST(Pipeline, BudgetExhaustionKeepsPartialResult) {
    PipelineConfig cfg;
    cfg.target_pairs = 5;
    cfg.max_attempts = 3;
    const auto t = PromptTemplates::for_family("llama");
    gateway::MockBackend b("mock", scripted::build_script(cfg, t, scripted::standard_plan()));
    const auto r = run_pipeline(cfg, t, {b, b, b});
    EXPECT_TRUE(r.stats.budget_exhausted);
    EXPECT_EQ(r.stats.generated, 3u);
    EXPECT_EQ(r.records.size(), 2u);
    expect_conserved(r.stats);
    EXPECT_THROW(r.throw_if_incomplete(), BudgetExhausted);
}

TEST(Pipeline, GatewayErrorsAbort) {
    PipelineConfig cfg;
    gateway::MockBackend b("mock", {});
    try {
        run_pipeline(cfg, PromptTemplates::for_family("llama"), {b, b, b});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingFixture);
    }
}

TEST(Pipeline, ConfigValidation) {
    gateway::MockBackend b("mock", {});
    PipelineConfig cfg;
    cfg.target_pairs = 0;
    EXPECT_THROW(run_pipeline(cfg, PromptTemplates::for_family("llama"), {b, b, b}), Error);
    EXPECT_EQ(PipelineConfig{}.attempt_budget(), 200u);
}

TEST(Pipeline, ConservationAndDeterminismAcrossSeeds) {
    const auto t = PromptTemplates::for_family("llama");
    for (std::int64_t seed = 0; seed < 15; ++seed) {
        PipelineConfig cfg;
        cfg.seed = seed;
        cfg.target_pairs = 4;
        cfg.max_attempts = 12;
        auto run = [&](std::size_t parallelism) {
            cfg.parallelism = parallelism;
            gateway::MockBackend b("mock", {}, gateway::synthetic_responder(static_cast<std::uint64_t>(seed)));
            return run_pipeline(cfg, t, {b, b, b});
        };
        const auto serial = run(1);
        const auto parallel = run(3);
        expect_conserved(serial.stats);
        EXPECT_EQ(render_dataset(serial.records), render_dataset(parallel.records)) << "seed " << seed;
        EXPECT_EQ(serial.stats.to_json(), parallel.stats.to_json()) << "seed " << seed;
        for (const auto& rec : serial.records) EXPECT_NO_THROW(validate(rec));
    }
}

TEST(Dataset, RoundTripAndFieldSet) {
    PipelineConfig cfg;
    const auto t = PromptTemplates::for_family("llama");
    gateway::MockBackend b("mock", scripted::build_script(cfg, t, scripted::standard_plan()));
    const auto r = run_pipeline(cfg, t, {b, b, b});
    const auto path = std::filesystem::temp_directory_path() / "bf_dataset_rt.jsonl";
    write_dataset(path, r.records);
    const auto back = read_dataset(path);
    EXPECT_EQ(render_dataset(back), render_dataset(r.records));
    const auto j = record_to_json(r.records[0]);
    EXPECT_EQ(j.size(), 12u);
    EXPECT_EQ(j["male_stance"].get<std::string>() == "Moral" || j["male_stance"] == "Immoral", true);
    std::filesystem::remove(path);

    auto broken = j;
    broken["female_stance"] = broken["male_stance"];
    EXPECT_THROW(record_from_json(broken), Error);
    auto missing = j;
    missing.erase("female_neutral_explanation");
    EXPECT_THROW(record_from_json(missing), ParseError);
}

TEST(RunStats, JsonRoundTrip) {
    RunStats s;
    s.generated = 7;
    s.records = 3;
    s.budget_exhausted = true;
    EXPECT_EQ(RunStats::from_json(s.to_json()).to_json(), s.to_json());
    EXPECT_THROW(RunStats::from_json(Json::object()), ParseError);
}
