#include "genpipe/pipeline.hpp"

#include <future>
#include <optional>
#include <variant>

#include "core/errors.hpp"
#include "genpipe/steps.hpp"
#include "genpipe/story_parser.hpp"

namespace bias_forge::genpipe {
namespace {

enum class Outcome { StoryParseFailed, BandRejected, JudgeParseFailed, JudgeNonBinary, Judged };

struct Attempt {
    Outcome outcome = Outcome::StoryParseFailed;
    StoryPairDraft draft;
    double score = 0.0;
    Judgment male;
    Judgment female;
};

bool is_parse_like(const Error& e) {
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::EmptyResponse;
}

Attempt run_attempt(std::size_t index, const PipelineConfig& cfg, const PromptTemplates& templates,
                    const PipelineBackends& backends) {
    Attempt a;
    const auto request = gateway::user_request(templates.generation_prompt, cfg.generation_temperature,
                                               cfg.max_tokens,
                                               cfg.seed + static_cast<std::int64_t>(index));
    try {
        a.draft = parse_story_block(backends.generator.complete(request));
    } catch (const Error& e) {
        if (!is_parse_like(e)) throw;
        a.outcome = Outcome::StoryParseFailed;
        return a;
    }

    a.score = textsim::rouge1_f(a.draft.female_story, a.draft.male_story);
    if (a.draft.male_story == a.draft.female_story || !textsim::within_band(a.score, cfg.band)) {
        a.outcome = Outcome::BandRejected;
        return a;
    }

    const CallSettings judging{cfg.judge_temperature, cfg.max_tokens};
    try {
        a.male = judge_story(a.draft.male_story, backends.judge, templates.judge_prompt, judging);
        a.female = judge_story(a.draft.female_story, backends.judge, templates.judge_prompt, judging);
    } catch (const Error& e) {
        if (!is_parse_like(e)) throw;
        a.outcome = Outcome::JudgeParseFailed;
        return a;
    }
    a.outcome = (is_binary(a.male.stance) && is_binary(a.female.stance)) ? Outcome::Judged
                                                                         : Outcome::JudgeNonBinary;
    return a;
}

// Runs fn(i) for every i in [begin, end) concurrently and
// returns results in index order. Exceptions surface when their slot is read.
template <typename Fn>
auto run_batch(std::size_t begin, std::size_t end, Fn fn) {
    using R = decltype(fn(begin));
    std::vector<std::future<R>> futures;
    futures.reserve(end - begin);
    if (end - begin == 1) {
        std::promise<R> p;
        try {
            p.set_value(fn(begin));
        } catch (...) {
            p.set_exception(std::current_exception());
        }
        futures.push_back(p.get_future());
        return futures;
    }
    for (std::size_t i = begin; i < end; ++i) {
        futures.push_back(std::async(std::launch::async, fn, i));
    }
    return futures;
}

}  // namespace

void PipelineConfig::validate() const {
    if (target_pairs == 0) throw Error(ErrorKind::Config, "target_pairs must be positive");
    if (parallelism == 0) throw Error(ErrorKind::Config, "parallelism must be positive");
    band.validate();
    if (!(generation_temperature >= 0.0) || !(judge_temperature >= 0.0) ||
        !(neutral_temperature >= 0.0)) {
        throw Error(ErrorKind::Config, "temperatures must be non-negative");
    }
    if (max_tokens <= 0) throw Error(ErrorKind::Config, "max_tokens must be positive");
}

void PipelineResult::throw_if_incomplete() const {
    if (stats.budget_exhausted) throw BudgetExhausted(stats.retained);
}

PipelineResult run_pipeline(const PipelineConfig& cfg, const PromptTemplates& templates,
                            const PipelineBackends& backends) {
    cfg.validate();
    PipelineResult result;
    RunStats& st = result.stats;
    st.target = cfg.target_pairs;
    st.attempt_budget = cfg.attempt_budget();

    struct Candidate {
        StoryPair pair;
        Judgment male;
        Judgment female;
    };
    std::vector<Candidate> divergent;

    std::size_t next_attempt = 0;
    while (divergent.size() < cfg.target_pairs && next_attempt < st.attempt_budget) {
        const std::size_t end = std::min(st.attempt_budget, next_attempt + cfg.parallelism);
        auto futures = run_batch(next_attempt, end, [&](std::size_t i) {
            return run_attempt(i, cfg, templates, backends);
        });
        for (auto& f : futures) {
            // once N is reached the rest of the batch is discarded uncounted
            if (divergent.size() >= cfg.target_pairs) {
                try {
                    f.get();
                } catch (...) {
                }
                continue;
            }
            Attempt a = f.get();
            ++st.generated;
            switch (a.outcome) {
                case Outcome::StoryParseFailed:
                    ++st.parse_failed;
                    ++st.story_parse_failed;
                    break;
                case Outcome::BandRejected:
                    ++st.band_rejected;
                    break;
                case Outcome::JudgeParseFailed:
                    ++st.parse_failed;
                    ++st.judge_parse_failed;
                    break;
                case Outcome::JudgeNonBinary:
                    ++st.parse_failed;
                    ++st.judge_non_binary;
                    break;
                case Outcome::Judged:
                    ++st.judged;
                    if (a.male.stance == a.female.stance) {
                        ++st.agreed;
                    } else {
                        StoryPair pair;
                        pair.pair_id = static_cast<std::int64_t>(divergent.size());
                        pair.male_story = std::move(a.draft.male_story);
                        pair.female_story = std::move(a.draft.female_story);
                        pair.male_name = std::move(a.draft.male_name);
                        pair.female_name = std::move(a.draft.female_name);
                        pair.rouge1_f = a.score;
                        divergent.push_back({std::move(pair), std::move(a.male), std::move(a.female)});
                        ++st.retained;
                    }
                    break;
            }
        }
        next_attempt = end;
    }
    st.budget_exhausted = divergent.size() < cfg.target_pairs;

    const CallSettings neutral{cfg.neutral_temperature, cfg.max_tokens};
    for (std::size_t begin = 0; begin < divergent.size(); begin += cfg.parallelism) {
        const std::size_t end = std::min(divergent.size(), begin + cfg.parallelism);
        auto futures = run_batch(begin, end, [&](std::size_t i) -> std::optional<NeutralPair> {
            const auto& c = divergent[i];
            try {
                return neutralize(c.pair, c.male, c.female, backends.neutralizer,
                                  templates.neutralize_prompt, neutral);
            } catch (const Error& e) {
                if (!is_parse_like(e)) throw;
                return std::nullopt;
            }
        });
        for (std::size_t i = begin; i < end; ++i) {
            auto np = futures[i - begin].get();
            if (!np) {
                ++st.neutralize_failed;
                continue;
            }
            st.pronoun_lint_hits += np->pronoun_hits;
            BiasRecord rec;
            rec.pair = divergent[i].pair;
            rec.male_judgment = divergent[i].male;
            rec.female_judgment = divergent[i].female;
            rec.male_neutral = std::move(np->male);
            rec.female_neutral = std::move(np->female);
            result.records.push_back(std::move(rec));
        }
    }
    st.records = result.records.size();
    return result;
}

Json RunStats::to_json() const {
    Json j;
    j["target"] = target;
    j["attempt_budget"] = attempt_budget;
    j["generated"] = generated;
    j["parse_failed"] = parse_failed;
    j["story_parse_failed"] = story_parse_failed;
    j["judge_parse_failed"] = judge_parse_failed;
    j["judge_non_binary"] = judge_non_binary;
    j["band_rejected"] = band_rejected;
    j["judged"] = judged;
    j["agreed"] = agreed;
    j["retained"] = retained;
    j["neutralize_failed"] = neutralize_failed;
    j["records"] = records;
    j["pronoun_lint_hits"] = pronoun_lint_hits;
    j["budget_exhausted"] = budget_exhausted;
    return j;
}

RunStats RunStats::from_json(const Json& j) {
    RunStats s;
    try {
        s.target = j.at("target").get<std::size_t>();
        s.attempt_budget = j.at("attempt_budget").get<std::size_t>();
        s.generated = j.at("generated").get<std::size_t>();
        s.parse_failed = j.at("parse_failed").get<std::size_t>();
        s.story_parse_failed = j.at("story_parse_failed").get<std::size_t>();
        s.judge_parse_failed = j.at("judge_parse_failed").get<std::size_t>();
        s.judge_non_binary = j.at("judge_non_binary").get<std::size_t>();
        s.band_rejected = j.at("band_rejected").get<std::size_t>();
        s.judged = j.at("judged").get<std::size_t>();
        s.agreed = j.at("agreed").get<std::size_t>();
        s.retained = j.at("retained").get<std::size_t>();
        s.neutralize_failed = j.at("neutralize_failed").get<std::size_t>();
        s.records = j.at("records").get<std::size_t>();
        s.pronoun_lint_hits = j.at("pronoun_lint_hits").get<std::size_t>();
        s.budget_exhausted = j.at("budget_exhausted").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseFailure::Malformed, std::string("run stats: ") + e.what());
    }
    return s;
}

}  // namespace bias_forge::genpipe
