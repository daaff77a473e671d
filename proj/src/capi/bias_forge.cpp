#include "bias_forge/bias_forge.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "config/backend_factory.hpp"
#include "config/config.hpp"
#include "core/errors.hpp"
#include "core/jsonl.hpp"
#include "evalkit/benchmarks.hpp"
#include "evalkit/reports.hpp"
#include "exporter/export.hpp"
#include "genpipe/dataset_io.hpp"
#include "genpipe/pipeline.hpp"
#include "layersim/layersim.hpp"

struct bf_config {
    bias_forge::config::Config cfg;
};

struct bf_dataset {
    std::vector<bias_forge::BiasRecord> records;
};

namespace {

using namespace bias_forge;

thread_local std::string g_last_error;

bf_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::Config: return BF_E_CONFIG;
        case ErrorKind::Transport:
        case ErrorKind::Backend:
        case ErrorKind::EmptyResponse:
        case ErrorKind::MissingFixture: return BF_E_BACKEND;
        case ErrorKind::BudgetExhausted: return BF_E_BUDGET;
        case ErrorKind::Io: return BF_E_IO;
        case ErrorKind::Parse:
        case ErrorKind::Validation:
        case ErrorKind::InsufficientRecords: return BF_E_VALIDATION;
        case ErrorKind::DimensionMismatch:
        case ErrorKind::ZeroVector:
        case ErrorKind::LayerCountMismatch:
        case ErrorKind::NoSharedInputs: return BF_E_MISMATCH;
    }
    return BF_E_INTERNAL;
}

bf_status fail(bf_status s, const std::string& message) {
    g_last_error = message;
    return s;
}

// Runs fn, translating exceptions into status codes and the last-error text.
template <typename Fn>
bf_status guarded(Fn&& fn) noexcept {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(BF_E_IO, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(BF_E_VALIDATION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BF_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BF_E_INTERNAL, e.what());
    } catch (...) {
        return fail(BF_E_INTERNAL, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) throw Error(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

bool is_mc(const std::string& b) { return b == "mmlu" || b == "truthfulqa"; }

}  // namespace

extern "C" {

const char* bf_version(void) { return "0.1.0"; }

const char* bf_last_error(void) { return g_last_error.c_str(); }

void bf_string_free(char* s) { std::free(s); }

bf_status bf_config_default(bf_config** out) {
    return guarded([&] {
        require(out, "out");
        *out = new bf_config{};
        return BF_OK;
    });
}

bf_status bf_config_load(const char* path, bf_config** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new bf_config{config::load_config(path)};
        return BF_OK;
    });
}

bf_status bf_config_set(bf_config* cfg, const char* assignment) {
    return guarded([&] {
        require(cfg, "cfg");
        require(assignment, "assignment");
        config::Config copy = cfg->cfg;
        copy.apply_override(assignment);
        copy.validate();
        cfg->cfg = std::move(copy);
        return BF_OK;
    });
}

bf_status bf_config_force_mock(bf_config* cfg) {
    return guarded([&] {
        require(cfg, "cfg");
        config::force_mock(cfg->cfg);
        return BF_OK;
    });
}

const char* bf_config_output_dir(const bf_config* cfg) {
    return cfg ? cfg->cfg.paths.output_dir.c_str() : "";
}

void bf_config_free(bf_config* cfg) { delete cfg; }

bf_status bf_generate(const bf_config* cfg, const char* dataset_path, const char* stats_path,
                      bf_dataset** out_dataset, char** out_stats_json) {
    return guarded([&] {
        require(cfg, "cfg");
        require(dataset_path, "dataset_path");
        require(stats_path, "stats_path");
        const auto& c = cfg->cfg;
        auto gen = config::make_backend(c, config::BackendRole::Gen);
        auto judge = config::make_backend(c, config::BackendRole::Judge);
        auto neutral = config::make_backend(c, config::BackendRole::Neutral);
        const auto templates = genpipe::PromptTemplates::for_family(c.template_family);
        auto result = genpipe::run_pipeline(c.pipeline, templates, {*gen, *judge, *neutral});

        const std::string stats = result.stats.to_json().dump(2) + "\n";
        genpipe::write_dataset(dataset_path, result.records);
        write_text_file(stats_path, stats);
        if (out_stats_json) *out_stats_json = dup_string(stats);
        if (out_dataset) *out_dataset = new bf_dataset{std::move(result.records)};
        if (result.stats.budget_exhausted) {
            return fail(BF_E_BUDGET, BudgetExhausted(result.stats.retained).what());
        }
        return BF_OK;
    });
}

bf_status bf_dataset_load(const char* path, bf_dataset** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new bf_dataset{genpipe::read_dataset(path)};
        return BF_OK;
    });
}

bf_status bf_dataset_save(const bf_dataset* ds, const char* path) {
    return guarded([&] {
        require(ds, "dataset");
        require(path, "path");
        genpipe::write_dataset(path, ds->records);
        return BF_OK;
    });
}

size_t bf_dataset_size(const bf_dataset* ds) { return ds ? ds->records.size() : 0; }

void bf_dataset_free(bf_dataset* ds) { delete ds; }

bf_status bf_export_sft(const bf_dataset* ds, const char* path, size_t* out_lines) {
    return guarded([&] {
        require(ds, "dataset");
        require(path, "path");
        const auto n = exporter::export_sft(ds->records, path);
        if (out_lines) *out_lines = n;
        return BF_OK;
    });
}

bf_status bf_export_dpo(const bf_dataset* ds, const char* path, size_t* out_lines) {
    return guarded([&] {
        require(ds, "dataset");
        require(path, "path");
        const auto n = exporter::export_dpo(ds->records, path);
        if (out_lines) *out_lines = n;
        return BF_OK;
    });
}

bf_status bf_export_fewshot(const bf_dataset* ds, const char* path, size_t k, int include_stance) {
    return guarded([&] {
        require(ds, "dataset");
        require(path, "path");
        const auto block = exporter::render_fewshot_block(ds->records, {k, include_stance != 0});
        write_text_file(path, block);
        return BF_OK;
    });
}

bf_status bf_eval(const bf_config* cfg, const bf_eval_request* req, char** out_report_json) {
    return guarded([&] {
        require(req, "request");
        require(req->benchmark, "benchmark");
        require(req->input, "input");
        require(req->out_prefix, "out_prefix");
        const std::string bench = req->benchmark;
        if (bench != "winobias" && bench != "genmo" && !is_mc(bench)) {
            throw Error(ErrorKind::InvalidArgument, "unknown benchmark '" + bench + "'");
        }
        if (req->fewshot_block && bench != "genmo") {
            throw Error(ErrorKind::InvalidArgument, "a few-shot block applies to genmo only");
        }
        if (req->baseline_report && !is_mc(bench)) {
            throw Error(ErrorKind::InvalidArgument, "a baseline report applies to mmlu/truthfulqa only");
        }
        const std::string prefix = req->out_prefix;
        const std::string label = req->label ? req->label : "";

        std::unique_ptr<gateway::ChatBackend> backend;
        std::unique_ptr<evalkit::ResponseSource> source;
        std::string transcript_path;
        if (req->live) {
            require(cfg, "cfg");
            backend = config::make_backend(cfg->cfg, config::BackendRole::Eval);
            const auto& e = cfg->cfg.eval;
            source = std::make_unique<evalkit::LiveSource>(*backend, e.temperature, e.max_tokens, e.parallelism);
            transcript_path = req->transcripts ? req->transcripts : prefix + ".transcripts.jsonl";
        } else {
            if (!req->transcripts) {
                throw Error(ErrorKind::InvalidArgument, "offline scoring needs a transcript cache");
            }
            source = std::make_unique<evalkit::CachedSource>(evalkit::read_transcripts(req->transcripts));
        }

        Json report;
        std::string csv;
        std::vector<evalkit::EvalTranscript> transcripts;
        if (bench == "winobias") {
            auto run = evalkit::eval_winobias(evalkit::load_winobias(req->input), *source);
            run.report.label = label;
            report = evalkit::to_json(run.report);
            csv = evalkit::to_csv(run.report);
            transcripts = std::move(run.transcripts);
        } else if (bench == "genmo") {
            std::optional<std::string> fewshot;
            if (req->fewshot_block) fewshot = read_text_file(req->fewshot_block);
            auto run = evalkit::eval_genmo(evalkit::load_genmo(req->input), *source, fewshot);
            run.report.label = label;
            report = evalkit::to_json(run.report);
            csv = evalkit::to_csv(run.report);
            transcripts = std::move(run.transcripts);
        } else {
            auto run = evalkit::eval_mc(evalkit::load_mc(req->input), *source);
            run.report.label = label;
            report = evalkit::to_json(run.report, bench);
            csv = evalkit::to_csv(run.report);
            transcripts = std::move(run.transcripts);
            write_text_file(prefix + ".subjects.csv", evalkit::subjects_csv(run.report));
            if (req->baseline_report) {
                const auto baseline =
                    evalkit::mc_report_from_json(Json::parse(read_text_file(req->baseline_report)));
                write_text_file(prefix + ".subject_delta.csv",
                                evalkit::subject_delta_csv(evalkit::compare_subjects(baseline, run.report)));
            }
        }

        const std::string json_text = report.dump(2) + "\n";
        write_text_file(prefix + ".json", json_text);
        write_text_file(prefix + ".csv", csv);
        if (!transcript_path.empty()) evalkit::write_transcripts(transcript_path, transcripts);
        if (out_report_json) *out_report_json = dup_string(json_text);
        return BF_OK;
    });
}

bf_status bf_select(const char* const* report_paths, size_t n, char** out_label, char** out_table) {
    return guarded([&] {
        require(out_label, "out_label");
        if (n == 0) throw Error(ErrorKind::InvalidArgument, "no reports given");
        require(report_paths, "report_paths");
        std::vector<evalkit::SelectionCandidate> candidates;
        for (size_t i = 0; i < n; ++i) {
            require(report_paths[i], "report path");
            const std::filesystem::path p = report_paths[i];
            Json j;
            try {
                j = Json::parse(read_text_file(p));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(ParseFailure::Malformed, p.string() + ": " + e.what());
            }
            candidates.push_back(evalkit::candidate_from_report(j, p.stem().string()));
        }
        const auto& chosen = evalkit::select_model(candidates);
        if (out_table) *out_table = dup_string(evalkit::selection_table(candidates));
        *out_label = dup_string(chosen.label);
        return BF_OK;
    });
}

bf_status bf_layersim(const char* path_a, const char* path_b, const char* csv_path,
                      const char* matrix_path) {
    return guarded([&] {
        require(path_a, "path_a");
        require(path_b, "path_b");
        require(csv_path, "csv_path");
        const auto r = layersim::layer_similarity(layersim::read_layer_vectors(path_a),
                                                  layersim::read_layer_vectors(path_b));
        write_text_file(csv_path, layersim::per_layer_csv(r));
        if (matrix_path) write_text_file(matrix_path, layersim::matrix_csv(r));
        return BF_OK;
    });
}

}  // extern "C"
