#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bias_forge/bias_forge.h"

namespace {

int report(bf_status s) {
    if (s != BF_OK) std::fprintf(stderr, "bias-forge: %s\n", bf_last_error());
    return static_cast<int>(s);
}

struct ConfigFlags {
    std::string path;
    bool mock = false;
    std::vector<std::string> overrides;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--config", path, "INI config file");
        cmd->add_flag("--mock", mock, "use the offline mock backend for every role");
        cmd->add_option("--set", overrides, "override, section.key=value (repeatable)");
    }

    // Loads the config and applies flags; returns the handle or sets *status.
    bf_config* load(bf_status* status, const std::vector<std::string>& extra) const {
        bf_config* cfg = nullptr;
        *status = path.empty() ? bf_config_default(&cfg) : bf_config_load(path.c_str(), &cfg);
        if (*status != BF_OK) return nullptr;
        std::vector<std::string> all = overrides;
        all.insert(all.end(), extra.begin(), extra.end());
        for (const auto& o : all) {
            if ((*status = bf_config_set(cfg, o.c_str())) != BF_OK) break;
        }
        if (*status == BF_OK && mock) *status = bf_config_force_mock(cfg);
        if (*status != BF_OK) {
            bf_config_free(cfg);
            return nullptr;
        }
        return cfg;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gender-bias story-pair generation and evaluation toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bf_version());

    // generate
    auto* gen = app.add_subcommand("generate", "run the story-pair pipeline");
    ConfigFlags gen_cfg;
    gen_cfg.add_to(gen);
    std::optional<long long> seed;
    std::optional<std::size_t> n_pairs, max_attempts;
    std::string gen_out;
    gen->add_option("--seed", seed, "pipeline seed");
    gen->add_option("-n,--pairs", n_pairs, "divergent pairs to retain");
    gen->add_option("--max-attempts", max_attempts, "generation attempt budget");
    gen->add_option("--out", gen_out, "output directory (default: [paths] output_dir)");

    // export
    auto* exp = app.add_subcommand("export", "write training data from a dataset");
    std::string exp_dataset, exp_format = "sft", exp_out;
    std::size_t k = 1;
    bool with_stance = false;
    exp->add_option("dataset", exp_dataset, "dataset JSONL")->required();
    exp->add_option("--format", exp_format, "sft, dpo or fewshot")
        ->check(CLI::IsMember({"sft", "dpo", "fewshot"}));
    exp->add_option("--out", exp_out, "output file")->required();
    exp->add_option("-k", k, "few-shot story pairs (1-3)");
    exp->add_flag("--with-stance", with_stance, "add a stance line to few-shot demonstrations");

    // eval
    auto* ev = app.add_subcommand("eval", "score a benchmark");
    ConfigFlags ev_cfg;
    ev_cfg.add_to(ev);
    std::string bench, ev_input, ev_transcripts, ev_fewshot, ev_out, ev_label, ev_baseline;
    bool live = false;
    ev->add_option("benchmark", bench, "winobias, genmo, mmlu or truthfulqa")
        ->required()
        ->check(CLI::IsMember({"winobias", "genmo", "mmlu", "truthfulqa"}));
    ev->add_option("--input", ev_input, "benchmark items (.jsonl or .tsv)")->required();
    ev->add_option("--transcripts", ev_transcripts, "transcript cache (read offline, written with --live)");
    ev->add_flag("--live", live, "query the eval backend");
    ev->add_option("--fewshot-block", ev_fewshot, "few-shot block prepended to GenMO prompts");
    ev->add_option("--out", ev_out, "report path prefix")->required();
    ev->add_option("--label", ev_label, "report label");
    ev->add_option("--baseline-report", ev_baseline, "MMLU/TruthfulQA report to diff subjects against");

    // select
    auto* sel = app.add_subcommand("select", "choose the model with the smallest delta sum");
    std::vector<std::string> reports;
    sel->add_option("reports", reports, "WinoBias JSON reports")->required();

    // layersim
    auto* ls = app.add_subcommand("layersim", "layer-wise cosine similarity");
    std::string file_a, file_b, ls_out, ls_matrix;
    ls->add_option("file_a", file_a, "layer-vector JSONL")->required();
    ls->add_option("file_b", file_b, "layer-vector JSONL")->required();
    ls->add_option("--out", ls_out, "layer,mean,std CSV")->required();
    ls->add_option("--matrix", ls_matrix, "per-input similarity CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : BF_E_CONFIG;
    }

    if (*gen) {
        std::vector<std::string> extra;
        if (seed) extra.push_back("pipeline.seed=" + std::to_string(*seed));
        if (n_pairs) extra.push_back("pipeline.n=" + std::to_string(*n_pairs));
        if (max_attempts) extra.push_back("pipeline.max_attempts=" + std::to_string(*max_attempts));
        if (!gen_out.empty()) extra.push_back("paths.output_dir=" + gen_out);
        bf_status s;
        bf_config* cfg = gen_cfg.load(&s, extra);
        if (!cfg) return report(s);
        const std::filesystem::path dir = bf_config_output_dir(cfg);
        const std::string dataset = (dir / "dataset.jsonl").string();
        const std::string stats_path = (dir / "stats.json").string();
        bf_dataset* ds = nullptr;
        char* stats = nullptr;
        s = bf_generate(cfg, dataset.c_str(), stats_path.c_str(), &ds, &stats);
        if (stats) std::printf("%s", stats);
        if (ds) std::printf("records: %zu\ndataset: %s\nstats: %s\n", bf_dataset_size(ds), dataset.c_str(),
                            stats_path.c_str());
        bf_string_free(stats);
        bf_dataset_free(ds);
        bf_config_free(cfg);
        return report(s);
    }

    if (*exp) {
        bf_dataset* ds = nullptr;
        bf_status s = bf_dataset_load(exp_dataset.c_str(), &ds);
        if (s != BF_OK) return report(s);
        std::size_t lines = 0;
        if (exp_format == "sft") {
            s = bf_export_sft(ds, exp_out.c_str(), &lines);
        } else if (exp_format == "dpo") {
            s = bf_export_dpo(ds, exp_out.c_str(), &lines);
        } else {
            s = bf_export_fewshot(ds, exp_out.c_str(), k, with_stance ? 1 : 0);
            lines = 2 * k;
        }
        bf_dataset_free(ds);
        if (s == BF_OK) std::printf("%zu\n", lines);
        return report(s);
    }

    if (*ev) {
        bf_config* cfg = nullptr;
        bf_status s = BF_OK;
        if (live) {
            cfg = ev_cfg.load(&s, {});
            if (!cfg) return report(s);
        }
        bf_eval_request req{};
        req.benchmark = bench.c_str();
        req.input = ev_input.c_str();
        req.transcripts = ev_transcripts.empty() ? nullptr : ev_transcripts.c_str();
        req.live = live ? 1 : 0;
        req.fewshot_block = ev_fewshot.empty() ? nullptr : ev_fewshot.c_str();
        req.out_prefix = ev_out.c_str();
        req.label = ev_label.empty() ? nullptr : ev_label.c_str();
        req.baseline_report = ev_baseline.empty() ? nullptr : ev_baseline.c_str();
        char* json = nullptr;
        s = bf_eval(cfg, &req, &json);
        if (json) std::printf("%s", json);
        bf_string_free(json);
        bf_config_free(cfg);
        return report(s);
    }

    if (*sel) {
        std::vector<const char*> paths;
        for (const auto& r : reports) paths.push_back(r.c_str());
        char* label = nullptr;
        char* table = nullptr;
        const bf_status s = bf_select(paths.data(), paths.size(), &label, &table);
        if (s == BF_OK) std::printf("%sselected: %s\n", table, label);
        bf_string_free(label);
        bf_string_free(table);
        return report(s);
    }

    if (*ls) {
        return report(bf_layersim(file_a.c_str(), file_b.c_str(), ls_out.c_str(),
                                  ls_matrix.empty() ? nullptr : ls_matrix.c_str()));
    }
    return BF_E_INTERNAL;
}
