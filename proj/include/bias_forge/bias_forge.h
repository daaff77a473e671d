#ifndef BIAS_FORGE_H
#define BIAS_FORGE_H

#include <stddef.h>

#if defined(BF_BUILDING_LIBRARY)
#define BF_API __attribute__((visibility("default")))
#else
#define BF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum bf_status {
    BF_OK = 0,
    BF_E_INTERNAL = 1,
    BF_E_CONFIG = 2,     /* bad config, override or argument */
    BF_E_BACKEND = 3,    /* transport, HTTP status, empty response, missing fixture */
    BF_E_BUDGET = 4,     /* attempt budget spent before N divergent pairs */
    BF_E_IO = 5,
    BF_E_VALIDATION = 6, /* unparseable input, broken invariant, too few records */
    BF_E_MISMATCH = 7    /* layer/dimension mismatch, zero vector, no shared inputs */
} bf_status;

typedef struct bf_config bf_config;
typedef struct bf_dataset bf_dataset;

BF_API const char* bf_version(void);
/* Message of the last failed call on this thread; "" if none. */
BF_API const char* bf_last_error(void);
/* Frees strings returned through char** out-parameters. */
BF_API void bf_string_free(char* s);

BF_API bf_status bf_config_default(bf_config** out);
BF_API bf_status bf_config_load(const char* path, bf_config** out);
/* "section.key=value", e.g. "pipeline.n=10" or "backend.judge.model=m". */
BF_API bf_status bf_config_set(bf_config* cfg, const char* assignment);
/* Routes every backend role to the offline mock. */
BF_API bf_status bf_config_force_mock(bf_config* cfg);
/* Value of [paths] output_dir. Owned by cfg. */
BF_API const char* bf_config_output_dir(const bf_config* cfg);
BF_API void bf_config_free(bf_config* cfg);

/* Runs the generation pipeline, writes the dataset JSONL and the stats JSON.
 * On BF_E_BUDGET the partial dataset is still written and returned.
 * out_dataset and out_stats_json may be NULL. */
BF_API bf_status bf_generate(const bf_config* cfg, const char* dataset_path, const char* stats_path,
                             bf_dataset** out_dataset, char** out_stats_json);

BF_API bf_status bf_dataset_load(const char* path, bf_dataset** out);
BF_API bf_status bf_dataset_save(const bf_dataset* ds, const char* path);
BF_API size_t bf_dataset_size(const bf_dataset* ds);
BF_API void bf_dataset_free(bf_dataset* ds);

/* Training exports. out_lines (may be NULL) receives the number of lines. */
BF_API bf_status bf_export_sft(const bf_dataset* ds, const char* path, size_t* out_lines);
BF_API bf_status bf_export_dpo(const bf_dataset* ds, const char* path, size_t* out_lines);
BF_API bf_status bf_export_fewshot(const bf_dataset* ds, const char* path, size_t k, int include_stance);

typedef struct bf_eval_request {
    const char* benchmark;       /* winobias | genmo | mmlu | truthfulqa */
    const char* input;           /* benchmark items (.jsonl or .tsv) */
    const char* transcripts;     /* read when offline; written when live (NULL: <out_prefix>.transcripts.jsonl) */
    int live;                    /* nonzero: query the eval backend */
    const char* fewshot_block;   /* genmo only, may be NULL */
    const char* out_prefix;      /* writes <out_prefix>.json and <out_prefix>.csv */
    const char* label;           /* report label, may be NULL */
    const char* baseline_report; /* mmlu/truthfulqa only: JSON report to diff subjects against */
} bf_eval_request;

/* cfg may be NULL for offline scoring. out_report_json may be NULL. */
BF_API bf_status bf_eval(const bf_config* cfg, const bf_eval_request* req, char** out_report_json);

/* Picks the WinoBias report with the smallest Type-1 + Type-2 delta.
 * out_table receives a label,delta1,delta2,delta_sum CSV; may be NULL. */
BF_API bf_status bf_select(const char* const* report_paths, size_t n, char** out_label, char** out_table);

/* Layer-wise cosine similarity of two layer-vector files. Writes the
 * layer,mean,std CSV to csv_path; matrix_path (may be NULL) gets the
 * per-input matrix. */
BF_API bf_status bf_layersim(const char* path_a, const char* path_b, const char* csv_path,
                             const char* matrix_path);

#ifdef __cplusplus
}
#endif

#endif
