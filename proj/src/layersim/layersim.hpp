#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bias_forge::layersim {

/// Throws DimensionMismatch on different lengths and ZeroVector when either
/// norm is zero.
double cosine(const std::vector<double>& a, const std::vector<double>& b);

struct LayerVectors {
    std::string input_id;
    std::vector<std::vector<double>> layers;  // [layer][dim]
};

/// Header line {"model_id","n_layers","dim"} then one line per input:
/// {"input_id","layers":[[...],...]}.
struct LayerVectorFile {
    std::string model_id;
    std::size_t n_layers = 0;
    std::size_t dim = 0;
    std::vector<LayerVectors> inputs;

    /// Every input has n_layers rows of dim finite values and a unique id.
    /// Throws Validation.
    void validate() const;
};

LayerVectorFile read_layer_vectors(const std::filesystem::path& path);
LayerVectorFile parse_layer_vectors(const std::string& text, const std::string& origin);
void write_layer_vectors(const std::filesystem::path& path, const LayerVectorFile& file);

struct LayerStat {
    std::size_t layer = 0;
    double mean = 0.0;
    double std = 0.0;  // population standard deviation
};

struct SimilarityResult {
    std::vector<std::string> input_ids;            // shared ids, in `a` order
    std::vector<std::vector<double>> matrix;       // [input][layer]
    std::vector<LayerStat> per_layer;
};

/// Cosine per shared input and layer. Inputs present in only one file are
/// skipped. Throws LayerCountMismatch, DimensionMismatch, NoSharedInputs or
/// ZeroVector.
SimilarityResult layer_similarity(const LayerVectorFile& a, const LayerVectorFile& b);

/// layer,mean,std at full precision.
std::string per_layer_csv(const SimilarityResult& r);
/// input_id,layer_0,...,layer_{L-1} at full precision.
std::string matrix_csv(const SimilarityResult& r);

}  // namespace bias_forge::layersim
