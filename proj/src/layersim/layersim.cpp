#include "layersim/layersim.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/jsonl.hpp"
#include "core/rounding.hpp"

namespace bias_forge::layersim {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "vector lengths " + std::to_string(a.size()) +
                                                      " and " + std::to_string(b.size()));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw Error(ErrorKind::ZeroVector, "cosine of a zero vector");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

void LayerVectorFile::validate() const {
    if (n_layers == 0 || dim == 0) throw Error(ErrorKind::Validation, "n_layers and dim must be positive");
    std::set<std::string> seen;
    for (const auto& in : inputs) {
        if (!seen.insert(in.input_id).second) {
            throw Error(ErrorKind::Validation, "duplicate input_id '" + in.input_id + "'");
        }
        if (in.layers.size() != n_layers) {
            throw Error(ErrorKind::Validation, "input '" + in.input_id + "' has " +
                                                   std::to_string(in.layers.size()) + " layers, expected " +
                                                   std::to_string(n_layers));
        }
        for (const auto& row : in.layers) {
            if (row.size() != dim) {
                throw Error(ErrorKind::Validation, "input '" + in.input_id + "' has a row of length " +
                                                       std::to_string(row.size()) + ", expected " +
                                                       std::to_string(dim));
            }
            for (double v : row) {
                if (!std::isfinite(v)) {
                    throw Error(ErrorKind::Validation, "input '" + in.input_id + "' has a non-finite value");
                }
            }
        }
    }
}

LayerVectorFile parse_layer_vectors(const std::string& text, const std::string& origin) {
    const auto rows = parse_jsonl(text, origin);
    if (rows.empty()) throw ParseError(ParseFailure::Malformed, origin + ": missing header line");
    LayerVectorFile f;
    try {
        f.model_id = require_string(rows[0], "model_id");
        f.n_layers = rows[0].at("n_layers").get<std::size_t>();
        f.dim = rows[0].at("dim").get<std::size_t>();
        for (std::size_t i = 1; i < rows.size(); ++i) {
            LayerVectors lv;
            lv.input_id = require_string(rows[i], "input_id");
            lv.layers = rows[i].at("layers").get<std::vector<std::vector<double>>>();
            f.inputs.push_back(std::move(lv));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseFailure::Malformed, origin + ": " + e.what());
    }
    f.validate();
    return f;
}

LayerVectorFile read_layer_vectors(const std::filesystem::path& path) {
    return parse_layer_vectors(read_text_file(path), path.string());
}

void write_layer_vectors(const std::filesystem::path& path, const LayerVectorFile& file) {
    file.validate();
    Json header;
    header["model_id"] = file.model_id;
    header["n_layers"] = file.n_layers;
    header["dim"] = file.dim;
    std::string out = dump_line(header) + "\n";
    for (const auto& in : file.inputs) {
        Json row;
        row["input_id"] = in.input_id;
        row["layers"] = in.layers;
        out += dump_line(row) + "\n";
    }
    write_text_file(path, out);
}

SimilarityResult layer_similarity(const LayerVectorFile& a, const LayerVectorFile& b) {
    if (a.n_layers != b.n_layers) {
        throw Error(ErrorKind::LayerCountMismatch, std::to_string(a.n_layers) + " vs " +
                                                       std::to_string(b.n_layers) + " layers");
    }
    if (a.dim != b.dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "hidden size " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
    }
    std::unordered_map<std::string, const LayerVectors*> by_id;
    for (const auto& in : b.inputs) by_id[in.input_id] = &in;

    SimilarityResult r;
    for (const auto& in : a.inputs) {
        auto it = by_id.find(in.input_id);
        if (it == by_id.end()) continue;
        std::vector<double> row(a.n_layers);
        for (std::size_t l = 0; l < a.n_layers; ++l) row[l] = cosine(in.layers[l], it->second->layers[l]);
        r.input_ids.push_back(in.input_id);
        r.matrix.push_back(std::move(row));
    }
    if (r.matrix.empty()) throw Error(ErrorKind::NoSharedInputs, "the two files share no input_id");

    const double n = static_cast<double>(r.matrix.size());
    for (std::size_t l = 0; l < a.n_layers; ++l) {
        double sum = 0.0;
        for (const auto& row : r.matrix) sum += row[l];
        const double mean = sum / n;
        double ss = 0.0;
        for (const auto& row : r.matrix) ss += (row[l] - mean) * (row[l] - mean);
        r.per_layer.push_back({l, mean, std::sqrt(ss / n)});
    }
    return r;
}

std::string per_layer_csv(const SimilarityResult& r) {
    std::string out = "layer,mean,std\n";
    for (const auto& s : r.per_layer) {
        out += std::to_string(s.layer) + "," + format_full(s.mean) + "," + format_full(s.std) + "\n";
    }
    return out;
}

std::string matrix_csv(const SimilarityResult& r) {
    std::string out = "input_id";
    for (std::size_t l = 0; l < r.per_layer.size(); ++l) out += ",layer_" + std::to_string(l);
    out += "\n";
    for (std::size_t i = 0; i < r.matrix.size(); ++i) {
        out += r.input_ids[i];
        for (double v : r.matrix[i]) out += "," + format_full(v);
        out += "\n";
    }
    return out;
}

}  // namespace bias_forge::layersim
