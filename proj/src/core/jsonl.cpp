#include "core/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace bias_forge {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::Io, "read failed: " + path.string());
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error(ErrorKind::Io, "write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::Io, "cannot rename into " + path.string());
    }
}

std::vector<Json> parse_jsonl(const std::string& text, const std::string& origin) {
    std::vector<Json> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            rows.push_back(Json::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(ParseFailure::Malformed,
                             origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!rows.back().is_object()) {
            throw ParseError(ParseFailure::Malformed,
                             origin + ":" + std::to_string(lineno) + ": expected a JSON object");
        }
    }
    return rows;
}

std::vector<Json> read_jsonl(const std::filesystem::path& path) {
    return parse_jsonl(read_text_file(path), path.string());
}

std::string dump_line(const Json& j) {
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string require_string(const Json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_string()) {
        throw ParseError(ParseFailure::MissingSection, std::string("string field '") + field + "'");
    }
    return it->get<std::string>();
}

double require_number(const Json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_number()) {
        throw ParseError(ParseFailure::MissingSection, std::string("numeric field '") + field + "'");
    }
    return it->get<double>();
}

}  // namespace bias_forge
