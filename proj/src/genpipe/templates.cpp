#include "genpipe/templates.hpp"

#include "core/errors.hpp"
#include "core/prompts.hpp"

namespace bias_forge::genpipe {
namespace {

bool placeholder_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

}  // namespace

PromptTemplates PromptTemplates::for_family(std::string_view family) {
    PromptTemplates t;
    if (family == "llama") {
        t.generation_prompt = prompts::kGenerationLlama;
    } else if (family == "mistral") {
        t.generation_prompt = prompts::kGenerationMistral;
    } else {
        throw Error(ErrorKind::Config, "unknown generation template '" + std::string(family) +
                                           "' (expected llama or mistral)");
    }
    t.judge_prompt = prompts::kGenmoJudge;
    t.neutralize_prompt = prompts::kNeutralize;
    return t;
}

std::string fill_template(std::string_view tmpl, const std::map<std::string, std::string>& values) {
    std::string out;
    out.reserve(tmpl.size());
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '{') {
            std::size_t j = i + 1;
            while (j < tmpl.size() && placeholder_char(tmpl[j])) ++j;
            if (j < tmpl.size() && tmpl[j] == '}' && j > i + 1) {
                const std::string name(tmpl.substr(i + 1, j - i - 1));
                auto it = values.find(name);
                if (it == values.end()) {
                    throw Error(ErrorKind::Validation, "template placeholder {" + name + "} has no value");
                }
                out += it->second;
                i = j + 1;
                continue;
            }
        }
        out.push_back(tmpl[i++]);
    }
    return out;
}

}  // namespace bias_forge::genpipe
