#pragma once

#include <map>
#include <string>
#include <string_view>

namespace bias_forge::genpipe {

struct PromptTemplates {
    std::string generation_prompt;
    std::string judge_prompt;
    std::string neutralize_prompt;

    /// Built-in generation prompt for a backend family: "llama" or "mistral".
    /// Throws Config for other names.
    static PromptTemplates for_family(std::string_view family);
};

/// Replaces every {name} placeholder (lowercase letters, digits, '_') from
/// `values`. Throws Validation if a placeholder is left without a value.
std::string fill_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

}  // namespace bias_forge::genpipe
