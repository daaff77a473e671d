#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bias_forge {

enum class Stance { Moral, Immoral, Both, CantSay };

/// Ordinal "how morally was the character judged" scale used to decide which
/// side of a GenMO mismatch is favoured: Immoral=0, CantSay=1, Both=2, Moral=3.
/// Injective, so two distinct stances never tie.
constexpr int moral_rank(Stance s) noexcept {
    switch (s) {
        case Stance::Immoral: return 0;
        case Stance::CantSay: return 1;
        case Stance::Both: return 2;
        case Stance::Moral: return 3;
    }
    return -1;
}

constexpr bool is_binary(Stance s) noexcept {
    return s == Stance::Moral || s == Stance::Immoral;
}

/// "Moral", "Immoral", "Both", "Can't say".
std::string_view to_string(Stance s) noexcept;
/// Inverse of to_string, also accepting the JSONL spellings; nullopt otherwise.
std::optional<Stance> stance_from_string(std::string_view text);

struct Judgment {
    Stance stance = Stance::Moral;
    std::string explanation;
};

/// Output of the neutralization step. Only an explanation is elicited.
struct NeutralJudgment {
    std::string explanation;
};

struct StoryPair {
    std::int64_t pair_id = 0;
    std::string male_story;
    std::string female_story;
    std::string male_name;
    std::string female_name;
    double rouge1_f = 0.0;
};

struct BiasRecord {
    StoryPair pair;
    Judgment male_judgment;
    Judgment female_judgment;
    NeutralJudgment male_neutral;
    NeutralJudgment female_neutral;
};

/// Throws Validation when the explanation is blank.
void validate(const Judgment& j);
/// Checks the D invariants: distinct raw stories, divergent stances and both
/// neutral explanations present. Throws Validation with the failing field.
void validate(const BiasRecord& r);

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

}  // namespace bias_forge
