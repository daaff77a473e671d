#include "core/errors.hpp"
#include "core/types.hpp"

namespace bias_forge {

void validate(const Judgment& j) {
    if (trim(j.explanation).empty()) {
        throw Error(ErrorKind::Validation, "judgment explanation is empty");
    }
}

void validate(const BiasRecord& r) {
    const auto id = std::to_string(r.pair.pair_id);
    if (r.pair.male_story == r.pair.female_story) {
        throw Error(ErrorKind::Validation, "pair " + id + ": male and female stories are identical");
    }
    if (r.male_judgment.stance == r.female_judgment.stance) {
        throw Error(ErrorKind::Validation, "pair " + id + ": stances do not diverge");
    }
    validate(r.male_judgment);
    validate(r.female_judgment);
    if (trim(r.male_neutral.explanation).empty()) {
        throw Error(ErrorKind::Validation, "pair " + id + ": male neutral explanation is empty");
    }
    if (trim(r.female_neutral.explanation).empty()) {
        throw Error(ErrorKind::Validation, "pair " + id + ": female neutral explanation is empty");
    }
}

}  // namespace bias_forge
