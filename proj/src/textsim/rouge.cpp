#include "textsim/rouge.hpp"

#include <cstdint>
#include <unordered_map>

#include "core/errors.hpp"

namespace bias_forge::textsim {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at text[i] and advances i. Overlong forms,
// surrogates and truncated sequences yield kInvalid and consume one byte.
char32_t decode_utf8(std::string_view text, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kInvalid;
    }
    if (i + len > text.size()) {
        ++i;
        return kInvalid;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(text[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kInvalid;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++i;
        return kInvalid;
    }
    i += len;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_alnum(char32_t cp) {
    if (cp == kInvalid) return false;
    if (cp < 0x80) {
        return in(cp, '0', '9') || in(cp, 'a', 'z') || in(cp, 'A', 'Z');
    }
    if (in(cp, 0x80, 0xBF)) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (in(cp, 0x2000, 0x2BFF)) return false;   // punctuation, symbols, arrows, math
    if (in(cp, 0x3000, 0x303F)) return false;   // CJK punctuation
    if (in(cp, 0xFE10, 0xFE1F) || in(cp, 0xFE30, 0xFE6F)) return false;
    if (in(cp, 0xFF00, 0xFF0F) || in(cp, 0xFF1A, 0xFF20) || in(cp, 0xFF3B, 0xFF40) ||
        in(cp, 0xFF5B, 0xFF65)) {
        return false;
    }
    if (cp == 0xFEFF) return false;
    if (in(cp, 0x1F000, 0x1FAFF)) return false;  // emoji and pictographs
    return true;
}

char32_t to_lower(char32_t cp) {
    if (in(cp, 'A', 'Z')) return cp + 0x20;
    if (cp < 0xC0) return cp;
    if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
    if (in(cp, 0x100, 0x137) || in(cp, 0x14A, 0x177)) return cp | 1;
    if (cp == 0x130) return 'i';
    if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) return (cp & 1) ? cp + 1 : cp;
    if (cp == 0x178) return 0xFF;
    if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
    if (cp == 0x386) return 0x3AC;
    if (in(cp, 0x388, 0x38A)) return cp + 0x25;
    if (cp == 0x38C) return 0x3CC;
    if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
    if (in(cp, 0x410, 0x42F)) return cp + 0x20;
    if (in(cp, 0x400, 0x40F)) return cp + 0x50;
    return cp;
}

}  // namespace

void SimilarityBand::validate() const {
    if (!(0.0 <= tau_lo && tau_lo <= tau_hi && tau_hi <= 1.0)) {
        throw Error(ErrorKind::Config, "similarity band requires 0 <= tau_lo <= tau_hi <= 1");
    }
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const char32_t cp = decode_utf8(text, i);
        if (is_alnum(cp)) {
            encode_utf8(to_lower(cp), current);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

double Rouge1Counts::precision() const noexcept {
    return len_a == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(len_a);
}

double Rouge1Counts::recall() const noexcept {
    return len_b == 0 ? 0.0 : static_cast<double>(overlap) / static_cast<double>(len_b);
}

double Rouge1Counts::f_measure() const noexcept {
    if (len_a == 0 && len_b == 0) return 1.0;
    if (overlap == 0) return 0.0;
    // 2PR/(P+R) with P = o/|a|, R = o/|b| reduces to 2o/(|a|+|b|), which is
    // exactly symmetric in floating point.
    return 2.0 * static_cast<double>(overlap) / static_cast<double>(len_a + len_b);
}

Rouge1Counts rouge1_counts(std::string_view a, std::string_view b) {
    const auto ta = tokenize(a);
    const auto tb = tokenize(b);
    Rouge1Counts counts{0, ta.size(), tb.size()};
    std::unordered_map<std::string_view, std::size_t> remaining;
    for (const auto& t : ta) ++remaining[t];
    for (const auto& t : tb) {
        auto it = remaining.find(t);
        if (it != remaining.end() && it->second > 0) {
            --it->second;
            ++counts.overlap;
        }
    }
    return counts;
}

double rouge1_f(std::string_view a, std::string_view b) { return rouge1_counts(a, b).f_measure(); }

bool within_band(double score, const SimilarityBand& band) noexcept {
    return band.tau_lo <= score && score <= band.tau_hi;
}

}  // namespace bias_forge::textsim
