#include <openssl/evp.h>

#include <cstdio>
#include <memory>

#include "core/errors.hpp"
#include "gateway/chat.hpp"

namespace bias_forge::gateway {

std::string fingerprint(std::string_view model_id, const ChatRequest& request) {
    // unit/record separators keep field boundaries unambiguous
    std::string material;
    material.append(model_id);
    material.push_back('\x1f');
    char temp[40];
    std::snprintf(temp, sizeof temp, "%.17g", request.temperature);
    material.append(temp);
    for (const auto& m : request.messages) {
        material.push_back('\x1e');
        material.append(to_string(m.role));
        material.push_back('\x1f');
        material.append(m.content);
    }

    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), material.data(), material.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw Error(ErrorKind::InvalidArgument, "sha256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        hex.push_back(kHex[digest[i] >> 4]);
        hex.push_back(kHex[digest[i] & 0xF]);
    }
    return hex;
}

}  // namespace bias_forge::gateway
