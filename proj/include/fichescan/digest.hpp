#pragma once

#include <openssl/evp.h>

#include <string>
#include <string_view>

#include "fichescan/errors.hpp"

namespace fichescan {

/// Lowercase hex SHA-256 of the exact input bytes. Used for replay-store
/// keys and snapshot checksums.
inline std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &md_len, EVP_sha256(), nullptr) != 1) {
        throw IoError("digest computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(md_len * 2);
    for (unsigned int i = 0; i < md_len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

}  // namespace fichescan
