#pragma once

// SHA-256 of files, for run reports and the fixture digest test.

#include <openssl/evp.h>

#include <filesystem>
#include <stdexcept>
#include <string>

#include "markedbases/io.hpp"

namespace mb {

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

inline std::string sha256_file(const std::filesystem::path& p) { return sha256_hex(read_text_file(p)); }

}  // namespace mb
