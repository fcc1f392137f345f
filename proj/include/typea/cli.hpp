#pragma once

#include <ostream>
#include <span>
#include <string>

namespace typea::cli {

/// Environment variable naming the character-table cache directory when
/// --cache-dir is not given.
inline constexpr const char* kCacheDirEnv = "TYPEA_CACHE_DIR";

/// Runs one command. Returns 0 on success, 1 on domain errors (one-line
/// diagnostic on `err`), 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace typea::cli
