#pragma once

#include <string>

#include "jseq/jfunction.hpp"

namespace jseq {

std::string sha256_hex(std::string_view data);

// Cache file layout (UTF-8 text):
//   jseq-cache v1 N=<count> route=<tag> sha256=<hex of payload>
//   -1<TAB>1
//   0<TAB>744
//   ...
// One line per coefficient in ascending n starting at -1, exact decimal
// rendering. The checksum covers everything after the header line.
void cache_store(const CoefficientTable& table, const std::string& path);
CoefficientTable cache_load(const std::string& path);  // source becomes "cache"

// True when the file exists, verifies, and covers c(0..count-1).
bool cache_covers(const std::string& path, long count);

}  // namespace jseq
