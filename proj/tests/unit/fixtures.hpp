#pragma once

#include <string>

#include "hyperpath/text_format.hpp"

namespace hyperpath::testing {

// omega -> A (1), omega -> B (2), S <- A B (0.5), S <- A A (3).
inline const char* const kF1 = R"(vertex omega
arc A <- omega @ 1
arc B <- omega @ 2
arc S <- A B @ 0.5
arc S <- A*2 @ 3
source omega 0
target S
)";

// S <- omega (1) and a self-loop S <- S (1).
inline const char* const kF2 = R"(arc S <- omega @ 1
arc S <- S @ 1
source omega
target S
)";

// U is never reachable, so S <- U omega can never fire.
inline const char* const kF3 = R"(vertex omega
vertex U
vertex S
arc S <- U omega @ 1
source omega
target S
)";

// U is reachable and helps S only through an arc that also needs the
// unreachable V.
inline const char* const kF3b = R"(vertex omega
vertex U
vertex V
vertex S
arc U <- omega @ 1
arc S <- U V @ 1
arc S <- omega @ 1
source omega
target S
)";

inline Document f1() { return parse_document_string(kF1, "f1"); }
inline Document f2() { return parse_document_string(kF2, "f2"); }

inline std::string golden_path(const std::string& name) {
  return std::string(HYPERPATH_GOLDEN_DIR) + "/" + name;
}

}  // namespace hyperpath::testing
