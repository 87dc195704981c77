#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "biq/biquasigroup.hpp"

namespace biq {

/// Reads a two-block table file (∘ first, then *) and validates both blocks
/// as Latin squares of one order.
Biquasigroup ingest_biquasigroup(const std::string& path);

/// Runs one `biq` invocation; args excludes the program name. Returns the
/// exit status: 0 success, 1 identity refuted (check only), 2 misuse or
/// invalid input.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace biq
