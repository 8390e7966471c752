#pragma once

#include <iosfwd>
#include <string>

#include "orthograph/field.hpp"

namespace orthograph::cli {

struct VerifyOptions {
  FieldCtx field;
  std::size_t n;
  unsigned jobs = 1;
  std::uint64_t max_size;
};

/// Runs the named suite (lemma1, lemma2, lemma3, lemma4, theorem1) and
/// writes one PASS/FAIL line per check plus a summary. The report is
/// identical for any worker count. Returns true when every check passed.
/// Throws Error(ParseError) for an unknown suite name.
bool run_verification(const std::string& suite, const VerifyOptions& options, std::ostream& out);

}  // namespace orthograph::cli
