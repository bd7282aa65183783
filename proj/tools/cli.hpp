#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqcheck/sequence_engine.hpp"

namespace seqcheck::cli {

enum class OutputFormat { Table, Csv, Json, Bfile };

enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Raised for bad arguments; maps to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputFormat parse_format(std::string_view name);

/// One line "<n> <value>\n" per record, ASCII, no header.
std::string render_bfile(std::span<const SequenceRecord> records);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is an ExitStatus.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace seqcheck::cli
