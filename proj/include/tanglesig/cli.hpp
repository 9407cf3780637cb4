#pragma once

// The tanglesig command line. Exit codes: 0 ok, 1 verification failure,
// 2 input error, 3 forbidden or inadmissible omega requested explicitly.

#include <iosfwd>
#include <string>
#include <vector>

namespace tanglesig::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kForbiddenOmega = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Throws ParseError on ragged or empty input.
CsvTable parse_csv(const std::string& text);

/// Step plot of one integer column against the single angle column.
std::string render_step_svg(const CsvTable& table, const std::string& column);

}  // namespace tanglesig::cli
