#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "indexlab/iteration.hpp"

namespace indexlab::cli {

struct Iterate {
  std::string model_path;
  std::int64_t mmax = 20;
  bool csv = false;
};

struct Betti {
  int n = 2;
  std::int64_t qmax = 20;
  bool csv = false;
};

struct Series {
  int n = 2;
  std::int64_t degree = 20;
  bool csv = false;
};

struct MorseCheck {
  std::string models_path;
  std::int64_t horizon = 20;
  std::optional<int> n;  // needed when the file lists no model and no n
  bool csv = false;
};

struct Identity {
  std::string models_path;
};

struct Prove {
  int n = 2;
  std::optional<NcgCase> only;
  std::optional<std::string> json_path;
};

struct VerifyCertificate {
  std::string path;
};

using Command = std::variant<Iterate, Betti, Series, MorseCheck, Identity, Prove, VerifyCertificate>;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Executes one command. Results go to `out`, diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv into a Command and runs it; --help prints usage and exits 0.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace indexlab::cli
