#pragma once

// Command implementations behind the `sheafcalc` executable. Each returns the
// process exit code and writes its report to `out`.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sheafcalc/caps.hpp"

namespace sheafcalc::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2, kCapExceeded = 3 };

struct Options {
  Caps caps;
  bool json = false;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Exactly one of the three is set.
struct Property {
  std::optional<std::string> logic;
  std::optional<std::string> term;
  std::optional<std::string> sequent;
};

int cmd_validate(const std::filesystem::path& path, const Options& opt, std::ostream& out);
int cmd_check(const std::filesystem::path& path, const Property& prop, const Options& opt, std::ostream& out);
int cmd_ltop(const std::filesystem::path& path, const Property& prop, const std::optional<std::filesystem::path>& output,
             const Options& opt, std::ostream& out);
int cmd_frame_quotient(const std::filesystem::path& path, const std::vector<std::string>& seeds, const Options& opt,
                       std::ostream& out);
int cmd_lsub(const std::filesystem::path& path, const Property& prop, const Options& opt, std::ostream& out);
/// No path: the built-in oracle matrix over the category catalog.
int cmd_corpus(const std::optional<std::filesystem::path>& suite, const Options& opt, std::ostream& out);

/// Parses arguments, resolves caps (defaults, then $SHEAFCALC_CONFIG, then
/// flags) and maps exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sheafcalc::cli
