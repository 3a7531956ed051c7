#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlax/rational.hpp"

namespace qlax {

enum class Format { Text, Json };

/// Exit codes: every command returns one of these.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

struct CommonOptions {
    std::optional<int> qorder;
    std::optional<int> depth;
    Format format = Format::Text;
    std::uint64_t seed = 0;
    /// Contents of a probe-set file, {"schema": "qlax.probes/1", "probes": [...]}.
    std::optional<std::string> probe_set;
};

struct CommandResult {
    int exit_code = kExitPass;
    std::string out;  // stdout
    std::string err;  // stderr
};

/// "text" / "json"; a non-empty env value wins over the flag. Throws ValidationError.
Format resolve_format(std::string_view flag, const char* env);

CommandResult cmd_commutator(const std::string& a, const std::string& b, const CommonOptions& opts);
CommandResult cmd_kdv_verify(const std::optional<Rational>& perturb, const CommonOptions& opts);
CommandResult cmd_lax_solve(const std::string& problem_text, const CommonOptions& opts);
CommandResult cmd_symmetry(const std::string& problem_text, const CommonOptions& opts);
CommandResult cmd_convergence(const std::string& problem_text, const std::vector<Rational>& qs,
                              std::optional<int> refN, const CommonOptions& opts);

} // namespace qlax
