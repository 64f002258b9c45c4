#pragma once

#include "pw/hopf/io.hpp"

#include <optional>
#include <string>

namespace pw::cli {

using hopf::json;

/// Shared flags: --field-override reinterprets the scalars of a loaded
/// algebra over F_p, --bound truncates freecat verification widths, --out
/// writes the report (and exported algebras) to a file, --text switches the
/// rendering. max_scan is seeded from the PW_MAX_SCAN environment variable.
struct Options {
    std::optional<std::uint64_t> field_override;
    std::uint32_t bound = 3;
    std::string out;
    bool text = false;
    std::uint64_t max_scan = hopf::kDefaultMaxScan;
};

/// Result of one command: status=ok iff every sub-check passed; findings
/// are emitted in a deterministic order so reports are byte-identical
/// across runs.
struct Report {
    std::string command;
    bool ok = false;
    json findings;

    json to_json() const;
    std::string to_text() const;
    /// 0 = all checks pass, 1 = a mathematical check failed.
    int exit_code() const { return ok ? 0 : 1; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

std::uint64_t max_scan_from_env();

Report cmd_hopf_check(const std::string& path, const Options& opt = {});
Report cmd_grouplikes(const std::string& path, const Options& opt = {});
Report cmd_characters(const std::string& path, const Options& opt = {});
Report cmd_pii(const std::string& path, const Options& opt = {});

Report cmd_double(const std::string& path, const std::string& kind, const Options& opt = {});
Report cmd_iso(const std::string& path, const Options& opt = {});
Report cmd_kappa(const std::string& path, const Options& opt = {});

Report cmd_freecat_relations(const Options& opt = {});
Report cmd_freecat_halfbraidings(std::uint32_t n, const Options& opt = {});
Report cmd_freecat_zeta(bool verify, const Options& opt = {});
Report cmd_freecat_noninduced(const Options& opt = {});

/// Renders the report to stdout (honouring opt.text / opt.out) and maps it
/// to the exit-code contract.
int emit(const Report& rep, const Options& opt);

}  // namespace pw::cli
