#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace chowfano {
namespace app {

struct RunConfig {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;  // per-check default when unset
    std::string format = "table";         // json | md | table
    std::string cache_path;               // empty = no persistent cache
    std::string out_dir = ".";
};

// exit status contract: 0 ok, 1 internal error, 2 non-audited golden mismatch
int run_reproduce(const std::string& target, const RunConfig& cfg, std::ostream& out);
int run_symplectic(const std::string& check, const RunConfig& cfg, std::ostream& out);
int run_schubert(const std::string& expr, const RunConfig& cfg, std::ostream& out);

std::uint64_t default_trials(const std::string& check);

}  // namespace app
}  // namespace chowfano
