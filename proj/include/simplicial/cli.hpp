#pragma once

#include <string>
#include <utility>
#include <vector>

namespace simplicial {

/**
 * Result of one command. Non-property commands only report results;
 * property commands add PASS/FAIL lines and decide the exit status.
 */
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::string> details;
    std::vector<std::pair<std::string, bool>> properties;
    std::string error;
    double seconds = 0;
    bool show_timing = false;
    bool machine = false;

    bool ok() const;
    /// 0 success, 1 a property failed, 2 usage or input error.
    int exit_code() const;
    std::string text() const;
    std::string machine_text() const;
    std::string render() const { return machine ? machine_text() : text(); }
};

/// Runs "command --flag value ..." (no program name). Never throws.
RunReport run(const std::vector<std::string>& args);

}  // namespace simplicial
