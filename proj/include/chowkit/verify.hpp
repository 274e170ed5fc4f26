#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chowkit {

/// Structured record of one verified computation: named values computed by
/// the engine next to the expected values and their provenance. Arithmetic is
/// exact, so pass means exact equality of every pair.
struct VerificationReport {
    std::string case_name;
    int r = 0;
    int n = 0;
    std::vector<std::pair<std::string, std::string>> result;
    std::vector<std::pair<std::string, std::string>> expected;
    std::string provenance;  // "paper" | "derived" | "none"
    bool pass = false;
    long long millis = 0;
    std::vector<std::string> notes;  // shown in text mode only
};

/// Names of every registered verification case, in report order.
const std::vector<std::string>& all_case_names();
bool is_known_case(const std::string& name);

/// Runs one case; throws std::invalid_argument for unknown names.
VerificationReport run_case(const std::string& name);

/// Runs the given cases with at most `threads` workers; reports come back in
/// the order the names were given regardless of scheduling.
std::vector<VerificationReport> run_cases(const std::vector<std::string>& names, int threads);

/// CHOWKIT_THREADS when set (must be a positive integer), else the hardware
/// concurrency. Throws std::invalid_argument on malformed values.
int default_thread_count();

std::string render_text(const std::vector<VerificationReport>& reports, bool timings);
/// Canonical JSON: fixed key order, exact values as strings, trailing
/// newline. Byte-identical across runs unless `timings` is requested.
std::string render_json(const std::vector<VerificationReport>& reports, bool timings);

}  // namespace chowkit
