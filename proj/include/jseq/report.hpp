#pragma once

#include <map>
#include <string>
#include <vector>

namespace jseq {

enum class Outcome { pass, fail, unresolved };
const char* outcome_name(Outcome o);

struct Witness {
    std::string name;
    std::string value;
};

struct CheckEntry {
    long n = 0;
    std::string label;  // replaces n as the key when non-empty
    Outcome outcome = Outcome::unresolved;
    std::vector<Witness> witnesses;
    long precision_used = 0;  // bits; 0 means exact integer arithmetic
    bool below_threshold = false;

    std::string key() const { return label.empty() ? std::to_string(n) : label; }
};

struct Summary {
    long pass = 0, fail = 0, unresolved = 0;
    long total() const { return pass + fail + unresolved; }
};

struct CheckBlock {
    std::string check;
    long n_from = 0, n_to = -1;  // requested range; n_to < n_from for labeled blocks
    std::vector<CheckEntry> entries;
    std::map<std::string, std::string> notes;
    double elapsed_ms = 0;  // volatile: excluded from determinism and diffing

    Summary summary() const;
    bool all_pass() const;
};

struct VerificationReport {
    std::string schema = "jseq-report/1";
    std::string tool;
    std::string timestamp;  // volatile
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<CheckBlock> checks;

    Summary total() const;
};

std::string report_to_json(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);
VerificationReport report_parse_json(const std::string& text);  // ParseError on bad input

struct ReportDiff {
    bool identical_outcomes = true;
    std::vector<std::string> lines;  // one per differing (check, key)
};

// Outcome-level comparison; witnesses, precisions and volatile fields are ignored.
ReportDiff report_diff(const VerificationReport& a, const VerificationReport& b);

std::string iso8601_utc_now();

}  // namespace jseq
