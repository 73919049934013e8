#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <lndkit/automorphism.hpp>
#include <lndkit/derivation.hpp>

namespace lnd::tools {

// paper-discrepancy: the computation succeeded and contradicts a printed
// formula; it does not fail a run.
enum class Status { Pass, Fail, PaperDiscrepancy };

std::string_view to_string(Status s);

struct Witness {
    std::string label;
    std::string value;
};

struct CaseResult {
    Status status = Status::Pass;
    std::string summary;
    std::vector<Witness> witnesses;
};

struct VerificationCase {
    std::string id;
    std::string category; // derivation, automorphism, surface, cocycle or graph
    std::string title;
    std::function<CaseResult()> run;
};

struct CaseOutcome {
    std::string id;
    std::string category;
    std::string title;
    CaseResult result;
    double seconds = 0.0;
};

struct RunReport {
    std::vector<CaseOutcome> cases; // sorted by id

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
};

class UnknownCase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The built-in registry, sorted by id.
std::vector<VerificationCase> builtin_cases();

// Cases for user files; they extend the built-in registry.
VerificationCase derivation_file_case(const std::string &id, const std::string &path, unsigned bound);
VerificationCase map_pair_case(const std::string &id, const std::string &forward_path, const std::string &inverse_path);

// nullopt selects every case; ids must exist (UnknownCase otherwise) and
// repeated ids run once. Cases run concurrently on up to `jobs` threads (0 = hardware
// concurrency); the report is ordered by id.
RunReport run_suite(const std::vector<VerificationCase> &registry, const std::optional<std::vector<std::string>> &selection,
                    unsigned jobs = 0);

inline constexpr int kReportSchemaVersion = 1;

// Witnesses are omitted for passing cases. Wall-times are included only on
// request so that default reports are byte-identical across runs.
nlohmann::ordered_json report_json(const RunReport &r, bool include_timing = false);
std::string report_text(const RunReport &r, bool include_timing = false);

// Surface summary: fiber over 0, cocycle checks and the two printed-formula
// discrepancies.
nlohmann::ordered_json surface_report_json();
std::string surface_report_text();

// exp(m*d) for a derivation file and multiplier text; lets from the file are
// visible in the multiplier.
PolyMap exp_command(std::string_view derivation_text, std::string_view multiplier, unsigned bound);

std::string read_file(const std::string &path);

} // namespace lnd::tools
