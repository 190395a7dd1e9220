#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satbench/errors.hpp"

namespace satbench {

// ---------------------------------------------------------------------------
// Calendar dates
// ---------------------------------------------------------------------------

// Proleptic Gregorian calendar date. Immutable after construction; the
// factory functions validate (leap years included).
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    // Strict ISO-8601 "YYYY-MM-DD". Throws ParseError on anything else.
    static Date parse_iso(const std::string& text);

    // "YYYY-MM-DD", "YYYY-MM", or "Mon YYYY" (English month abbreviation).
    // Month-granularity inputs complete to the first of the month and set
    // *day_imputed so ingestion can record the provenance flag.
    static Date parse_flexible(const std::string& text, bool* day_imputed = nullptr);

    std::string to_string() const;  // ISO-8601
};

bool is_valid_date(int year, int month, int day);
int days_in_month(int year, int month);

// Whole calendar months elapsed; a month counts as complete only once the
// day-of-month of as_of has reached that of released_on.
int age_in_months(const Date& released_on, const Date& as_of);

// ---------------------------------------------------------------------------
// Scores and snapshots
// ---------------------------------------------------------------------------

enum class Scale { Fraction, Percent };

std::string to_string(Scale s);
Scale parse_scale(const std::string& token);

// Maps a reported score onto [0,1]. Percent inputs must lie in [0,100],
// fraction inputs in [0,1]; anything else is a RangeError naming the value
// and scale.
double normalize_score(double raw, Scale scale);

struct ScoreEntry {
    std::string model_name;
    double score = 0.0;      // normalized, in [0,1]
    double raw_score = 0.0;  // as reported by the source
    Scale scale = Scale::Fraction;
};

// One benchmark's top-k leaderboard state at a point in time. Entries are
// held in canonical order: score descending, ties broken lexicographically
// by model name so "top k" is deterministic.
struct LeaderboardSnapshot {
    std::string benchmark_id;
    Date snapshot_date;
    std::vector<ScoreEntry> entries;
    long long test_set_size = 0;

    // Validating factory: normalizes scores, sorts into canonical order,
    // rejects duplicate model names and non-positive test set sizes.
    static LeaderboardSnapshot create(std::string benchmark_id, Date snapshot_date,
                                      std::vector<ScoreEntry> entries,
                                      long long test_set_size);
};

struct SaturationConfig {
    int k = 5;
    double alpha = 0.5;
    double z = 1.96;

    void validate() const;  // k >= 2, alpha in [0,1], z > 0
    bool operator==(const SaturationConfig&) const = default;
};

enum class BucketLabel { VeryLow, Low, Moderate, High, VeryHigh };

std::string to_string(BucketLabel b);

// Everything Eqs. of the saturation chain produce for one benchmark.
struct SaturationResult {
    std::string benchmark_id;
    double s1 = 0.0;
    double sk = 0.0;
    double delta = 0.0;
    double n_eff = 0.0;
    double se_delta = 0.0;
    double r_norm = 0.0;  // may be +infinity
    double s_index = 0.0;
    BucketLabel bucket = BucketLabel::VeryLow;
    bool statistically_similar = false;
    SaturationConfig config;
};

// ---------------------------------------------------------------------------
// Benchmark annotations
// ---------------------------------------------------------------------------

enum class Availability { Public, Private };
enum class Languages { EnglishOnly, Multilingual };
enum class Curation { Expert, Crowdsourced, Synthetic, Hybrid, Scraped };
enum class InputFormat { QaMcq, Instruction, Coding, Agentic };
enum class OutputFormat { ClosedEnded, OpenEnded };

std::string to_string(Availability v);
std::string to_string(Languages v);
std::string to_string(Curation v);
std::string to_string(InputFormat v);
std::string to_string(OutputFormat v);

Availability parse_availability(const std::string& token);
Languages parse_languages(const std::string& token);
Curation parse_curation(const std::string& token);
InputFormat parse_input_format(const std::string& token);
OutputFormat parse_output_format(const std::string& token);

// One row of the annotation schema. citations and output_format may be
// absent (citations arrive via the fetch client; one benchmark may have an
// output format outside the closed/open dichotomy); hypotheses that need a
// missing field list the benchmark under their exclusions.
struct BenchmarkAnnotation {
    std::string benchmark_id;
    Date released_on;
    bool released_day_imputed = false;  // month-granularity source date
    std::optional<long long> citations;
    Availability availability = Availability::Public;
    Languages languages = Languages::EnglishOnly;
    Curation curation = Curation::Expert;
    InputFormat input_format = InputFormat::QaMcq;
    std::optional<OutputFormat> output_format;
    std::string metric_name;
    long long sample_count = 1;
    bool templated = false;
    bool has_quality_issues = false;
    std::optional<std::string> issue_sources;
    std::optional<long long> report_appearances;
    // Unknown columns, preserved verbatim and never interpreted.
    std::map<std::string, std::string> extra;

    void validate() const;
};

// The analysis reference date. The source papers report ages in months but
// never pin the date they were measured against, so it is always explicit
// input, never defaulted.
struct AnalysisDate {
    Date as_of;
};

// Case-insensitive, trimmed benchmark-id key used for uniqueness checks and
// cross-file matching.
std::string canonical_id(const std::string& benchmark_id);

}  // namespace satbench
