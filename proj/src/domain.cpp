#include "satbench/domain.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

namespace satbench {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_int_field(const std::string& s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

const std::array<const char*, 12> kMonthAbbrev = {"jan", "feb", "mar", "apr", "may", "jun",
                                                  "jul", "aug", "sep", "oct", "nov", "dec"};

}  // namespace

int days_in_month(int year, int month) {
    static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[month - 1];
}

bool is_valid_date(int year, int month, int day) {
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

Date Date::parse_iso(const std::string& text) {
    const std::string t = trim(text);
    if (t.size() != 10 || t[4] != '-' || t[7] != '-')
        throw ParseError("invalid ISO-8601 date '" + text + "' (expected YYYY-MM-DD)");
    int y = 0, m = 0, d = 0;
    if (!parse_int_field(t.substr(0, 4), y) || !parse_int_field(t.substr(5, 2), m) ||
        !parse_int_field(t.substr(8, 2), d))
        throw ParseError("invalid ISO-8601 date '" + text + "' (non-numeric component)");
    if (!is_valid_date(y, m, d))
        throw ParseError("invalid calendar date '" + text + "'");
    return Date{y, m, d};
}

Date Date::parse_flexible(const std::string& text, bool* day_imputed) {
    const std::string t = trim(text);
    if (day_imputed) *day_imputed = false;
    if (t.size() == 10) return parse_iso(t);
    // "YYYY-MM"
    if (t.size() == 7 && t[4] == '-') {
        int y = 0, m = 0;
        if (parse_int_field(t.substr(0, 4), y) && parse_int_field(t.substr(5, 2), m) &&
            is_valid_date(y, m, 1)) {
            if (day_imputed) *day_imputed = true;
            return Date{y, m, 1};
        }
    }
    // "Mon YYYY"
    if (t.size() == 8 && t[3] == ' ') {
        const std::string mon = lower(t.substr(0, 3));
        int y = 0;
        for (int i = 0; i < 12; ++i) {
            if (mon == kMonthAbbrev[i] && parse_int_field(t.substr(4, 4), y)) {
                if (day_imputed) *day_imputed = true;
                return Date{y, i + 1, 1};
            }
        }
    }
    throw ParseError("unrecognized date '" + text + "' (expected YYYY-MM-DD, YYYY-MM, or 'Mon YYYY')");
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

int age_in_months(const Date& released_on, const Date& as_of) {
    if (as_of < released_on)
        throw OrderingError("as_of " + as_of.to_string() + " precedes released_on " +
                            released_on.to_string());
    int months = (as_of.year - released_on.year) * 12 + (as_of.month - released_on.month);
    if (as_of.day < released_on.day) --months;
    return months;
}

std::string to_string(Scale s) {
    return s == Scale::Percent ? "percent" : "fraction";
}

Scale parse_scale(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "percent") return Scale::Percent;
    if (t == "fraction") return Scale::Fraction;
    throw VocabularyError("unknown scale '" + token + "' (accepted: fraction, percent)");
}

double normalize_score(double raw, Scale scale) {
    if (!std::isfinite(raw))
        throw RangeError("score must be finite, got " + std::to_string(raw));
    if (scale == Scale::Percent) {
        if (raw < 0.0 || raw > 100.0)
            throw RangeError("score " + std::to_string(raw) +
                             " out of range [0,100] for scale percent");
        return raw / 100.0;
    }
    if (raw < 0.0 || raw > 1.0)
        throw RangeError("score " + std::to_string(raw) + " out of range [0,1] for scale fraction");
    return raw;
}

LeaderboardSnapshot LeaderboardSnapshot::create(std::string benchmark_id, Date snapshot_date,
                                                std::vector<ScoreEntry> entries,
                                                long long test_set_size) {
    if (trim(benchmark_id).empty()) throw ParseError("snapshot benchmark_id must be non-empty");
    if (test_set_size < 1)
        throw RangeError("test_set_size must be >= 1 for '" + benchmark_id + "', got " +
                         std::to_string(test_set_size));
    for (auto& e : entries) {
        e.model_name = trim(e.model_name);
        if (e.model_name.empty())
            throw ParseError("empty model name in snapshot '" + benchmark_id + "'");
        e.score = normalize_score(e.raw_score, e.scale);
    }
    std::sort(entries.begin(), entries.end(), [](const ScoreEntry& a, const ScoreEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.model_name < b.model_name;
    });
    std::set<std::string> seen;
    for (const auto& e : entries) {
        if (!seen.insert(e.model_name).second)
            throw ParseError("duplicate model '" + e.model_name + "' in snapshot '" +
                             benchmark_id + "'");
    }
    LeaderboardSnapshot snap;
    snap.benchmark_id = trim(benchmark_id);
    snap.snapshot_date = snapshot_date;
    snap.entries = std::move(entries);
    snap.test_set_size = test_set_size;
    return snap;
}

void SaturationConfig::validate() const {
    if (k < 2) throw RangeError("k must be >= 2, got " + std::to_string(k));
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw RangeError("alpha must be in [0,1], got " + std::to_string(alpha));
    if (!(z > 0.0)) throw RangeError("z must be > 0, got " + std::to_string(z));
}

std::string to_string(BucketLabel b) {
    switch (b) {
        case BucketLabel::VeryLow: return "very_low";
        case BucketLabel::Low: return "low";
        case BucketLabel::Moderate: return "moderate";
        case BucketLabel::High: return "high";
        case BucketLabel::VeryHigh: return "very_high";
    }
    return "very_low";
}

std::string to_string(Availability v) {
    return v == Availability::Public ? "public" : "private";
}

std::string to_string(Languages v) {
    return v == Languages::EnglishOnly ? "english_only" : "multilingual";
}

std::string to_string(Curation v) {
    switch (v) {
        case Curation::Expert: return "expert";
        case Curation::Crowdsourced: return "crowdsourced";
        case Curation::Synthetic: return "synthetic";
        case Curation::Hybrid: return "hybrid";
        case Curation::Scraped: return "scraped";
    }
    return "expert";
}

std::string to_string(InputFormat v) {
    switch (v) {
        case InputFormat::QaMcq: return "qa_mcq";
        case InputFormat::Instruction: return "instruction";
        case InputFormat::Coding: return "coding";
        case InputFormat::Agentic: return "agentic";
    }
    return "qa_mcq";
}

std::string to_string(OutputFormat v) {
    return v == OutputFormat::ClosedEnded ? "closed_ended" : "open_ended";
}

Availability parse_availability(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "public") return Availability::Public;
    if (t == "private") return Availability::Private;
    throw VocabularyError("unknown availability '" + token + "' (accepted: public, private)");
}

Languages parse_languages(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "english_only" || t == "english" || t == "en") return Languages::EnglishOnly;
    if (t == "multilingual" || t == "multi" || t == "mixed") return Languages::Multilingual;
    throw VocabularyError("unknown languages value '" + token +
                          "' (accepted: english_only, multilingual)");
}

Curation parse_curation(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "expert" || t == "expert human") return Curation::Expert;
    if (t == "crowdsourced") return Curation::Crowdsourced;
    if (t == "synthetic" || t == "llm-generated") return Curation::Synthetic;
    if (t == "hybrid") return Curation::Hybrid;
    if (t == "scraped" || t == "programmatically scraped") return Curation::Scraped;
    throw VocabularyError("unknown curation '" + token +
                          "' (accepted: expert, crowdsourced, synthetic, hybrid, scraped)");
}

InputFormat parse_input_format(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "qa_mcq" || t == "qa/mcq" || t == "qa (mcq)" || t == "qa") return InputFormat::QaMcq;
    if (t == "instruction") return InputFormat::Instruction;
    if (t == "coding") return InputFormat::Coding;
    if (t == "agentic") return InputFormat::Agentic;
    throw VocabularyError("unknown input_format '" + token +
                          "' (accepted: qa_mcq, instruction, coding, agentic)");
}

OutputFormat parse_output_format(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "closed_ended" || t == "mcq" || t == "closed-ended") return OutputFormat::ClosedEnded;
    if (t == "open_ended" || t == "free-form" || t == "open-ended") return OutputFormat::OpenEnded;
    throw VocabularyError("unknown output_format '" + token +
                          "' (accepted: closed_ended, open_ended)");
}

void BenchmarkAnnotation::validate() const {
    if (trim(benchmark_id).empty()) throw ParseError("annotation benchmark_id must be non-empty");
    if (sample_count < 1)
        throw RangeError("sample_count must be >= 1 for '" + benchmark_id + "', got " +
                         std::to_string(sample_count));
    if (citations && *citations < 0)
        throw RangeError("citations must be >= 0 for '" + benchmark_id + "'");
    if (report_appearances && *report_appearances < 0)
        throw RangeError("report_appearances must be >= 0 for '" + benchmark_id + "'");
}

std::string canonical_id(const std::string& benchmark_id) {
    return lower(trim(benchmark_id));
}

}  // namespace satbench
