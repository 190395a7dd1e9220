#pragma once

#include <stdexcept>
#include <string>

namespace satbench {

// Base class for all toolkit errors. Subclasses exist so callers can
// distinguish failure kinds without string matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numeric input outside its documented domain (score, probability, exponent).
class RangeError : public Error {
public:
    using Error::Error;
};

// Token not in a closed vocabulary (scale, availability, curation, ...).
class VocabularyError : public Error {
public:
    using Error::Error;
};

// Date pair in the wrong order (as_of before released_on).
class OrderingError : public Error {
public:
    using Error::Error;
};

// Malformed file content; message carries line / record number.
class ParseError : public Error {
public:
    using Error::Error;
};

// Required column or field absent from an input file.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Leaderboard has fewer entries than the configured k.
class InsufficientDataError : public Error {
public:
    InsufficientDataError(const std::string& msg, int found, int required)
        : Error(msg), found_(found), required_(required) {}
    int found() const { return found_; }
    int required() const { return required_; }

private:
    int found_;
    int required_;
};

// Required field absent on an otherwise well-formed record.
class MissingFieldError : public Error {
public:
    using Error::Error;
};

// Statistical input sizes invalid (length mismatch, too few samples).
class SizeError : public Error {
public:
    using Error::Error;
};

// Correlation undefined (zero variance input).
class UndefinedCorrelationError : public Error {
public:
    using Error::Error;
};

// Rank-deficient regression design; message names the dependent column.
class CollinearityError : public Error {
public:
    using Error::Error;
};

// Invalid run configuration (n_boot too small, bad bin edges, missing seed).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Hypothesis group too small to test; message names the group.
class SmallGroupError : public Error {
public:
    using Error::Error;
};

// No benchmark in the corpus is analyzable.
class EmptyCorpusError : public Error {
public:
    using Error::Error;
};

// Report inputs derived from different corpus digests.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Filesystem / network failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace satbench
