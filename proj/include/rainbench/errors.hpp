#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rainbench {

/// Base of every error this library throws. The three direct subclasses map
/// onto the CLI exit codes: UsageError -> 1, DataError -> 2, DetectorError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class DetectorError : public Error {
public:
    using Error::Error;
};

// imaging
class FileNotFoundError : public DataError { public: using DataError::DataError; };
class UnsupportedFormatError : public DataError { public: using DataError::DataError; };
class CorruptDataError : public DataError { public: using DataError::DataError; };
class IoError : public DataError { public: using DataError::DataError; };
class InvalidSigmaError : public DataError { public: using DataError::DataError; };

// quality / deteval
class DimensionMismatchError : public DataError { public: using DataError::DataError; };
class MixedClassOrImageError : public DataError { public: using DataError::DataError; };
class NoGroundTruthError : public DataError { public: using DataError::DataError; };

// rainsim
class NotRgbError : public DataError { public: using DataError::DataError; };

// calibrate
class EmptyAcceptanceSetError : public DataError { public: using DataError::DataError; };
class InsufficientPointsError : public DataError { public: using DataError::DataError; };
class DegenerateXError : public DataError { public: using DataError::DataError; };

// pipeline
class BadConfigError : public DataError { public: using DataError::DataError; };
class MissingDatasetError : public DataError { public: using DataError::DataError; };
class ZeroBaselineError : public DataError { public: using DataError::DataError; };

class DetectorFailedError : public DetectorError {
public:
    DetectorFailedError(double level_mm_h, int exit_code, const std::string& what)
        : DetectorError(what), level_mm_h(level_mm_h), exit_code(exit_code) {}
    double level_mm_h;
    int exit_code;
};

class MissingDetectionsError : public DetectorError {
public:
    MissingDetectionsError(std::vector<std::string> missing, const std::string& what)
        : DetectorError(what), missing(std::move(missing)) {}
    std::vector<std::string> missing;
};

} // namespace rainbench
