#pragma once

#include <stdexcept>
#include <string>

namespace auxmean {

// Every failure raised by the library derives from Error so the CLI can map
// it to exit code 1 in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CacheIntegrityError : public Error {
public:
    using Error::Error;
};

}  // namespace auxmean
