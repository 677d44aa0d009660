#ifndef MAGNON_ERRORS_HPP
#define MAGNON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magnon {

// Bad arguments, inconsistent dimensions, failed config validation.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Solver breakdowns (eigensolver non-convergence, singular systems, ...).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem problems while writing artifacts.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace magnon

#endif
