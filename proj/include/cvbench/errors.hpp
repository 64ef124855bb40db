#ifndef CVBENCH_ERRORS_HPP
#define CVBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvbench {

// Truncation-health failure: a state carries non-negligible weight at the
// top of the retained Fock basis and cannot be trusted downstream.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameter or infeasible request (bad domain, target below a
// family minimum, squeezing cap exceeded, mismatched cutoffs, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed state-spec text or config input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cvbench

#endif
