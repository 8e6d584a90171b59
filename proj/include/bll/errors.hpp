#pragma once

#include <stdexcept>
#include <string>

namespace bll {

// Malformed input: bad rational syntax, zero denominator, wrong JSON shape.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A form system that cannot support the functional: some pair of forms is
// linearly dependent (or a form is identically zero).
struct degenerate_error : std::runtime_error {
  explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked outside its stated domain (non-positive measure
// where positive is required, truncation amounts exceeding the measure, ...).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency certificate failed. These are never expected on
// valid inputs; they indicate a bug rather than a bad input.
struct certificate_error : std::runtime_error {
  explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

// Half-plane intersection without two independent bounding strips.
struct unbounded_error : std::runtime_error {
  explicit unbounded_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bll
