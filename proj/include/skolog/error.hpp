#pragma once

#include <stdexcept>
#include <string>

namespace skolog {

/// Runtime error with a machine-readable kind such as "instantiation_error"
/// or "unanswered_question". Distinct from goal failure: it aborts the query.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace skolog
