#pragma once

#include <stdexcept>
#include <string>

namespace lk {

// Error categories map onto CLI exit codes: input -> 1, analysis -> 2,
// budget/precision -> 3.
enum class ErrorKind { Input, Analysis, Budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct AnalysisError : Error {
  explicit AnalysisError(const std::string& w)
      : Error(ErrorKind::Analysis, w) {}
};
struct BudgetError : Error {
  explicit BudgetError(const std::string& w) : Error(ErrorKind::Budget, w) {}
};

}  // namespace lk
