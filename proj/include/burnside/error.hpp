#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace burnside {

// Every engine failure carries a stable machine-readable code next to the
// message; the CLI turns these into exit-2 error objects.
class EngineError : public std::runtime_error {
public:
  EngineError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define BURNSIDE_ERROR(Name)                                      \
  class Name : public EngineError {                               \
  public:                                                         \
    explicit Name(const std::string& msg) : EngineError(#Name, msg) {} \
  }

BURNSIDE_ERROR(OrderBoundExceeded);
BURNSIDE_ERROR(SubgroupMismatch);
BURNSIDE_ERROR(InternalCheckFailed);
BURNSIDE_ERROR(FreenessViolated);
BURNSIDE_ERROR(NotRightFaithful);
BURNSIDE_ERROR(MiddleMismatch);
BURNSIDE_ERROR(EndpointMismatch);
BURNSIDE_ERROR(NotInjective);
BURNSIDE_ERROR(GroupNotInFamily);
BURNSIDE_ERROR(OverflowPoisoned);
BURNSIDE_ERROR(DecompositionNotUnique);
BURNSIDE_ERROR(InputError);

#undef BURNSIDE_ERROR

}  // namespace burnside
