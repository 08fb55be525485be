#ifndef SHIFTMC_ERRORS_HPP
#define SHIFTMC_ERRORS_HPP

#include <stdexcept>

namespace shiftmc {

/// Precondition breach: the caller violated a documented contract.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A cell below the retention window was requested. This indicates a
/// sequencing bug in the driving estimator; the run must abort.
class ReclaimedCellError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A consumption model failed while being evaluated; carries the sample index.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shiftmc

#endif  // SHIFTMC_ERRORS_HPP
