#pragma once

#include <stdexcept>
#include <string>

namespace qcov {

struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

#define QCOV_ERROR(Name)                                     \
  struct Name : Error {                                      \
    explicit Name(const std::string& msg = "")               \
        : Error(#Name, msg) {}                               \
  }

QCOV_ERROR(ZeroDivision);
QCOV_ERROR(MultiTermInverse);
QCOV_ERROR(PoleAtOne);
QCOV_ERROR(RecursionInconsistent);
QCOV_ERROR(HighestWeightNotFound);
QCOV_ERROR(OrthogonalityFailure);
QCOV_ERROR(NonOrientable);
QCOV_ERROR(CovarianceBroken);
QCOV_ERROR(DualityMismatch);
QCOV_ERROR(NoConsistentSet);
QCOV_ERROR(DimensionMismatch);
QCOV_ERROR(ParseError);

#undef QCOV_ERROR

}  // namespace qcov
