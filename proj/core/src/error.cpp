#include "skewcorr/error.hpp"

#include "detail.hpp"

namespace skewcorr {

using detail::sci;

NotPositiveSemidefiniteError::NotPositiveSemidefiniteError(double eigenvalue)
    : ValidationError("positive-semidefinite",
                      "eigenvalue " + sci(eigenvalue) +
                          " is below -1e-10"),
      eigenvalue_(eigenvalue) {}

UnsupportedDimensionError::UnsupportedDimensionError(int dim_a,
                                                     const std::string& operation)
    : Error(operation + " requires dA = 2, got dA = " + std::to_string(dim_a)) {}

PurityError::PurityError(double purity)
    : Error("state is not pure: Tr rho^2 = " + sci(purity)),
      purity_(purity) {}

}  // namespace skewcorr
