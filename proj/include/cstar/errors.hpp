#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

// Base for all workbench errors. `code()` is the stable machine-readable
// identifier used in CLI/JSON output.
class Error : public std::runtime_error {
  std::string code_;

public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }
};

#define CSTAR_DEFINE_ERROR(Name, code_str)                                    \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string &what) : Error(code_str, what) {}         \
  }

CSTAR_DEFINE_ERROR(DivisionByZero, "division_by_zero");
CSTAR_DEFINE_ERROR(AlphabetMismatch, "alphabet_mismatch");
CSTAR_DEFINE_ERROR(ExpansionBudgetExceeded, "expansion_budget_exceeded");
CSTAR_DEFINE_ERROR(DimensionMismatch, "dimension_mismatch");
CSTAR_DEFINE_ERROR(IndexOutOfRange, "index_out_of_range");
CSTAR_DEFINE_ERROR(NonScalarKernel, "non_scalar_kernel");
CSTAR_DEFINE_ERROR(SingularKernel, "singular_kernel");
CSTAR_DEFINE_ERROR(NotAProjection, "not_a_projection");
CSTAR_DEFINE_ERROR(TrivialProjection, "trivial_projection");
CSTAR_DEFINE_ERROR(NotDegreeZero, "not_degree_zero");
CSTAR_DEFINE_ERROR(NotAnInvolution, "not_an_involution");
CSTAR_DEFINE_ERROR(NotInCorner, "not_in_corner");
CSTAR_DEFINE_ERROR(NotInReducedAlgebra, "not_in_reduced_algebra");
CSTAR_DEFINE_ERROR(NotCoIsometry, "not_co_isometry");
CSTAR_DEFINE_ERROR(NotUnitary, "not_unitary");
CSTAR_DEFINE_ERROR(OrderNotVerified, "order_not_verified");
CSTAR_DEFINE_ERROR(NotOrthogonal, "not_orthogonal");
CSTAR_DEFINE_ERROR(SyntaxError, "syntax_error");
CSTAR_DEFINE_ERROR(ConfigError, "config_error");

#undef CSTAR_DEFINE_ERROR

} // namespace cstar
