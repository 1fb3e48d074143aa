#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaugekit {

enum class errc {
  non_exact_division,
  division_by_zero,
  bad_constant_term,
  tolerance_ambiguous,
  non_finite,
  kernel_dimension_mismatch,
  singular_gauge,
  duplicate_centers,
  non_unitary,
  unsupported_group,
  domain_violation,
  not_coprime,
  zero_weight,
  no_sampler,
  not_polynomial,
  zero_weight_at_generic_point,
  pole_persists,
  branch_collision,
  invalid_argument,
};

constexpr std::string_view name(errc code) noexcept {
  switch (code) {
    case errc::non_exact_division: return "NonExactDivision";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::bad_constant_term: return "BadConstantTerm";
    case errc::tolerance_ambiguous: return "ToleranceAmbiguous";
    case errc::non_finite: return "NonFinite";
    case errc::kernel_dimension_mismatch: return "KernelDimensionMismatch";
    case errc::singular_gauge: return "SingularGauge";
    case errc::duplicate_centers: return "DuplicateCenters";
    case errc::non_unitary: return "NonUnitary";
    case errc::unsupported_group: return "UnsupportedGroup";
    case errc::domain_violation: return "DomainViolation";
    case errc::not_coprime: return "NotCoprime";
    case errc::zero_weight: return "ZeroWeight";
    case errc::no_sampler: return "NoSampler";
    case errc::not_polynomial: return "NotPolynomial";
    case errc::zero_weight_at_generic_point: return "ZeroWeightAtGenericPoint";
    case errc::pole_persists: return "PolePersists";
    case errc::branch_collision: return "BranchCollision";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Errors that mean "the mathematics disagreed with the expected identity",
/// as opposed to bad input. The CLI maps these to exit code 2.
constexpr bool is_check_failure(errc code) noexcept {
  switch (code) {
    case errc::non_exact_division:
    case errc::not_polynomial:
    case errc::zero_weight_at_generic_point:
    case errc::pole_persists:
    case errc::kernel_dimension_mismatch:
    case errc::tolerance_ambiguous:
    case errc::branch_collision:
      return true;
    default:
      return false;
  }
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gaugekit
