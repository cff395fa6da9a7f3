#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/point_set.hpp"

namespace fintop {

enum class ErrorCode {
  empty_carrier,
  carrier_too_large,
  carrier_too_large_for_search,
  point_out_of_range,
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  not_reflexive,
  not_transitive,
  invalid_subset,
  invalid_partition,
  invalid_map,
  not_surjective,
  unknown_spec,
  order_too_large,
  invalid_group,
  carrier_mismatch,
  not_a_subgroup,
  not_a_homomorphism,
  not_semitopological,
  domain_not_semitopological,
  not_topology_preserving,
  size_too_large,
  unknown_suite,
  unknown_target,
  bounds_too_large,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. Validation errors that have a
/// concrete offending pair of subsets carry it in witnesses().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, std::vector<PointSet> witnesses = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<PointSet>& witnesses() const noexcept { return witnesses_; }

 private:
  ErrorCode code_;
  std::vector<PointSet> witnesses_;
};

}  // namespace fintop
