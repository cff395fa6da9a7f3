#include "fintop/error.hpp"

#include <utility>

namespace fintop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_carrier: return "EmptyCarrier";
    case ErrorCode::carrier_too_large: return "CarrierTooLarge";
    case ErrorCode::carrier_too_large_for_search: return "CarrierTooLargeForSearch";
    case ErrorCode::point_out_of_range: return "PointOutOfRange";
    case ErrorCode::missing_empty_or_full: return "MissingEmptyOrFull";
    case ErrorCode::not_closed_under_union: return "NotClosedUnderUnion";
    case ErrorCode::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case ErrorCode::not_reflexive: return "NotReflexive";
    case ErrorCode::not_transitive: return "NotTransitive";
    case ErrorCode::invalid_subset: return "InvalidSubset";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::invalid_map: return "InvalidMap";
    case ErrorCode::not_surjective: return "NotSurjective";
    case ErrorCode::unknown_spec: return "UnknownSpec";
    case ErrorCode::order_too_large: return "OrderTooLarge";
    case ErrorCode::invalid_group: return "InvalidGroup";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::not_a_subgroup: return "NotASubgroup";
    case ErrorCode::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorCode::not_semitopological: return "NotSemitopological";
    case ErrorCode::domain_not_semitopological: return "DomainNotSemitopological";
    case ErrorCode::not_topology_preserving: return "NotTopologyPreserving";
    case ErrorCode::size_too_large: return "SizeTooLarge";
    case ErrorCode::unknown_suite: return "UnknownSuite";
    case ErrorCode::unknown_target: return "UnknownTarget";
    case ErrorCode::bounds_too_large: return "BoundsTooLarge";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail, std::vector<PointSet> witnesses)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      witnesses_(std::move(witnesses)) {}

std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace fintop
