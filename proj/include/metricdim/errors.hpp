#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metricdim {

/// Error codes raised by the library. Every throw site uses `error`,
/// which pairs one of these codes with a human-readable message.
enum class errc {
  // graph construction
  out_of_range,
  self_loop,
  duplicate_edge,
  edge_within_one_part,
  // graph6 codec
  malformed_header,
  truncated_payload,
  // family generators
  n_too_small,
  m_too_small,
  bad_partition,
  disconnected,
  spec_out_of_closed_form_range,
  // resolving-set machinery
  disconnected_graph,
  budget_exceeded,
  // gap calculus
  too_few_landmarks_on_cycle,
  not_a_complement_family,
  // constructions
  invalid_combination,
  assembly_failed,
  // misc
  distance_overflow,
  bad_landmark,
  bad_format,
};

inline std::string_view to_string(errc c) {
  switch (c) {
    case errc::out_of_range: return "OutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::edge_within_one_part: return "EdgeWithinOnePart";
    case errc::malformed_header: return "MalformedHeader";
    case errc::truncated_payload: return "TruncatedPayload";
    case errc::n_too_small: return "NTooSmall";
    case errc::m_too_small: return "MTooSmall";
    case errc::bad_partition: return "BadPartition";
    case errc::disconnected: return "Disconnected";
    case errc::spec_out_of_closed_form_range: return "SpecOutOfClosedFormRange";
    case errc::disconnected_graph: return "DisconnectedGraph";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::too_few_landmarks_on_cycle: return "TooFewLandmarksOnCycle";
    case errc::not_a_complement_family: return "NotAComplementFamily";
    case errc::invalid_combination: return "InvalidCombination";
    case errc::assembly_failed: return "AssemblyFailed";
    case errc::distance_overflow: return "DistanceOverflow";
    case errc::bad_landmark: return "BadLandmark";
    case errc::bad_format: return "BadFormat";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace metricdim
