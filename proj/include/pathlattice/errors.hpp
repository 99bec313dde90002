#pragma once

#include <stdexcept>
#include <string>

namespace pathlattice {

enum class errc {
  missing_rotation_entry,
  disconnected_graph,
  euler_violation,
  outer_face_not_incident_to_sink,
  repeated_edge,
  infinite_face_boundary_requested,
  not_a_circulation,
  disconnected_subgraph,
  not_a_path,
  not_st_planar_embedding,
  not_a_simple_cycle,
  not_a_unit_flow,
  negative_capacity,
  residual_path_exists,
  negative_weight,
  instance_too_large,
  too_many_paths,
  family_too_large,
  no_unique_extremum,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::missing_rotation_entry: return "MissingRotationEntry";
    case errc::disconnected_graph: return "DisconnectedGraph";
    case errc::euler_violation: return "EulerViolation";
    case errc::outer_face_not_incident_to_sink: return "OuterFaceNotIncidentToSink";
    case errc::repeated_edge: return "RepeatedEdge";
    case errc::infinite_face_boundary_requested: return "InfiniteFaceBoundaryRequested";
    case errc::not_a_circulation: return "NotACirculation";
    case errc::disconnected_subgraph: return "DisconnectedSubgraph";
    case errc::not_a_path: return "NotAPath";
    case errc::not_st_planar_embedding: return "NotStPlanarEmbedding";
    case errc::not_a_simple_cycle: return "NotASimpleCycle";
    case errc::not_a_unit_flow: return "NotAUnitFlow";
    case errc::negative_capacity: return "NegativeCapacity";
    case errc::residual_path_exists: return "ResidualPathExists";
    case errc::negative_weight: return "NegativeWeight";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::too_many_paths: return "TooManyPaths";
    case errc::family_too_large: return "FamilyTooLarge";
    case errc::no_unique_extremum: return "NoUniqueExtremum";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pathlattice
