#include "lattice_waves/error.hpp"

namespace lattice_waves {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::ModulusOutOfRange: return "MODULUS_OUT_OF_RANGE";
  case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
  case ErrorCode::ContainsIdentity: return "CONTAINS_IDENTITY";
  case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
  case ErrorCode::DoesNotGenerate: return "DOES_NOT_GENERATE";
  case ErrorCode::DuplicateGenerator: return "DUPLICATE_GENERATOR";
  case ErrorCode::InfiniteSubgroup: return "INFINITE_SUBGROUP";
  case ErrorCode::GroupMismatch: return "GROUP_MISMATCH";
  case ErrorCode::NotSolvable: return "NOT_SOLVABLE";
  case ErrorCode::TorsionUnsupported: return "TORSION_UNSUPPORTED";
  case ErrorCode::SInsideH: return "S_INSIDE_H";
  case ErrorCode::CosetInconstant: return "COSET_INCONSTANT";
  case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
  case ErrorCode::InvalidVertex: return "INVALID_VERTEX";
  case ErrorCode::InvalidInput: return "INVALID_INPUT";
  }
  return "UNKNOWN";
}

} // namespace lattice_waves
