#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "basecomb/bivar_poly.hpp"
#include "basecomb/types.hpp"

namespace basecomb {

/// An exactly represented side of an identity. Floating-point quantities
/// are converted to the exact rational they denote.
using ExactValue = std::variant<Rat, BivarPoly>;

std::string to_string(const ExactValue& v);

/// How lhs and rhs are compared. Almost every check is an equality; bound
/// checks (lhs <= rhs) exist for the numeric exponential estimates.
enum class Relation { equal, less_equal };

/// Outcome of checking one identity instance.
///
/// Invariant: pass holds exactly when no counterexample is recorded and
/// `lhs relation rhs` holds. Bundled checks carry their sub-checks in
/// `parts`; the top-level lhs/rhs then mirror the first failing part (or
/// the last part when all pass).
struct VerifyResult {
  std::string identity_id;
  std::vector<Rat> params;
  bool pass = false;
  ExactValue lhs;
  ExactValue rhs;
  Relation relation = Relation::equal;
  std::optional<std::vector<Rat>> counterexample;
  std::vector<VerifyResult> parts;
};

VerifyResult make_result(std::string id, std::vector<Rat> params, ExactValue lhs, ExactValue rhs,
                         Relation relation = Relation::equal);

/// Aggregates sub-checks; passes iff every part passes. An empty bundle passes
/// vacuously with lhs = rhs = 0.
VerifyResult combine(std::string id, std::vector<Rat> params, std::vector<VerifyResult> parts);

/// One-line description: "<id> (p1, p2, ...): PASS|FAIL lhs=... rhs=...".
std::string describe(const VerifyResult& r);

}  // namespace basecomb
