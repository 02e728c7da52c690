#include "basecomb/verify.hpp"

#include <algorithm>
#include <utility>

namespace basecomb {

std::string to_string(const ExactValue& v) {
  if (const auto* r = std::get_if<Rat>(&v)) return r->get_str();
  return std::get<BivarPoly>(v).to_string();
}

namespace {

bool holds(const ExactValue& lhs, const ExactValue& rhs, Relation relation) {
  if (relation == Relation::equal) return lhs == rhs;
  const auto* l = std::get_if<Rat>(&lhs);
  const auto* r = std::get_if<Rat>(&rhs);
  return l != nullptr && r != nullptr && *l <= *r;
}

std::string join(const std::vector<Rat>& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += params[i].get_str();
  }
  return out + ")";
}

}  // namespace

VerifyResult make_result(std::string id, std::vector<Rat> params, ExactValue lhs, ExactValue rhs,
                         Relation relation) {
  VerifyResult r;
  r.identity_id = std::move(id);
  r.pass = holds(lhs, rhs, relation);
  if (!r.pass) r.counterexample = params;
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.relation = relation;
  return r;
}

VerifyResult combine(std::string id, std::vector<Rat> params, std::vector<VerifyResult> parts) {
  VerifyResult r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.lhs = Rat(0);
  r.rhs = Rat(0);
  r.pass = true;
  const auto failing = std::find_if(parts.begin(), parts.end(), [](const VerifyResult& p) { return !p.pass; });
  if (failing != parts.end()) {
    r.pass = false;
    r.lhs = failing->lhs;
    r.rhs = failing->rhs;
    r.relation = failing->relation;
    r.counterexample = failing->counterexample ? failing->counterexample : failing->params;
  } else if (!parts.empty()) {
    r.lhs = parts.back().lhs;
    r.rhs = parts.back().rhs;
    r.relation = parts.back().relation;
  }
  r.parts = std::move(parts);
  return r;
}

std::string describe(const VerifyResult& r) {
  std::string out = r.identity_id + " " + join(r.params) + ": " + (r.pass ? "PASS" : "FAIL");
  out += " lhs=" + to_string(r.lhs);
  out += r.relation == Relation::equal ? " rhs=" : " bound=";
  out += to_string(r.rhs);
  if (r.counterexample && *r.counterexample != r.params) out += " at " + join(*r.counterexample);
  return out;
}

}  // namespace basecomb
