#include "hallmod/context.hpp"

namespace hallmod {

HallContext::HallContext(const Quiver& Q, Budget budget) : Q_(Q) {
  auto problems = validate(Q_);
  if (!problems.empty()) throw ContractViolation("invalid quiver: " + problems.front());
  F_ = std::make_unique<Field>(Q_.q);
  K_ = ScalarField::get(Q_.q);
  reps_ = std::make_unique<RepCatalog>(Q_, *F_, budget);
  sd_ = std::make_unique<SDCatalog>(*reps_);
}

std::string term_key(const RepKey& k) { return "[" + dim_to_string(k.dim) + ";" + std::to_string(k.index) + "]"; }

std::string term_key(const SDKey& k) { return "[" + gw_to_string(k.gw) + ";" + std::to_string(k.index) + "]"; }

std::string scalar_to_string(const Scalar& c) {
  std::string s = c.to_string();
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

namespace {

template <class V, class F>
std::string join_terms(const V& v, F key) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += scalar_to_string(c) + " * " + key(k);
  }
  return out;
}

}  // namespace

std::string vector_to_string(const HallVector& v) {
  return join_terms(v, [](const RepKey& k) { return term_key(k); });
}

std::string vector_to_string(const ModuleVector& v) {
  return join_terms(v, [](const SDKey& k) { return term_key(k); });
}

std::string vector_to_string(const HallTensor& v) {
  return join_terms(v, [](const auto& k) { return term_key(k.first) + "(x)" + term_key(k.second); });
}

std::string vector_to_string(const ModuleTensor& v) {
  return join_terms(v, [](const auto& k) { return term_key(k.first) + "(x)" + term_key(k.second); });
}

}  // namespace hallmod
