#include "linkalg/verdict.hpp"

namespace linkalg {

std::string status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::skipped: return "skipped";
    case Status::inconclusive: return "inconclusive";
    case Status::not_checkable: return "not-checkable";
  }
  return "unknown";
}

void Verdict::settle(bool ok, const Json& instance) {
  status = ok ? Status::holds : Status::fails;
  if (!ok) counterexample = instance;
}

Json Verdict::to_json() const {
  Json j;
  j["claim"] = claim;
  j["status"] = status_name(status);
  j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  if (!counterexample.is_null()) j["counterexample"] = counterexample;
  return j;
}

Json prime_json(const MonomialPrime& p, const Ring& ring) { return p.var_names(ring); }

Json primes_json(const PrimeSet& s, const Ring& ring) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(prime_json(p, ring));
  return out;
}

Json ideal_json(const Ideal& I) {
  if (auto m = I.as_monomial()) {
    if (m->is_zero()) return Json::array();
    return m->gen_strings(*I.ring());
  }
  return I.gb_strings();
}

std::string ideal_text(const Ideal& I) {
  auto j = ideal_json(I);
  if (j.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + j[i].get<std::string>();
  return s;
}

}  // namespace linkalg
