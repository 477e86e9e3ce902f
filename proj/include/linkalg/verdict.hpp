#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linkalg/groebner.hpp"
#include "linkalg/monomial_ideal.hpp"

namespace linkalg {

using Json = nlohmann::ordered_json;

enum class Status { holds, fails, skipped, inconclusive, not_checkable };

std::string status_name(Status s);

/// Outcome of one claim on one instance.  A failing verdict carries a counterexample
/// that is enough to rerun the instance alone.
struct Verdict {
  std::string claim;
  Status status = Status::holds;
  Json witnesses = Json::object();
  std::vector<std::string> notes;
  Json counterexample;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
  /// status from a boolean, attaching the counterexample when false.
  void settle(bool ok, const Json& instance);
  Json to_json() const;
};

/// (x,y) → ["x","y"]; the zero prime is [].
Json prime_json(const MonomialPrime& p, const Ring& ring);
Json primes_json(const PrimeSet& s, const Ring& ring);
/// Minimal generators for monomial ideals, reduced GB otherwise.
Json ideal_json(const Ideal& I);
std::string ideal_text(const Ideal& I);

}  // namespace linkalg
