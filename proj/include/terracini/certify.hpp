#pragma once

// Identifiability certification from three hypotheses: the dimension
// inequality (h+1)n + h <= N, non-(h+1)-defectiveness, and a non-degenerate
// Gauss map. Checks run in order and stop at the first failure.

#include <optional>
#include <string>
#include <vector>

#include "terracini/tangency.hpp"
#include "terracini/terracini.hpp"
#include "terracini/witness.hpp"

namespace terracini {

enum class Conclusion { identifiable_certified, not_identifiable_witnessed, inconclusive };

std::string to_string(Conclusion c);

struct InequalityCheck {
  long long lhs = 0;  // (h+1)n + h
  int N = 0;
  bool holds = false;
};

struct KnownFact {
  std::string variety;
  int h = 0;
  bool identifiable = false;
  std::string statement;
};

/// Facts about specific (variety, h) pairs that the rank tests cannot reach.
const std::vector<KnownFact>& known_facts();

struct Certificate {
  std::string variety;
  int n = 0;
  int N = 0;
  int h = 0;
  InequalityCheck inequality;
  std::optional<RankReport> nondefective;  // sec_{h+1}; certified leg
  std::optional<GaussReport> gauss;        // probabilistic leg
  std::optional<ContactReport> contact;
  std::optional<SecnoidReport> witnesses;
  Conclusion conclusion = Conclusion::inconclusive;
  std::vector<std::string> reasons;
  std::vector<std::string> notes;
  std::vector<KnownFact> facts;
};

struct CertifyOptions {
  SampleOptions sample;
  bool with_contact = false;  // attach the h-contact locus when it is defined
};

Certificate cmd_certify(const ParamVariety& x, int h, const CertifyOptions& opt = {});

}  // namespace terracini
