#pragma once

// JSON reports and the JSON-lines result cache. Keys are sorted and no
// timestamps are written, so equal inputs give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "terracini/bounds.hpp"
#include "terracini/certify.hpp"
#include "terracini/latticegeom.hpp"
#include "terracini/tangency.hpp"
#include "terracini/terracini.hpp"
#include "terracini/witness.hpp"

namespace terracini {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

Json to_json(const Rational& q);
Json to_json(const BigInt& z);
Json to_json(const RatMatrix& m);
Json to_json(const ParamVariety& x);
Json to_json(const RankReport& r);
Json to_json(const FiberReport& r);
Json to_json(const LdiffReport& r);
Json to_json(const ConeReport& r);
Json to_json(const GaussReport& r);
Json to_json(const ContactReport& r);
Json to_json(const BoundResult& b);
Json to_json(const PlaneWitness& w);
Json to_json(const SecnoidReport& s);
Json to_json(const ProjectionReport& p);
Json to_json(const CounterexampleDossier& d);
Json to_json(const Certificate& c);

/// Lattice data of a polytope: B, the quotient rank and the toric range.
Json polytope_report(const LatticePolytope& p);

/// Wraps a command result with the schema and reproducibility fields.
Json envelope(const std::string& command, const Json& arguments, const SampleOptions& opt, const Json& result);

std::string dump(const Json& j);

class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  static std::string key(const std::string& command, const Json& arguments, const SampleOptions& opt);

  /// Returns the stored report; a corrupt file is ignored with a warning on
  /// stderr.
  std::optional<Json> lookup(const std::string& key) const;
  void store(const std::string& key, const Json& report) const;

 private:
  std::string path_;
};

}  // namespace terracini
