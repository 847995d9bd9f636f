#pragma once

// Variety spec strings: veronese:n:d, sv:n1,..:d1,.., rnc:N, grass:r:n,
// flag:k1,..:n, lg:n, moments:d, powers:a:d:n, secant:<spec>:r,
// polytope:<path>. The resolved variety's id is the canonical form.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/exactnum.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ParamVariety resolve_variety(const std::string& spec, std::uint64_t seed = kDefaultSeed);

/// Comma-separated integers; throws SpecError on junk.
std::vector<int> parse_int_list(const std::string& text, const std::string& what);
int parse_int(const std::string& text, const std::string& what);

}  // namespace terracini
