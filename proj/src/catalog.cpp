#include "terracini/catalog.hpp"

#include <charconv>

#include "terracini/latticegeom.hpp"

namespace terracini {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

void expect_fields(const std::vector<std::string>& f, std::size_t n, const std::string& spec, const char* shape) {
  if (f.size() != n) throw SpecError("variety spec '" + spec + "' should look like " + shape);
}

}  // namespace

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw SpecError("expected an integer for " + what + ", got '" + text + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_int(tok, what));
  return out;
}

ParamVariety resolve_variety(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw SpecError("variety spec '" + spec + "' has no family prefix");
  const std::string family = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  try {
    if (family == "polytope") {
      if (rest.empty()) throw SpecError("polytope spec needs a file path");
      return make_toric(read_polytope_file(rest), spec);
    }
    if (family == "secant") {
      const auto last = rest.rfind(':');
      if (last == std::string::npos) throw SpecError("secant spec should look like secant:<spec>:r");
      const int r = parse_int(rest.substr(last + 1), "secant order r");
      if (r < 1) throw SpecError("secant order must be >= 1");
      return make_secant_power(resolve_variety(rest.substr(0, last), seed), r, seed);
    }
    const auto f = split(rest, ':');
    if (family == "veronese") {
      expect_fields(f, 2, spec, "veronese:n:d");
      return make_veronese(parse_int(f[0], "n"), parse_int(f[1], "d"));
    }
    if (family == "sv") {
      expect_fields(f, 2, spec, "sv:n1,..:d1,..");
      return make_segre_veronese(parse_int_list(f[0], "n_i"), parse_int_list(f[1], "d_i"));
    }
    if (family == "rnc") {
      expect_fields(f, 1, spec, "rnc:N");
      return make_rnc(parse_int(f[0], "N"));
    }
    if (family == "grass") {
      expect_fields(f, 2, spec, "grass:r:n");
      return make_grassmannian(parse_int(f[0], "r"), parse_int(f[1], "n"));
    }
    if (family == "flag") {
      expect_fields(f, 2, spec, "flag:k1,..:n");
      return make_flag(parse_int_list(f[0], "k_i"), parse_int(f[1], "n"));
    }
    if (family == "lg") {
      expect_fields(f, 1, spec, "lg:n");
      return make_lagrangian(parse_int(f[0], "n"));
    }
    if (family == "moments") {
      expect_fields(f, 1, spec, "moments:d");
      return make_moment_surface(parse_int(f[0], "d"));
    }
    if (family == "powers") {
      expect_fields(f, 3, spec, "powers:a:d:n");
      return make_powers(parse_int(f[0], "a"), parse_int(f[1], "d"), parse_int(f[2], "n"));
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(spec + ": " + e.what());
  }
  throw SpecError("unknown variety family '" + family + "'");
}

}  // namespace terracini
