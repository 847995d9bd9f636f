#include "terracini/bounds.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "terracini/tables.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string show(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Fill floor_value / max_h / empty from value, strictness and exclusions.
void settle(BoundResult& b, std::int64_t cap = -1) {
  b.floor_value = floor_of(b.value);
  if (!b.applicable) {
    b.max_h = 0;
    b.empty = true;
    return;
  }
  BigInt top = b.strict ? BigInt(b.floor_value - 1) : b.floor_value;
  if (cap >= 0 && top > cap) top = cap;
  std::int64_t h = top < 0 ? 0 : top.convert_to<std::int64_t>();
  for (int ex : b.excluded_h)
    if (ex >= 1 && ex <= h) h = ex - 1;
  b.max_h = h;
  b.empty = h < 1;
}

BoundResult inapplicable(std::string family, std::string params, std::string source, std::string why) {
  BoundResult b;
  b.family = std::move(family);
  b.params = std::move(params);
  b.source = std::move(source);
  b.applicable = false;
  b.notes.push_back(std::move(why));
  settle(b);
  return b;
}

// Merge several bounds for the same variety: the covered ranges are unions
// of initial segments, so the merged range is the longest one.
BoundResult merge(std::string family, std::string params, std::vector<BoundResult> parts) {
  BoundResult out;
  out.family = std::move(family);
  out.params = std::move(params);
  out.applicable = false;
  const BoundResult* best = nullptr;
  for (const auto& p : parts) {
    if (!p.applicable) continue;
    out.applicable = true;
    if (!best || p.max_h > best->max_h) best = &p;
  }
  if (best) {
    out.value = best->value;
    out.strict = best->strict;
    out.floor_value = best->floor_value;
    out.source = best->source;
  }
  for (const auto& p : parts) {
    out.max_h = std::max(out.max_h, p.max_h);
    for (int ex : p.excluded_h)
      if (std::find(out.excluded_h.begin(), out.excluded_h.end(), ex) == out.excluded_h.end())
        out.excluded_h.push_back(ex);
    out.notes.insert(out.notes.end(), p.notes.begin(), p.notes.end());
  }
  if (!out.applicable) out.floor_value = 0;
  out.empty = out.max_h < 1;
  out.parts = std::move(parts);
  return out;
}

AffineToken parse_token(const std::string& tok) {
  static const std::regex plain(R"(^-?\d+$)");
  static const std::regex affine(R"(^(-?\d*)a([+-]\d+)?$)");
  std::smatch m;
  if (std::regex_match(tok, plain)) return {0, std::stoll(tok)};
  if (std::regex_match(tok, m, affine)) {
    AffineToken t;
    const std::string c = m[1].str();
    t.coef = c.empty() ? 1 : (c == "-" ? -1 : std::stoll(c));
    t.constant = m[2].matched ? std::stoll(m[2].str()) : 0;
    return t;
  }
  throw std::invalid_argument("bad exception-table token: " + tok);
}

// Tries to assign a; returns false on conflict.
bool bind_token(const AffineToken& t, std::int64_t value, std::optional<std::int64_t>& a) {
  if (t.coef == 0) return t.constant == value;
  const std::int64_t diff = value - t.constant;
  if (diff % t.coef != 0) return false;
  const std::int64_t cand = diff / t.coef;
  if (cand < 1) return false;
  if (a && *a != cand) return false;
  a = cand;
  return true;
}

}  // namespace

BigInt floor_of(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

std::vector<TableRow> parse_table(const std::string& text) {
  std::vector<TableRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto semi = line.find(';');
    std::istringstream lhs(line.substr(0, semi));
    std::string tok;
    TableRow row;
    while (lhs >> tok) row.tuple.push_back(parse_token(tok));
    if (row.tuple.empty() && semi == std::string::npos) continue;
    if (semi == std::string::npos) throw std::invalid_argument("exception-table row without ';': " + line);
    std::istringstream rhs(line.substr(semi + 1));
    if (!(rhs >> tok)) throw std::invalid_argument("exception-table row without h: " + line);
    row.h = parse_token(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> table_matches(const std::vector<TableRow>& rows, const std::vector<int>& tuple) {
  std::vector<int> hs;
  for (const auto& row : rows) {
    if (row.tuple.size() != tuple.size()) continue;
    std::optional<std::int64_t> a;
    bool ok = true;
    for (std::size_t i = 0; i < tuple.size() && ok; ++i) ok = bind_token(row.tuple[i], tuple[i], a);
    if (!ok) continue;
    if (row.h.coef != 0 && !a) continue;
    hs.push_back(static_cast<int>(row.h.coef * a.value_or(0) + row.h.constant));
  }
  std::sort(hs.begin(), hs.end());
  return hs;
}

const std::vector<TableRow>& sv_defective_table() {
  static const auto t = parse_table(tables::k_sv_defective);
  return t;
}
const std::vector<TableRow>& grassmannian_defective_table() {
  static const auto t = parse_table(tables::k_grassmannian_defective);
  return t;
}
const std::vector<TableRow>& grassmannian_excluded_table() {
  static const auto t = parse_table(tables::k_grassmannian_excluded);
  return t;
}

// ---------------------------------------------------------------------------

BoundResult bound_segre_veronese(const std::vector<int>& ns, const std::vector<int>& ds) {
  if (ns.empty() || ns.size() != ds.size()) throw std::invalid_argument("n and d lists must have equal non-zero length");
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (ns[i] < 1 || ds[i] < 1) throw std::invalid_argument("Segre-Veronese bound needs n_i, d_i >= 1");
  const std::string params = "n=" + join(ns) + ";d=" + join(ds);
  Rational ratio_max = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) ratio_max = std::max(ratio_max, Rational(ns[i], ds[i]));
  BigInt prod = 1;
  int sum_n = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    prod *= binomial(ns[i] + ds[i], ds[i]);
    sum_n += ns[i];
  }
  BoundResult b;
  b.family = "segre-veronese";
  b.params = params;
  b.source = "Segre-Veronese bound via toric non-defectiveness";
  bool first = true;
  for (std::size_t j = 0; j < ns.size(); ++j) {
    if (Rational(ns[j], ds[j]) != ratio_max) continue;
    Rational v = Rational(ds[j], ns[j] + ds[j]) * Rational(1, sum_n + 1) * Rational(prod);
    if (first || v > b.value) b.value = v;
    first = false;
  }
  settle(b);
  return b;
}

BoundResult bound_binary_sv(const std::vector<int>& ds) {
  if (ds.empty()) throw std::invalid_argument("binary Segre-Veronese bound needs at least one degree");
  for (int d : ds)
    if (d < 1) throw std::invalid_argument("binary Segre-Veronese bound needs d_i >= 1");
  BoundResult b;
  b.family = "binary-sv";
  b.params = "d=" + join(ds);
  b.source = "products of P^1: subgeneric bound";
  BigInt prod = 1;
  for (int d : ds) prod *= d + 1;
  const auto r = static_cast<std::int64_t>(ds.size());
  b.value = Rational(prod) / Rational(r + 1);
  auto sorted = ds;
  std::sort(sorted.begin(), sorted.end());
  for (int h : table_matches(sv_defective_table(), sorted)) {
    b.excluded_h.push_back(h);
    b.notes.push_back("h-defective case (" + join(sorted) + ";" + std::to_string(h) + ") from the exception table");
  }
  const bool perfect = denominator(b.value) == 1;
  if (perfect) b.notes.push_back("perfect case: the ratio is an integer");
  if (perfect && std::all_of(ds.begin(), ds.end(), [](int d) { return d >= 3; }))
    b.notes.push_back("all d_i >= 3 in the perfect case: identifiable for every subgeneric rank, not generically identifiable");
  if (sorted == std::vector<int>{2, 2, 2})
    b.notes.push_back("h = 6 is not identifiable: six general tangent spaces are tangent along an elliptic normal curve");
  settle(b);
  return b;
}

BoundResult bound_flag(const std::vector<int>& ks, int n) {
  if (ks.empty()) throw std::invalid_argument("flag bound needs at least one k");
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] < 0 || ks[i] >= n || (i > 0 && ks[i] < ks[i - 1]))
      throw std::invalid_argument("flag bound needs 0 <= k_1 <= ... <= k_r < n");
  const std::string params = "k=" + join(ks) + ";n=" + std::to_string(n);
  const std::string source = "flag varieties: power bound";
  int l = 0;  // 1-based index of the last j with n >= 2 k_j + 1
  for (std::size_t j = 0; j < ks.size(); ++j)
    if (n >= 2 * ks[j] + 1) l = static_cast<int>(j) + 1;
  if (l == 0) return inapplicable("flag", params, source, "no index j with n >= 2k_j + 1");
  std::int64_t arg = l - 1;
  for (int j = 0; j < l; ++j) arg += ks[static_cast<std::size_t>(j)];
  if (arg < 1) return inapplicable("flag", params, source, "log2 argument sum k_j + l - 1 is not positive");
  int e = 0;
  while ((std::int64_t{1} << (e + 1)) <= arg) ++e;
  BoundResult b;
  b.family = "flag";
  b.params = params;
  b.source = source;
  const Rational base(n + 1, ks[static_cast<std::size_t>(l - 1)] + 1);
  b.value = 1;
  for (int i = 0; i < e; ++i) b.value *= base;
  b.notes.push_back("l = " + std::to_string(l) + ", exponent floor(log2(" + std::to_string(arg) + ")) = " + std::to_string(e));
  settle(b);
  return b;
}

BoundResult bound_grassmannian(int r, int n) {
  if (r < 1 || r >= n) throw std::invalid_argument("Grassmannian bound needs 0 < r < n");
  const std::string params = "r=" + std::to_string(r) + ";n=" + std::to_string(n);
  std::vector<BoundResult> parts;
  if (r < 2) {
    return inapplicable("grassmannian", params, "Grassmannians", "Grassmannians of lines are excluded (r >= 2 required)");
  }
  if (n >= 2 * r + 1) {
    BoundResult g;
    g.family = "grassmannian";
    g.params = params;
    g.source = "Grassmannians: power bound";
    int e = 0;
    while ((1 << (e + 1)) <= r) ++e;
    g.value = 1;
    for (int i = 0; i < e; ++i) g.value *= Rational(n + 1, r + 1);
    settle(g);
    parts.push_back(std::move(g));
  } else {
    parts.push_back(inapplicable("grassmannian", params, "Grassmannians: power bound", "needs n >= 2r + 1"));
  }
  BoundResult ref;
  ref.family = "grassmannian-refined";
  ref.params = params;
  ref.source = "Grassmannians: refined bound for h <= 12";
  ref.value = Rational(binomial(n + 1, r + 1)) / Rational((n - r) * (r + 1) + 1);
  for (int h : table_matches(grassmannian_excluded_table(), {r, n})) {
    ref.excluded_h.push_back(h);
    ref.notes.push_back("(" + std::to_string(r) + "," + std::to_string(n) + ";" + std::to_string(h) +
                        ") excluded: the Grassmannian is h-defective there");
  }
  for (int h : table_matches(grassmannian_defective_table(), {r, n}))
    ref.notes.push_back("(" + std::to_string(r) + "," + std::to_string(n) + ";" + std::to_string(h) +
                        ") is in the defective table");
  settle(ref, 12);
  parts.push_back(std::move(ref));
  return merge("grassmannian", params, std::move(parts));
}

BoundResult bound_g2n(int n) {
  const std::string params = "n=" + std::to_string(n);
  const std::string source = "Grassmannians of planes";
  if (n < 9) return inapplicable("g2n", params, source, "needs n >= 9");
  BoundResult b;
  b.family = "g2n";
  b.params = params;
  b.source = source;
  const Rational a = Rational(n * n, 18) - Rational(20 * n, 27) + Rational(287, 81);
  const Rational c(6 * n - 13, 9);
  b.value = Rational(floor_of(a) + floor_of(c));
  b.notes.push_back("floor(" + show(a) + ") + floor(" + show(c) + ")");
  settle(b);
  return b;
}

Embedding parse_embedding(const std::string& tag) {
  if (tag == "lg" || tag == "lg-pluecker") return Embedding::lg_pluecker;
  if (tag == "spinor-pluecker") return Embedding::spinor_pluecker;
  if (tag == "spinor-minimal" || tag == "spinor") return Embedding::spinor_minimal;
  throw std::invalid_argument("unknown embedding tag: " + tag + " (lg-pluecker, spinor-pluecker, spinor-minimal)");
}

std::string to_string(Embedding e) {
  switch (e) {
    case Embedding::lg_pluecker: return "lg-pluecker";
    case Embedding::spinor_pluecker: return "spinor-pluecker";
    case Embedding::spinor_minimal: return "spinor-minimal";
  }
  return "unknown";
}

BoundResult bound_lagrangian_spinor(int n, Embedding e) {
  if (n < 2) throw std::invalid_argument("isotropic Grassmannian bound needs n >= 2");
  const std::string params = "n=" + std::to_string(n) + ";embedding=" + to_string(e);
  BoundResult f;
  f.family = to_string(e);
  f.params = params;
  f.source = "isotropic Grassmannians";
  switch (e) {
    case Embedding::lg_pluecker: f.value = Rational(n + 1, 2); break;
    case Embedding::spinor_pluecker: f.value = Rational(n, 2); break;
    case Embedding::spinor_minimal: f.value = Rational(n + 2, 4); break;
  }
  settle(f);
  std::vector<BoundResult> parts{f};

  if (e == Embedding::lg_pluecker && n >= 5) {
    BoundResult s;
    s.family = "lg-pluecker-small-h";
    s.params = params;
    s.source = "isotropic Grassmannians: small h";
    s.strict = false;
    s.value = 3;
    settle(s);
    parts.push_back(std::move(s));
  }
  if (e == Embedding::spinor_minimal) {
    if (n == 7 || n == 8) {
      parts[0].notes.push_back("2-identifiability is not available for n in {7, 8}");
    } else if (n >= 9) {
      BoundResult s;
      s.family = "spinor-minimal-small-h";
      s.params = params;
      s.source = "isotropic Grassmannians: small h";
      s.strict = false;
      s.value = 2;
      settle(s);
      parts.push_back(std::move(s));
    } else {
      parts[0].notes.push_back("2-identifiability not applied for n <= 6: (h+1)n + h exceeds the span dimension");
    }
  }
  return merge(to_string(e), params, std::move(parts));
}

BoundResult bound_moments(int d) {
  const std::string params = "d=" + std::to_string(d);
  if (d < 3) return inapplicable("moments", params, "Gaussian moment surfaces", "needs d >= 3");
  BoundResult b;
  b.family = "moments";
  b.params = params;
  b.source = "Gaussian moment surfaces";
  b.value = Rational(d + 1, 3);
  settle(b);
  return b;
}

BoundResult bound_powers(int a, int d, int n) {
  if (a < 1 || d < 1 || n < 1) throw std::invalid_argument("powers bound needs a, d, n >= 1");
  BoundResult b;
  b.family = "powers";
  b.params = "a=" + std::to_string(a) + ";d=" + std::to_string(d) + ";n=" + std::to_string(n);
  b.source = "powers of forms";
  b.strict = false;
  const BigInt top = binomial(a * d + n, n), base = binomial(a + n, n);
  b.value = Rational(top) / Rational(base) - Rational(base) - 1;
  settle(b);
  if (b.empty) b.notes.push_back("non-positive bound: empty range");
  return b;
}

BoundResult bound_toric(const LatticePolytope& p) {
  auto tb = toric_bound(p);
  BoundResult b;
  b.family = "toric";
  b.params = "points=" + std::to_string(tb.lattice_points) + ";m=" + std::to_string(tb.max_hyperplane) +
             ";n=" + std::to_string(tb.rank);
  b.source = "toric varieties: hyperplane section bound";
  b.value = Rational(static_cast<std::int64_t>(tb.lattice_points) - tb.max_hyperplane, tb.rank + 1);
  b.notes.push_back("requires a non-degenerate Gauss map; checked separately");
  settle(b);
  return b;
}

}  // namespace terracini
