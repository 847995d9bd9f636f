#pragma once

// Closed-form identifiability ranges, evaluated on exact rationals.
//
// A bound is either strict (h < floor(value)) or non-strict (h <= value).
// `max_h` is the largest h such that every 1..h is covered after removing
// excluded cases; `empty` means no h >= 1 is covered.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terracini/exactnum.hpp"
#include "terracini/latticegeom.hpp"

namespace terracini {

struct BoundResult {
  std::string family;
  std::string params;
  std::string source;
  bool applicable = true;
  Rational value = 0;
  bool strict = true;
  BigInt floor_value = 0;
  std::int64_t max_h = 0;
  bool empty = true;
  std::vector<int> excluded_h;
  std::vector<std::string> notes;
  std::vector<BoundResult> parts;  // individual formulas behind a merged result
};

BigInt floor_of(const Rational& q);

BoundResult bound_segre_veronese(const std::vector<int>& ns, const std::vector<int>& ds);
BoundResult bound_binary_sv(const std::vector<int>& ds);
BoundResult bound_flag(const std::vector<int>& ks, int n);
BoundResult bound_grassmannian(int r, int n);
BoundResult bound_g2n(int n);

enum class Embedding { lg_pluecker, spinor_pluecker, spinor_minimal };
Embedding parse_embedding(const std::string& tag);
std::string to_string(Embedding e);

BoundResult bound_lagrangian_spinor(int n, Embedding e);
BoundResult bound_moments(int d);
BoundResult bound_powers(int a, int d, int n);
BoundResult bound_toric(const LatticePolytope& p);

// ---------------------------------------------------------------------------
// Exception tables
// ---------------------------------------------------------------------------

/// c·a + k with a >= 1 free; c = 0 for a plain integer.
struct AffineToken {
  std::int64_t coef = 0;
  std::int64_t constant = 0;
};

struct TableRow {
  std::vector<AffineToken> tuple;
  AffineToken h;
};

std::vector<TableRow> parse_table(const std::string& text);

/// The h values of rows matching `tuple` for some common a >= 1.
std::vector<int> table_matches(const std::vector<TableRow>& rows, const std::vector<int>& tuple);

const std::vector<TableRow>& sv_defective_table();
const std::vector<TableRow>& grassmannian_defective_table();
const std::vector<TableRow>& grassmannian_excluded_table();

}  // namespace terracini
