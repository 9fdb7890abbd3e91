#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compositum/bounds.hpp"
#include "compositum/diagonal.hpp"
#include "compositum/galois_bridge.hpp"
#include "compositum/goursat.hpp"
#include "compositum/io.hpp"
#include "compositum/numberfield.hpp"

namespace compositum {

struct FieldElementReport {
  std::string name;
  RationalPoly residue;
  Rational trace, norm, delta;
  std::optional<bool> totally_positive;  // totally real fields only
  std::optional<SchurReport> schur;      // totally real fields of degree >= 2

  friend bool operator==(const FieldElementReport&, const FieldElementReport&) = default;
};

struct CoprimeSummary {
  std::string other_label;
  Coprimality verdict = Coprimality::Inconclusive;
  std::vector<Integer> shared;
  std::string reason;
  friend bool operator==(const CoprimeSummary&, const CoprimeSummary&) = default;
};

struct FieldReport {
  std::string label;
  RationalPoly min_poly;
  IrreducibilityStatus irreducibility = IrreducibilityStatus::Proven;
  bool totally_real = false;
  Integer order_disc;
  std::vector<Integer> prime_support;
  bool support_complete = true;
  std::vector<FieldElementReport> elements;
  std::optional<CoprimeSummary> coprime;

  friend bool operator==(const FieldReport&, const FieldReport&) = default;
};

/// Schur checks that come back Undecided are retried once at 4x precision.
FieldReport field_report(const FieldFile& f, unsigned precision = kDefaultPrecision,
                         const FieldFile* against = nullptr);

struct GoursatReport {
  PermGroup left, right;
  std::size_t count = 0;
  std::vector<Quintuple> quintuples;  // filled on request

  friend bool operator==(const GoursatReport&, const GoursatReport&) = default;
};

GoursatReport goursat_report(const PermGroup& a, const PermGroup& b, bool list,
                             const Caps& caps = {});

struct BridgeReport {
  Classification classification;
  bool no_diagonal = false;
  friend bool operator==(const BridgeReport&, const BridgeReport&) = default;
};

BridgeReport bridge_report(const GaloisDatum& k, const GaloisDatum& l, const Caps& caps = {});

// Human-readable text; deterministic for identical inputs.
std::string to_text(const DecisionReport& r);
std::string to_text(const BoundReport& r);
std::string to_text(const FieldReport& r);
std::string to_text(const GoursatReport& r);
std::string to_text(const HypothesisReport& r);
std::string to_text(const BridgeReport& r);

// Structured (JSON) output with exact rationals as "p/q" strings.
std::string to_structured(const DecisionReport& r);
std::string to_structured(const BoundReport& r);
std::string to_structured(const FieldReport& r);
std::string to_structured(const GoursatReport& r);
std::string to_structured(const HypothesisReport& r);
std::string to_structured(const BridgeReport& r);

/// Inverse of to_structured; throws ParseError on malformed input.
template <class Report>
Report from_structured(const std::string& text);

/// x in scientific notation with `digits` significant digits, rounded down
/// (or up) so displayed interval ends stay outside the true ones.
std::string scientific(const Rational& x, unsigned digits, bool round_up);

}  // namespace compositum
