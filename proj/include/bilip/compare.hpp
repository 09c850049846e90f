#pragma once

#include <string>
#include <vector>

#include "bilip/cone.hpp"

namespace bilip {

enum class Verdict { distinguished, not_distinguished };
enum class Strength { theorem, conjectural };

std::string to_string(Verdict v);
std::string to_string(Strength s);

/// One compared invariant and the result it rests on.
struct Justification {
  /// dimension, total-degree, component-count, exponent-multiset, component-multiset.
  std::string invariant;
  /// Name of the result that makes the invariant an obstruction.
  std::string tag;
  Strength strength = Strength::theorem;
  bool matched = true;
  std::string detail;
};

struct ObstructionReport {
  InvariantSignature a;
  InvariantSignature b;
  bool dimension_matched = true;
  bool total_degree_matched = true;
  /// Unset when either side has no component data (ideal path).
  std::optional<bool> component_count_matched;
  std::optional<bool> multiset_matched;
  Verdict verdict = Verdict::not_distinguished;
  std::vector<Justification> justification;
  std::vector<std::string> caveats;
};

struct CompareOptions {
  /// Treat ideal-path inputs as radical, so their Hilbert degree is the degree of the set.
  bool assume_radical = false;
};

/// Invariant-by-invariant comparison. The verdict is distinguished exactly when
/// a theorem-strength invariant differs; not_distinguished certifies nothing.
/// Throws DomainError when the signatures use different modes.
ObstructionReport compare_signatures(const InvariantSignature& a, const InvariantSignature& b,
                                     const CompareOptions& options = {});

/// Caveats attached to a single signature (radicality, purity, splitting over C).
std::vector<std::string> signature_caveats(const InvariantSignature& sig, bool assume_radical);

}  // namespace bilip
