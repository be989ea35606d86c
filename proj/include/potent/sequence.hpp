#pragma once

// Degree sequences: exponent-notation parsing, laying-off, and graphicality
// tests. Sequences are kept sorted non-increasing; positions are 1-based in
// every public operation (d(1) is the largest term).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "potent/error.hpp"

namespace potent {

class DegreeSequence {
 public:
  DegreeSequence() = default;
  // Sorts the terms non-increasing; rejects negative terms.
  explicit DegreeSequence(std::vector<int> terms);

  // Text format: whitespace- or comma-separated tokens, each "d" or "d^t".
  static DegreeSequence parse(std::string_view text);

  // Compact exponent notation with maximal run grouping, e.g. "6^2 4^3 3^2".
  std::string format() const;

  const std::vector<int>& terms() const { return terms_; }
  int n() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }

  // 1-based access; throws Invalid when k is out of range.
  int d(int k) const;

  long long sigma() const;
  int largest_positive() const;   // m(pi); 0 when there is no positive term
  int smallest_positive() const;  // h(pi); 0 when there is no positive term
  bool all_positive() const;

  bool operator==(const DegreeSequence&) const = default;
  // Lexicographic on terms (shorter sequences compare by the common prefix first).
  bool lex_less(const DegreeSequence& other) const { return terms_ < other.terms_; }

 private:
  std::vector<int> terms_;
};

struct SequenceStats {
  long long sigma = 0;
  int m = 0;
  int h = 0;
  int n = 0;
};

SequenceStats sequence_stats(const DegreeSequence& pi);

// Residual sequence obtained by laying off d_k (1-based k). Removes position
// k and decrements the d_k largest remaining terms: positions 1..k-1 and
// k+1..d_k+1 when d_k >= k, positions 1..d_k when d_k < k. Returns nullopt
// when the demand cannot be met (a term would drop below zero, or fewer than
// d_k other terms exist); that failure certifies the sequence is not graphic.
// Throws Invalid when k is out of range.
std::optional<DegreeSequence> lay_off(const DegreeSequence& pi, int k);

enum class GraphicMethod { ErdosGallai, KleitmanWang };

bool is_graphic(const DegreeSequence& pi, GraphicMethod method = GraphicMethod::ErdosGallai);

enum class Theorem22Result { AppliesAndGraphic, NotApplicable };

// Applies when 1 <= m(pi) <= 2, h(pi) = 1 and sigma(pi) is even; such a
// sequence is always graphic.
Theorem22Result theorem22_check(const DegreeSequence& pi);

// Streams every graphic sequence with n terms and d1 <= n-1 (all terms >= 1
// when positive_only), in lexicographically decreasing order. Single consumer.
class GraphicSequenceStream {
 public:
  GraphicSequenceStream(int n, bool positive_only);
  std::optional<DegreeSequence> next();

 private:
  bool advance();

  int n_;
  int floor_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

}  // namespace potent
