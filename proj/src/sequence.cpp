#include "potent/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace potent {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last && out >= 0;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  for (int t : terms_) {
    if (t < 0) throw Error(ErrorKind::Invalid, "degree sequence term is negative: " + std::to_string(t));
  }
  std::sort(terms_.begin(), terms_.end(), std::greater<int>());
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::vector<int> terms;
  size_t pos = 0;
  bool saw_token = false;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    saw_token = true;

    int value = 0;
    int count = 1;
    size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      if (!parse_int(token, value))
        throw Error(ErrorKind::Parse, "malformed sequence token '" + std::string(token) + "'");
    } else {
      if (!parse_int(token.substr(0, caret), value) || !parse_int(token.substr(caret + 1), count))
        throw Error(ErrorKind::Parse, "malformed sequence token '" + std::string(token) + "'");
      if (count == 0)
        throw Error(ErrorKind::Parse, "zero repeat count in token '" + std::string(token) + "'");
    }
    if (count > 1 << 20)
      throw Error(ErrorKind::Parse, "repeat count too large in token '" + std::string(token) + "'");
    terms.insert(terms.end(), static_cast<size_t>(count), value);
  }
  if (!saw_token) throw Error(ErrorKind::Parse, "empty sequence text");
  return DegreeSequence(std::move(terms));
}

std::string DegreeSequence::format() const {
  std::string out;
  size_t i = 0;
  while (i < terms_.size()) {
    size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(terms_[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

int DegreeSequence::d(int k) const {
  if (k < 1 || k > n()) throw Error(ErrorKind::Invalid, "sequence index " + std::to_string(k) + " out of range");
  return terms_[static_cast<size_t>(k - 1)];
}

long long DegreeSequence::sigma() const {
  return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

int DegreeSequence::largest_positive() const {
  for (int t : terms_)
    if (t > 0) return t;
  return 0;
}

int DegreeSequence::smallest_positive() const {
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (*it > 0) return *it;
  return 0;
}

bool DegreeSequence::all_positive() const {
  return terms_.empty() || terms_.back() > 0;
}

SequenceStats sequence_stats(const DegreeSequence& pi) {
  return SequenceStats{pi.sigma(), pi.largest_positive(), pi.smallest_positive(), pi.n()};
}

std::optional<DegreeSequence> lay_off(const DegreeSequence& pi, int k) {
  const int n = pi.n();
  if (k < 1 || k > n) throw Error(ErrorKind::Invalid, "lay-off position " + std::to_string(k) + " out of range");
  std::vector<int> t = pi.terms();
  const int dk = t[static_cast<size_t>(k - 1)];

  if (dk >= k) {
    // decrement positions 1..k-1 and k+1..d_k+1
    if (dk + 1 > n) return std::nullopt;  // demands more terms than exist
    for (int p = 1; p <= dk + 1; ++p) {
      if (p == k) continue;
      if (--t[static_cast<size_t>(p - 1)] < 0) return std::nullopt;
    }
  } else {
    // decrement positions 1..d_k
    for (int p = 1; p <= dk; ++p) {
      if (--t[static_cast<size_t>(p - 1)] < 0) return std::nullopt;
    }
  }
  t.erase(t.begin() + (k - 1));
  return DegreeSequence(std::move(t));
}

namespace {

bool erdos_gallai(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  long long sum = 0;
  for (int x : d) sum += x;
  if (sum % 2 != 0) return false;
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += d[static_cast<size_t>(k - 1)];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(d[static_cast<size_t>(i)], k);
    if (prefix > rhs) return false;
    if (d[static_cast<size_t>(k - 1)] < k) break;  // later k hold automatically
  }
  return true;
}

bool kleitman_wang(const DegreeSequence& pi) {
  DegreeSequence cur = pi;
  while (cur.n() > 0) {
    auto next = lay_off(cur, cur.n());
    if (!next) return false;
    cur = std::move(*next);
  }
  return true;
}

}  // namespace

bool is_graphic(const DegreeSequence& pi, GraphicMethod method) {
  switch (method) {
    case GraphicMethod::ErdosGallai:
      return erdos_gallai(pi.terms());
    case GraphicMethod::KleitmanWang:
      return kleitman_wang(pi);
  }
  return false;
}

Theorem22Result theorem22_check(const DegreeSequence& pi) {
  const int m = pi.largest_positive();
  const int h = pi.smallest_positive();
  if (m >= 1 && m <= 2 && h == 1 && pi.sigma() % 2 == 0) return Theorem22Result::AppliesAndGraphic;
  return Theorem22Result::NotApplicable;
}

GraphicSequenceStream::GraphicSequenceStream(int n, bool positive_only)
    : n_(n), floor_(positive_only ? 1 : 0) {
  if (n < 1) throw Error(ErrorKind::Invalid, "enumeration needs n >= 1");
  if (floor_ > n - 1) done_ = true;  // no positive term fits when d1 <= n-1 < 1
  current_.assign(static_cast<size_t>(n), n - 1);
}

bool GraphicSequenceStream::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  // lexicographically previous non-increasing sequence with terms in [floor, n-1]
  int j = n_ - 1;
  while (j >= 0 && current_[static_cast<size_t>(j)] == floor_) --j;
  if (j < 0) return false;
  const int v = current_[static_cast<size_t>(j)] - 1;
  for (int p = j; p < n_; ++p) current_[static_cast<size_t>(p)] = v;
  return true;
}

std::optional<DegreeSequence> GraphicSequenceStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    DegreeSequence candidate(std::vector<int>(current_));
    if (is_graphic(candidate, GraphicMethod::ErdosGallai)) return candidate;
  }
  return std::nullopt;
}

}  // namespace potent
