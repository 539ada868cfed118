#include "logcv/sequence.hpp"

#include <algorithm>

namespace logcv {

Sequence::Sequence(std::vector<Scalar> entries, SeqKind kind)
    : entries_(std::move(entries)), kind_(kind) {
  if (entries_.empty()) throw DomainError("a sequence needs at least one entry");
}

Sequence Sequence::parse_csv(std::string_view text, SeqKind kind) {
  std::vector<Scalar> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    if (!end && text[i] == '(') ++depth;
    if (!end && text[i] == ')') --depth;
    if (end || (text[i] == ',' && depth == 0)) {
      std::string_view item = text.substr(start, i - start);
      if (item.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw ParseError("empty sequence entry at offset " + std::to_string(start));
      out.push_back(Scalar::parse(item));
      start = i + 1;
    }
  }
  return Sequence(std::move(out), kind);
}

Scalar Sequence::at(long i) const {
  if (i < 0) return Scalar(0);
  const auto n = static_cast<std::size_t>(i);
  if (n < entries_.size()) return entries_[n];
  if (kind_ == SeqKind::FinitePolynomial) return Scalar(0);
  throw DomainError("entry " + std::to_string(i) + " lies past the known prefix");
}

bool Sequence::all_positive() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& x) { return x.sign() > 0; });
}

bool Sequence::all_integer() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& x) { return x.is_integer(); });
}

bool operator==(const Sequence& x, const Sequence& y) {
  return x.kind_ == y.kind_ && x.entries_ == y.entries_;
}

Sequence l_operator(const Sequence& seq) {
  const auto& a = seq.entries();
  const std::size_t d = a.size();
  const std::size_t out_len = seq.kind() == SeqKind::FinitePolynomial ? d : d - 1;
  if (out_len == 0) throw EmptyResult("L of a one-term prefix has no computable entries");
  std::vector<Scalar> out;
  out.reserve(out_len);
  for (std::size_t n = 0; n < out_len; ++n) {
    Scalar v = a[n] * a[n];
    if (n > 0 && n + 1 < d) v -= a[n - 1] * a[n + 1];
    out.push_back(std::move(v));
  }
  return Sequence(std::move(out), seq.kind());
}

Sequence l_iterate(const Sequence& seq, int m) {
  if (m < 0) throw DomainError("l_iterate needs m >= 0");
  Sequence cur = seq;
  for (int i = 0; i < m; ++i) cur = l_operator(cur);
  return cur;
}

DepthResult log_concavity_depth(const Sequence& seq, int max_m) {
  if (max_m < 0) throw DomainError("log_concavity_depth needs max_m >= 0");
  auto first_negative = [](const Sequence& s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].sign() < 0) return i;
    return std::nullopt;
  };
  DepthResult result;
  Sequence cur = seq;
  for (int level = 0; level <= max_m; ++level) {
    if (level > 0) {
      if (cur.kind() == SeqKind::PrefixOfInfinite && cur.size() == 1) {
        // prefix exhausted: nothing more can be checked
        result.depth = level - 1;
        result.saturated = true;
        return result;
      }
      cur = l_operator(cur);
    }
    if (auto idx = first_negative(cur)) {
      result.depth = level - 1;
      result.witness_index = *idx;
      result.witness_value = cur[*idx];
      return result;
    }
  }
  result.depth = max_m;
  result.saturated = true;
  return result;
}

std::optional<Scalar> r_factor_supremum(const Sequence& seq) {
  const auto& a = seq.entries();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].sign() <= 0)
      throw NonPositiveEntry("r-factor supremum needs positive entries; entry " +
                             std::to_string(i) + " is " + a[i].str());
  if (a.size() < 3) return std::nullopt;

  if (std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_rational(); })) {
    // Compare the ratios as unreduced fractions; reduce only the winner.
    Integer best_num, best_den;
    for (std::size_t n = 1; n + 1 < a.size(); ++n) {
      const Rational &l = a[n - 1].rational(), &c = a[n].rational(), &r = a[n + 1].rational();
      Integer num = c.get_num() * c.get_num() * l.get_den() * r.get_den();
      Integer den = c.get_den() * c.get_den() * l.get_num() * r.get_num();
      if (n == 1 || num * best_den < best_num * den) {
        best_num = std::move(num);
        best_den = std::move(den);
      }
    }
    return Scalar(Rational(best_num, best_den));
  }

  std::optional<Scalar> best;
  for (std::size_t n = 1; n + 1 < a.size(); ++n) {
    Scalar ratio = a[n] * a[n] / (a[n - 1] * a[n + 1]);
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return best;
}

bool is_r_factor(const Sequence& seq, const Scalar& r, bool strict) {
  const auto& a = seq.entries();
  for (std::size_t n = 1; n + 1 < a.size(); ++n) {
    const Scalar square = a[n] * a[n];
    const Scalar prod = a[n - 1] * a[n + 1];
    bool ok;
    switch (prod.sign()) {
      case 0:
        ok = strict ? !square.is_zero() : true;
        break;
      case 1:
        // r may live in a different tower than the entries; compare the ratio.
        ok = strict ? (square / prod > r) : (square / prod >= r);
        break;
      default:
        // negative product; r*prod < 0 <= square
        ok = strict ? (square > r * prod) : true;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

bool is_palindromic(const Sequence& seq) {
  const auto& a = seq.entries();
  return std::equal(a.begin(), a.begin() + static_cast<long>(a.size() / 2), a.rbegin());
}

bool has_internal_zeros(const Sequence& seq) {
  bool seen_zero = false;
  for (const auto& x : seq.entries()) {
    if (x.is_zero())
      seen_zero = true;
    else if (seen_zero)
      return true;
  }
  return false;
}

Sequence scale(const Sequence& seq, const Scalar& c) {
  std::vector<Scalar> out;
  out.reserve(seq.size());
  for (const auto& x : seq.entries()) out.push_back(x * c);
  return Sequence(std::move(out), seq.kind());
}

std::optional<Scalar> proportionality(const Sequence& lhs, const Sequence& rhs) {
  if (lhs.size() != rhs.size() || lhs[0].is_zero()) return std::nullopt;
  // cheap rejection on the second entry before dividing
  if (lhs.size() > 1 && !(lhs[1] * rhs[0] == rhs[1] * lhs[0])) return std::nullopt;
  Scalar lambda = rhs[0] / lhs[0];
  if (lambda.is_zero()) return std::nullopt;
  for (std::size_t i = 1; i < lhs.size(); ++i)
    if (!(rhs[i] == lambda * lhs[i])) return std::nullopt;
  return lambda;
}

}  // namespace logcv
