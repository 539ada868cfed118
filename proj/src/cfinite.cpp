#include "logcv/cfinite.hpp"

#include <algorithm>
#include <stdexcept>

namespace logcv {

CFiniteSeq::CFiniteSeq(std::vector<Scalar> rec, std::vector<Scalar> initials)
    : rec_(std::move(rec)), init_(std::move(initials)) {
  if (rec_.empty()) throw DomainError("a C-finite sequence needs order >= 1");
  if (init_.size() != rec_.size())
    throw DomainError("a C-finite sequence of order r needs r initial values");
}

CFiniteSeq CFiniteSeq::from_charpoly(const SPoly& charpoly, std::vector<Scalar> initials) {
  if (charpoly.size() < 2 || !(charpoly.back() == Scalar(1)))
    throw DomainError("characteristic polynomial must be monic of degree >= 1");
  const std::size_t r = charpoly.size() - 1;
  std::vector<Scalar> rec(r);
  for (std::size_t i = 1; i <= r; ++i) rec[i - 1] = -charpoly[r - i];
  return {std::move(rec), std::move(initials)};
}

CFiniteSeq CFiniteSeq::fix_l(const Scalar& k) {
  return {{k, -k, Scalar(1)}, {Scalar(1), k, k * k - k}};
}

CFiniteSeq CFiniteSeq::fix_l2(const Scalar& beta, const Scalar& gamma) {
  return {{beta, gamma - beta * beta, Scalar(1)}, {Scalar(1), beta, gamma}};
}

SPoly CFiniteSeq::charpoly() const {
  const std::size_t r = rec_.size();
  SPoly p(r + 1);
  p[r] = Scalar(1);
  for (std::size_t i = 1; i <= r; ++i) p[r - i] = -rec_[i - 1];
  return p;
}

std::vector<Scalar> CFiniteSeq::terms(std::size_t count) const {
  std::vector<Scalar> a(init_.begin(), init_.begin() + static_cast<long>(std::min(count, init_.size())));
  a.reserve(count);
  while (a.size() < count) {
    const std::size_t n = a.size();
    Scalar v(0);
    for (std::size_t i = 0; i < rec_.size(); ++i) v += rec_[i] * a[n - 1 - i];
    a.push_back(std::move(v));
  }
  return a;
}

Scalar CFiniteSeq::term(std::size_t n) const { return terms(n + 1).back(); }

CFiniteSeq CFiniteSeq::shift() const {
  auto t = terms(order() + 1);
  return {rec_, std::vector<Scalar>(t.begin() + 1, t.end())};
}

namespace {

// Annihilator of a sum: the product of both, or one of them when they agree.
SPoly sum_annihilator(const SPoly& p, const SPoly& q) {
  return p == q ? p : poly_mul(p, q);
}

CFiniteSeq combine(const CFiniteSeq& a, const CFiniteSeq& b, const SPoly& annihilator, bool product) {
  const std::size_t r = annihilator.size() - 1;
  auto ta = a.terms(r), tb = b.terms(r);
  std::vector<Scalar> init(r);
  for (std::size_t i = 0; i < r; ++i) init[i] = product ? ta[i] * tb[i] : ta[i] + tb[i];
  return CFiniteSeq::from_charpoly(annihilator, std::move(init));
}

}  // namespace

CFiniteSeq operator+(const CFiniteSeq& a, const CFiniteSeq& b) {
  return combine(a, b, sum_annihilator(a.charpoly(), b.charpoly()), false);
}

CFiniteSeq operator*(const CFiniteSeq& a, const CFiniteSeq& b) {
  return combine(a, b, product_annihilator(a.charpoly(), b.charpoly()), true);
}

SPoly product_annihilator(const SPoly& p, const SPoly& q) { return product_annihilator_t(p, q); }

LfixProof prove_lfix(const CFiniteSeq& seq, int m, std::size_t max_order) {
  if (m < 1) throw DomainError("prove_lfix needs m >= 1");
  const SPoly base = seq.charpoly();
  SPoly q = base;
  for (int i = 0; i < m; ++i) {
    // L multiplies shifted copies of the previous level: both products x_n^2 and
    // x_{n-1} x_{n+1} share the annihilator prod(q, q), and so does their difference.
    const std::size_t deg = (q.size() - 1) * (q.size() - 1);
    if (deg + (base.size() - 1) > max_order)
      throw OrderOverflow("annihilator order " + std::to_string(deg) + " at level " +
                          std::to_string(i + 1) + " exceeds the cap " + std::to_string(max_order));
    q = product_annihilator(q, q);
  }
  LfixProof proof;
  proof.annihilator = sum_annihilator(q, base);
  const std::size_t order = proof.annihilator.size() - 1;
  if (order > max_order)
    throw OrderOverflow("annihilator order " + std::to_string(order) + " exceeds the cap " +
                        std::to_string(max_order));
  // b_n for n < m touches the zero pre-history; from n = m on the recurrence applies.
  proof.checked = static_cast<std::size_t>(m) + order;
  Sequence a(seq.terms(proof.checked + static_cast<std::size_t>(m)), SeqKind::PrefixOfInfinite);
  Sequence image = l_iterate(a, m);
  for (std::size_t n = 0; n < proof.checked; ++n) {
    if (!(image[n] == a[n])) {
      proof.first_nonzero = n;
      return proof;
    }
  }
  proof.holds = true;
  return proof;
}

bool annihilates(const RecurrenceAnsatz& rec, const std::vector<Scalar>& terms) {
  for (std::size_t n = static_cast<std::size_t>(rec.order); n < terms.size(); ++n) {
    Scalar acc(0);
    for (int i = 0; i <= rec.order; ++i) {
      Scalar p(0), power(1);
      for (const auto& c : rec.coeffs[static_cast<std::size_t>(i)]) {
        p += c * power;
        power *= Scalar(static_cast<long>(n));
      }
      acc += p * terms[n - static_cast<std::size_t>(i)];
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

namespace {

RecurrenceAnsatz to_ansatz(int order, int degree, std::vector<Scalar> x) {
  // scale so the first nonzero coefficient is 1
  auto lead = std::find_if(x.begin(), x.end(), [](const Scalar& c) { return !c.is_zero(); });
  const Scalar inv = Scalar(1) / *lead;
  RecurrenceAnsatz rec;
  rec.order = order;
  rec.coeff_degree = degree;
  rec.coeffs.assign(static_cast<std::size_t>(order + 1), {});
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= degree; ++j)
      rec.coeffs[static_cast<std::size_t>(i)].push_back(
          x[static_cast<std::size_t>(i * (degree + 1) + j)] * inv);
  return rec;
}

std::optional<RecurrenceAnsatz> guess(const std::vector<Scalar>& terms, int max_order, int degree,
                                      int margin) {
  auto hit = find_ansatz(terms, max_order, degree, margin);
  if (!hit) return std::nullopt;
  RecurrenceAnsatz rec = to_ansatz(hit->first, degree, std::move(hit->second));
  // guess-then-verify: the kernel vector came from exactly these rows, so this
  // is a guard against bookkeeping errors rather than a statistical check
  if (!annihilates(rec, terms)) throw std::logic_error("guessed recurrence fails its own terms");
  return rec;
}

}  // namespace

std::optional<RecurrenceAnsatz> guess_constant_rec(const std::vector<Scalar>& terms,
                                                   int max_order, int margin) {
  if (max_order < 1) throw DomainError("max_order must be >= 1");
  return guess(terms, max_order, 0, margin);
}

std::optional<RecurrenceAnsatz> guess_polyrec(const std::vector<Scalar>& terms, int max_order,
                                              int coeff_degree, int margin) {
  if (max_order < 1 || coeff_degree < 0) throw DomainError("need max_order >= 1, degree >= 0");
  return guess(terms, max_order, coeff_degree, margin);
}

}  // namespace logcv
