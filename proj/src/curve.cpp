#include "kummergap/curve.hpp"

#include <algorithm>

namespace kummergap {

KummerCurve::KummerCurve(Int m, std::vector<Int> lambdas) : m_(m), lambdas_(std::move(lambdas)) {
  if (m_ < 2) fail(ErrorCode::InvalidArgument, "Kummer degree m must be at least 2");
  if (lambdas_.empty()) fail(ErrorCode::InvalidArgument, "at least one ramification multiplicity is required");
  Int common = m_;
  for (Int lam : lambdas_) {
    if (lam < 1 || lam >= m_)
      fail(ErrorCode::InvalidArgument,
           "multiplicity " + std::to_string(lam) + " outside 1.." + std::to_string(m_ - 1));
    lambda0_ = checked_add(lambda0_, lam);
    common = gcd(common, lam);
  }
  if (common != 1)
    fail(ErrorCode::InvalidArgument, "gcd(m, lambda_1, ..., lambda_r) = " + std::to_string(common) +
                                         ": f is a perfect power and the cover is not a Kummer extension of degree m");
}

void KummerCurve::check_place(Place s) const {
  if (s.index() > r())
    fail(ErrorCode::InvalidArgument, "place index " + std::to_string(s.index()) + " outside 0.." + std::to_string(r()));
}

void KummerCurve::check_index(Int i) const {
  if (i < 1 || i >= m_) fail(ErrorCode::InvalidArgument, "index i=" + std::to_string(i) + " outside 1..m-1");
}

Int KummerCurve::lambda(Place s) const {
  check_place(s);
  return s.is_infinity() ? lambda0_ : lambdas_[s.index() - 1];
}

Int KummerCurve::fiber_size(Place s) const { return gcd(m_, lambda(s)); }

bool KummerCurve::has_totally_ramified_place() const {
  for (std::size_t s = 0; s <= r(); ++s)
    if (totally_ramified(Place(s))) return true;
  return false;
}

bool KummerCurve::all_coprime() const { return roots_coprime() && totally_ramified(Place::infinity()); }

bool KummerCurve::roots_coprime() const {
  return std::all_of(lambdas_.begin(), lambdas_.end(), [&](Int lam) { return gcd(m_, lam) == 1; });
}

std::vector<Place> KummerCurve::totally_ramified_places() const {
  std::vector<Place> out;
  for (std::size_t s = 0; s <= r(); ++s)
    if (totally_ramified(Place(s))) out.emplace_back(s);
  return out;
}

Int KummerCurve::genus() const {
  Int numerator = checked_add(checked_mul(m_, static_cast<Int>(r()) - 1), 2);
  for (std::size_t s = 0; s <= r(); ++s) numerator = checked_sub(numerator, fiber_size(Place(s)));
  if (numerator < 0 || numerator % 2 != 0)
    fail(ErrorCode::Internal, "genus numerator " + std::to_string(numerator) + " is not a nonnegative even integer");
  return numerator / 2;
}

Int KummerCurve::t_value(Place s, Int i) const {
  check_index(i);
  const Int prod = checked_mul(i, lambda(s));
  return s.is_infinity() ? m_ - mod(prod, m_) : mod(prod, m_);
}

Int KummerCurve::beta0(Int i) const {
  check_index(i);
  Int total = 0;
  for (Int lam : lambdas_) total = checked_add(total, ceil_div(checked_mul(i, lam), m_));
  total = checked_sub(total, floor_div(checked_mul(i, lambda0_), m_)) - 1;
  if (has_totally_ramified_place() && (total < 0 || total > static_cast<Int>(r()) - 1))
    fail(ErrorCode::Internal, "beta0(" + std::to_string(i) + ") = " + std::to_string(total) + " outside [0, r-1]");
  return total;
}

Int KummerCurve::beta_s(Place s, Int i) const {
  check_index(i);
  if (s.is_infinity()) fail(ErrorCode::InvalidArgument, "beta_s is defined for root places s >= 1");
  if (!totally_ramified(s))
    fail(ErrorCode::NotTotallyRamified, "place not totally ramified: gcd(m, lambda_" + std::to_string(s.index()) +
                                            ") = " + std::to_string(fiber_size(s)));
  const Int inverse = mod_inverse(lambda(s), m_);
  const Int scaled = checked_mul(i, inverse);
  Int total = 0;
  for (Int lam : lambdas_) total = checked_add(total, ceil_div(checked_mul(scaled, lam), m_));
  return checked_sub(total, floor_div(checked_mul(scaled, lambda0_), m_)) - 1;
}

Int KummerCurve::beta_max() const {
  Int best = beta0(1);
  for (Int i = 2; i < m_; ++i) best = std::max(best, beta0(i));
  return best;
}

Int KummerCurve::beta_min() const {
  Int best = beta0(1);
  for (Int i = 2; i < m_; ++i) best = std::min(best, beta0(i));
  return best;
}

std::string KummerCurve::describe() const {
  std::string out = "m=" + std::to_string(m_) + ", lambdas=(";
  for (std::size_t k = 0; k < lambdas_.size(); ++k) out += (k ? "," : "") + std::to_string(lambdas_[k]);
  return out + ")";
}

}  // namespace kummergap
