#include "kummergap/divisor.hpp"

#include <algorithm>

namespace kummergap {

void Divisor::set(FiberLabel label, Int coefficient, Int fiber_size) {
  entries_[label] = Entry{coefficient, fiber_size};
}

Int Divisor::coefficient(FiberLabel label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? 0 : it->second.coefficient;
}

Int Divisor::fiber_size(FiberLabel label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? 0 : it->second.fiber_size;
}

Int Divisor::degree() const {
  Int total = 0;
  for (const auto& [label, e] : entries_) total = checked_add(total, checked_mul(e.coefficient, e.fiber_size));
  return total;
}

bool Divisor::effective() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.coefficient >= 0; });
}

bool Divisor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.coefficient == 0; });
}

Divisor differential_divisor(const KummerCurve& curve, Anchor anchor, Int i, Int j) {
  const Int m = curve.m();
  if (i < 1 || i >= m) fail(ErrorCode::InvalidArgument, "index i=" + std::to_string(i) + " outside 1..m-1");
  const Int beta = curve.beta0(i);
  if (j < 0 || j >= beta)
    fail(ErrorCode::InvalidArgument,
         "index j=" + std::to_string(j) + " outside 0.." + std::to_string(beta - 1) + " for i=" + std::to_string(i));
  if (!anchor.generic && (anchor.root < 1 || anchor.root > curve.r()))
    fail(ErrorCode::InvalidArgument, "anchor root " + std::to_string(anchor.root) + " outside 1..r");

  auto exact = [](Int numerator, Int d) {
    if (numerator % d != 0) fail(ErrorCode::Internal, "fiber coefficient is not integral");
    return numerator / d;
  };
  Divisor out;
  for (std::size_t k = 1; k <= curve.r(); ++k) {
    const Place place(k);
    const Int d = curve.fiber_size(place);
    const Int prod = i * curve.lambda(place);
    Int numerator = m * (1 + floor_div(prod, m) - ceil_div(prod, m)) + curve.t_value(place, i);
    // (x - a_s)^j contributes m j / d along the fiber over a_s
    if (!anchor.generic && anchor.root == k) numerator += m * j;
    out.set(FiberLabel::root(k), exact(numerator, d) - 1, d);
  }
  if (anchor.generic) out.set(FiberLabel::extra(), j, m);
  const Int d0 = curve.fiber_size(Place::infinity());
  out.set(FiberLabel::infinity(), exact(m * (beta - 1 - j) + curve.t_value(Place::infinity(), i), d0) - 1, d0);
  return out;
}

std::vector<std::pair<Int, Int>> differential_indices(const KummerCurve& curve) {
  std::vector<std::pair<Int, Int>> out;
  for (Int i = 1; i < curve.m(); ++i) {
    const Int beta = curve.beta0(i);
    for (Int j = 0; j < beta; ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace kummergap
