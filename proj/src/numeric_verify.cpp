#include "czorb/numeric_verify.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "czorb/error.hpp"

namespace czorb {

namespace {

constexpr int kMinDepth = 4;
constexpr int kMaxDepth = 60;

// Adaptive Simpson on [a, b] with Richardson-corrected panels. Each accepted
// panel contributes |S2 - S1| / 15 to the error estimate.
template <typename F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F f, std::int64_t budget) : f_(std::move(f)), budget_(budget) {}

  double integrate(double a, double b, double eps) {
    const double fa = eval(a);
    const double fm = eval(0.5 * (a + b));
    const double fb = eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(a, b, fa, fm, fb, whole, eps, 0);
  }

  double error() const noexcept { return error_; }
  std::int64_t evaluations() const noexcept { return evaluations_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  double eval(double x) {
    ++evaluations_;
    return f_(x);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole,
                double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    if (evaluations_ + 2 > budget_) {
      exhausted_ = true;
      error_ += std::abs(whole);
      return whole;
    }
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth >= kMinDepth && (std::abs(diff) <= 15.0 * eps || depth >= kMaxDepth)) {
      error_ += std::abs(diff) / 15.0;
      return left + right + diff / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
  }

  F f_;
  std::int64_t budget_;
  std::int64_t evaluations_ = 0;
  double error_ = 0.0;
  bool exhausted_ = false;
};

}  // namespace

QuadratureResult chart_integral(std::int64_t w0, std::int64_t w1, double tol,
                                std::int64_t eval_budget) {
  if (w0 < 1 || w1 < 1) throw DomainError("chart weights must be positive");
  if (!(tol > 0.0) || tol > 1e-4) {
    std::ostringstream msg;
    msg << "tolerance must lie in (0, 1e-4], got " << tol;
    throw DomainError(msg.str());
  }
  if (eval_budget < 3) throw DomainError("evaluation budget too small");

  const double a = static_cast<double>(w0);
  const double b = static_cast<double>(w1);
  // r = u/(1-u), dr = du/(1-u)^2; the integrand vanishes like (1-u) at u = 1.
  auto radial = [a, b](double u) {
    if (u >= 1.0) return 0.0;
    const double s = 1.0 - u;
    const double r = u / s;
    const double q = a * r * r + b;
    return b * r / (q * q) / (s * s);
  };

  // value = -(1/pi) * 2pi * I = -2 I, so I needs tol/2; keep a factor 4 margin.
  AdaptiveSimpson simpson(radial, eval_budget);
  const double radial_integral = simpson.integrate(0.0, 1.0, tol / 8.0);
  const QuadratureResult result{
      .value = -2.0 * radial_integral,
      .estimated_error = 2.0 * simpson.error(),
      .evaluations = simpson.evaluations(),
  };
  if (simpson.exhausted() || result.estimated_error > tol) {
    std::ostringstream msg;
    msg << "chart integral did not reach tolerance " << tol << " within " << eval_budget
        << " evaluations (estimated error " << result.estimated_error << ")";
    throw ConvergenceError(msg.str(), result.estimated_error);
  }
  return result;
}

AreaChain area_chain_steps(const WeightVector& full_w) {
  const std::int64_t w0 = full_w[0];
  const std::int64_t w1 = full_w[1];
  const std::int64_t g = std::gcd(w0, w1);
  const std::int64_t w0w1 = checked_mul(w0, w1);

  AreaChain chain{
      .chart_value = Rational(-1, w0),
      .group_order = w1 / g,
      .local_value = Rational(0),
      .inclusion_degree = Rational(checked_mul(weight_product(full_w), g), w0w1),
      .area = Rational(0),
  };
  chain.local_value = chain.chart_value / Rational(chain.group_order);
  chain.area = chain.local_value / chain.inclusion_degree;
  return chain;
}

Rational area_chain(const WeightVector& full_w) { return area_chain_steps(full_w).area; }

}  // namespace czorb
