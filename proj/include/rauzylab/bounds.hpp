// Copyright 2026 The rauzylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAUZYLAB_BOUNDS_HPP_
#define RAUZYLAB_BOUNDS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rauzylab {

// Decimal digits used for MPFR work. RAUZYLAB_PRECISION overrides the
// default of 50.
int working_digits();

// a + c * sqrt(radicand), radicand >= 0. A radicand that is the square of a
// rational is folded into a.
class Surd {
 public:
  Surd() = default;
  Surd(mpq_class a);  // NOLINT: rationals convert implicitly
  Surd(mpq_class a, mpq_class c, mpq_class radicand);

  const mpq_class& a() const { return a_; }
  const mpq_class& c() const { return c_; }
  const mpq_class& radicand() const { return radicand_; }
  bool is_rational() const { return c_ == 0; }

  // Exact sign of (*this - q).
  int compare(const mpq_class& q) const;
  // Sign of (*this - other). Exact when the radicands agree, otherwise
  // decided by enclosures of increasing precision.
  int compare(const Surd& other) const;

  // Enclosure [lo, hi] at `digits` decimal digits.
  std::pair<std::string, std::string> enclosure(int digits) const;
  // `digits` significant decimal digits, rounded to nearest.
  std::string decimal(int digits = 30) const;
  // "p/q" when rational, else the 30-digit decimal.
  std::string str() const;
  double approx() const;

 private:
  mpq_class a_ = 0;
  mpq_class c_ = 0;
  mpq_class radicand_ = 0;
};

bool operator==(const Surd& s, const mpq_class& q);
bool operator<(const Surd& s, const mpq_class& q);
bool operator>(const Surd& s, const mpq_class& q);

// Parses "2", "-3", "2.05", "4/3". Throws ParseError.
mpq_class parse_rational(std::string_view text);
std::string rational_str(const mpq_class& q);

// Lower bound on log(x) / log(y) for x > 0, y > 1, rounded outward at the
// working precision; `decimal` renders the bound, rounded down.
struct LogRatio {
  mpq_class lower;
  std::string decimal;
};
LogRatio log_ratio(const mpq_class& x, const mpq_class& y, int digits = 30);

struct BoundPair {
  Surd liminf;
  Surd limsup;
};

// Complexity lower bounds from an irrationality exponent mu >= 2.
BoundPair pisa_bounds(const mpq_class& mu);
BoundPair pisabis_bounds(const mpq_class& mu);
// 4/3 at mu = 2, the square-root formula above 2.
Surd thm1_bound(const mpq_class& mu);

// (4 - 3 rho) / (2 (1 + 2 rho)(2 - rho)) for 0 < rho < 2.
mpq_class delta(const mpq_class& rho);
// 1 <= rho < 4/3.
bool in_delta_regime(const mpq_class& rho);

struct Thm2Bounds {
  mpq_class rep_bound;  // 1 - delta
  mpq_class mu_bound;   // 2 + (4 - 3 rho) / (rho (9 - 4 rho))
};
// Requires 1 <= rho < 4/3.
Thm2Bounds thm2_bounds(const mpq_class& rho);

enum class CurveId {
  kPisaLiminf,
  kPisaLimsup,
  kPisaBisLiminf,
  kPisaBisLimsup,
  kThm1,
  kThm2Rep,
  kThm2Mu,
  kDelta,
};

std::string curve_name(CurveId id);
// Accepts the names above and the short forms pisa, pisabis, thm1, thm2,
// thm2-mu, delta.
CurveId parse_curve(std::string_view name);

struct BoundPoint {
  CurveId curve;
  mpq_class parameter;
  Surd value;
};

BoundPoint evaluate_curve(CurveId curve, const mpq_class& parameter);

// lo, lo + step, ... below hi, then hi itself.
std::vector<BoundPoint> curve_table(CurveId curve, const mpq_class& lo,
                                    const mpq_class& hi,
                                    const mpq_class& step);

// Columns parameter,value,curve_id.
std::string bounds_csv(const std::vector<BoundPoint>& points);

}  // namespace rauzylab

#endif  // RAUZYLAB_BOUNDS_HPP_
