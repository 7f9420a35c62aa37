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

#include "rauzylab/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

mpfr_prec_t bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

bool is_square(const mpq_class& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
         mpz_perfect_square_p(q.get_den_mpz_t());
}

mpq_class exact_sqrt(const mpq_class& q) {
  mpz_class num = sqrt(mpz_class(q.get_num()));
  mpz_class den = sqrt(mpz_class(q.get_den()));
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

void enclose(const Surd& s, mpfr_ptr lo, mpfr_ptr hi) {
  mpfr_set_q(lo, s.a().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, s.a().get_mpq_t(), MPFR_RNDU);
  if (s.is_rational()) return;
  const mpfr_prec_t bits = mpfr_get_prec(lo);
  Mpfr r_lo(bits), r_hi(bits);
  mpfr_set_q(r_lo.get(), s.radicand().get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(r_lo.get(), r_lo.get(), MPFR_RNDD);
  mpfr_set_q(r_hi.get(), s.radicand().get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(r_hi.get(), r_hi.get(), MPFR_RNDU);
  if (sgn(s.c()) > 0) {
    mpfr_mul_q(r_lo.get(), r_lo.get(), s.c().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r_hi.get(), r_hi.get(), s.c().get_mpq_t(), MPFR_RNDU);
    mpfr_add(lo, lo, r_lo.get(), MPFR_RNDD);
    mpfr_add(hi, hi, r_hi.get(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r_hi.get(), r_hi.get(), s.c().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r_lo.get(), r_lo.get(), s.c().get_mpq_t(), MPFR_RNDU);
    mpfr_add(lo, lo, r_hi.get(), MPFR_RNDD);
    mpfr_add(hi, hi, r_lo.get(), MPFR_RNDU);
  }
}

std::string format(mpfr_ptr v, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%#.*Rg", digits, v);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void require_mu(const mpq_class& mu) {
  if (mu < 2) {
    throw DomainError("irrationality exponent must be at least 2, got " +
                      rational_str(mu));
  }
}

}  // namespace

int working_digits() {
  const char* env = std::getenv("RAUZYLAB_PRECISION");
  if (env == nullptr) return 50;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 10 || v > 100000) {
    throw DomainError("RAUZYLAB_PRECISION must be an integer in [10, 100000]");
  }
  return static_cast<int>(v);
}

LogRatio log_ratio(const mpq_class& x, const mpq_class& y, int digits) {
  if (sgn(x) <= 0 || y <= 1) throw DomainError("log ratio outside domain");
  const mpfr_prec_t bits = bits_for(std::max(digits, working_digits())) + 64;
  Mpfr num(bits), den(bits);
  mpfr_set_q(num.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_log(num.get(), num.get(), MPFR_RNDD);
  // A negative numerator is made smaller by the smaller denominator.
  const mpfr_rnd_t den_rnd = mpfr_sgn(num.get()) >= 0 ? MPFR_RNDU : MPFR_RNDD;
  mpfr_set_q(den.get(), y.get_mpq_t(), den_rnd);
  mpfr_log(den.get(), den.get(), den_rnd);
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDD);
  LogRatio out;
  mpfr_get_q(out.lower.get_mpq_t(), num.get());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%#.*RDg", digits, num.get());
  out.decimal = buf;
  mpfr_free_str(buf);
  return out;
}

Surd::Surd(mpq_class a) : a_(std::move(a)) {}

Surd::Surd(mpq_class a, mpq_class c, mpq_class radicand)
    : a_(std::move(a)), c_(std::move(c)), radicand_(std::move(radicand)) {
  if (sgn(radicand_) < 0) throw DomainError("negative radicand");
  if (c_ == 0 || radicand_ == 0) {
    c_ = 0;
    radicand_ = 0;
  } else if (is_square(radicand_)) {
    a_ += c_ * exact_sqrt(radicand_);
    c_ = 0;
    radicand_ = 0;
  }
}

int Surd::compare(const mpq_class& q) const {
  mpq_class d = q - a_;
  if (is_rational()) return -sgn(d);
  mpq_class lhs = c_ * c_ * radicand_;
  mpq_class rhs = d * d;
  if (sgn(c_) > 0) {
    if (sgn(d) < 0) return 1;
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  }
  if (sgn(d) > 0) return -1;
  return lhs < rhs ? 1 : (lhs > rhs ? -1 : 0);
}

int Surd::compare(const Surd& other) const {
  if (other.is_rational()) return compare(other.a_);
  if (is_rational()) return -other.compare(a_);
  if (radicand_ == other.radicand_) {
    return Surd(a_ - other.a_, c_ - other.c_, radicand_).compare(mpq_class(0));
  }
  for (mpfr_prec_t bits = 128; bits <= (1 << 16); bits *= 2) {
    Mpfr lo1(bits), hi1(bits), lo2(bits), hi2(bits);
    enclose(*this, lo1.get(), hi1.get());
    enclose(other, lo2.get(), hi2.get());
    if (mpfr_greater_p(lo1.get(), hi2.get())) return 1;
    if (mpfr_less_p(hi1.get(), lo2.get())) return -1;
  }
  // Indistinguishable at 2^16 bits: equal surds written with different
  // radicands, such as sqrt(8) and 2 sqrt(2).
  return 0;
}

std::pair<std::string, std::string> Surd::enclosure(int digits) const {
  Mpfr lo(bits_for(digits)), hi(bits_for(digits));
  enclose(*this, lo.get(), hi.get());
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*RDg", digits, lo.get());
  mpfr_asprintf(&b, "%.*RUg", digits, hi.get());
  std::pair<std::string, std::string> out{a, b};
  mpfr_free_str(a);
  mpfr_free_str(b);
  return out;
}

std::string Surd::decimal(int digits) const {
  Mpfr lo(bits_for(std::max(digits, working_digits())) + 64);
  Mpfr hi(mpfr_get_prec(lo.get()));
  enclose(*this, lo.get(), hi.get());
  return format(lo.get(), digits);
}

std::string Surd::str() const {
  return is_rational() ? rational_str(a_) : decimal(30);
}

double Surd::approx() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + c_.get_d() * std::sqrt(radicand_.get_d());
}

bool operator==(const Surd& s, const mpq_class& q) { return s.compare(q) == 0; }
bool operator<(const Surd& s, const mpq_class& q) { return s.compare(q) < 0; }
bool operator>(const Surd& s, const mpq_class& q) { return s.compare(q) > 0; }

mpq_class parse_rational(std::string_view text) {
  auto fail = [&](std::size_t pos) -> mpq_class {
    throw ParseError("not a rational number: '" + std::string(text) + "'",
                     pos);
  };
  if (text.empty()) return fail(0);
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  auto digits = [&](std::size_t& pos, std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos++]);
    }
    return pos > start;
  };
  std::string whole;
  if (!digits(i, whole)) return fail(i);
  mpq_class value;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string den;
    if (!digits(i, den)) return fail(i);
    if (i != text.size()) return fail(i);
    mpz_class d(den, 10);
    if (d == 0) return fail(i - 1);
    value = mpq_class(mpz_class(whole, 10), d);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::string frac;
    if (!digits(i, frac)) return fail(i);
    if (i != text.size()) return fail(i);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = mpq_class(mpz_class(whole + frac, 10), scale);
  } else {
    if (i != text.size()) return fail(i);
    value = mpq_class(mpz_class(whole, 10));
  }
  value.canonicalize();
  return neg ? mpq_class(-value) : value;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BoundPair pisa_bounds(const mpq_class& mu) {
  require_mu(mu);
  mpq_class num = 1 - 2 * mu * (mu - 1) * (mu - 2);
  mpq_class mu3 = mu * mu * mu;
  mpq_class den_inf = mu3 * (mu - 1);
  mpq_class den_sup = 3 * mu3 - 6 * mu * mu + 4 * mu - 1;
  return {Surd(1 + num / den_inf), Surd(1 + num / den_sup)};
}

BoundPair pisabis_bounds(const mpq_class& mu) {
  require_mu(mu);
  mpq_class mu2 = mu * mu;
  mpq_class mu3 = mu2 * mu;
  mpq_class num = -mu3 + 2 * mu2 + mu - 1;
  mpq_class den = mu3 * mu - 2 * mu3 + 3 * mu2 - 3 * mu + 1;
  mpq_class m1 = mu - 1;
  mpq_class scale = 2 * mu * m1;
  return {Surd(1 + num / den),
          Surd(mu / scale, 1 / scale, 4 * m1 * m1 * m1 + mu2)};
}

Surd thm1_bound(const mpq_class& mu) {
  require_mu(mu);
  if (mu == 2) return Surd(mpq_class(4, 3));
  mpq_class d = mu - 2;
  mpq_class radicand = 81 * d * d - 10 * mu + 29;
  if (sgn(radicand) < 0) {
    throw DomainError("radicand negative at mu = " + rational_str(mu));
  }
  mpq_class den = 8 * d;
  return Surd(1 + (mu + 1) / den, -1 / den, radicand);
}

mpq_class delta(const mpq_class& rho) {
  if (sgn(rho) <= 0 || rho >= 2) {
    throw DomainError("delta needs 0 < rho < 2, got " + rational_str(rho));
  }
  return (4 - 3 * rho) / (2 * (1 + 2 * rho) * (2 - rho));
}

bool in_delta_regime(const mpq_class& rho) {
  return rho >= 1 && rho < mpq_class(4, 3);
}

Thm2Bounds thm2_bounds(const mpq_class& rho) {
  if (!in_delta_regime(rho)) {
    throw DomainError("rho must lie in [1, 4/3), got " + rational_str(rho));
  }
  return {1 - delta(rho), 2 + (4 - 3 * rho) / (rho * (9 - 4 * rho))};
}

namespace {

struct CurveName {
  CurveId id;
  const char* name;
  const char* alias;
};

constexpr CurveName kCurves[] = {
    {CurveId::kPisaLiminf, "PisaLiminf", "pisa-liminf"},
    {CurveId::kPisaLimsup, "PisaLimsup", "pisa"},
    {CurveId::kPisaBisLiminf, "PisaBisLiminf", "pisabis-liminf"},
    {CurveId::kPisaBisLimsup, "PisaBisLimsup", "pisabis"},
    {CurveId::kThm1, "Thm1", "thm1"},
    {CurveId::kThm2Rep, "Thm2Rep", "thm2"},
    {CurveId::kThm2Mu, "Thm2Mu", "thm2-mu"},
    {CurveId::kDelta, "Delta", "delta"},
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(ch));
  return out;
}

}  // namespace

std::string curve_name(CurveId id) {
  for (const auto& c : kCurves) {
    if (c.id == id) return c.name;
  }
  return "?";
}

CurveId parse_curve(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& c : kCurves) {
    if (key == lower(c.name) || key == c.alias) return c.id;
  }
  throw ParseError("unknown curve '" + std::string(name) + "'", 0);
}

BoundPoint evaluate_curve(CurveId curve, const mpq_class& p) {
  switch (curve) {
    case CurveId::kPisaLiminf:
      return {curve, p, pisa_bounds(p).liminf};
    case CurveId::kPisaLimsup:
      return {curve, p, pisa_bounds(p).limsup};
    case CurveId::kPisaBisLiminf:
      return {curve, p, pisabis_bounds(p).liminf};
    case CurveId::kPisaBisLimsup:
      return {curve, p, pisabis_bounds(p).limsup};
    case CurveId::kThm1:
      return {curve, p, thm1_bound(p)};
    case CurveId::kThm2Rep:
      return {curve, p, Surd(thm2_bounds(p).rep_bound)};
    case CurveId::kThm2Mu:
      return {curve, p, Surd(thm2_bounds(p).mu_bound)};
    case CurveId::kDelta:
      return {curve, p, Surd(delta(p))};
  }
  throw DomainError("unknown curve");
}

std::vector<BoundPoint> curve_table(CurveId curve, const mpq_class& lo,
                                    const mpq_class& hi,
                                    const mpq_class& step) {
  if (sgn(step) <= 0) throw DomainError("step must be positive");
  if (lo > hi) throw DomainError("empty range");
  std::vector<BoundPoint> out;
  for (mpq_class p = lo; p < hi; p += step) {
    out.push_back(evaluate_curve(curve, p));
  }
  out.push_back(evaluate_curve(curve, hi));
  return out;
}

std::string bounds_csv(const std::vector<BoundPoint>& points) {
  std::string out = "parameter,value,curve_id\n";
  for (const auto& p : points) {
    out += rational_str(p.parameter) + "," + p.value.str() + "," +
           curve_name(p.curve) + "\n";
  }
  return out;
}

}  // namespace rauzylab
