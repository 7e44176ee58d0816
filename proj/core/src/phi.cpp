#include "typik/phi.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstring>

#include "typik/error.hpp"

namespace typik {

namespace {

using boost::multiprecision::cpp_int;

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxBits = mpfr_prec_t{1} << 16;
const cpp_int kSentinelBound = cpp_int(1) << 62;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

class Mpz {
 public:
  Mpz() { mpz_init(v_); }
  explicit Mpz(const cpp_int& value) {
    mpz_init(v_);
    const std::string s = value.str();
    mpz_set_str(v_, s.c_str(), 10);
  }
  ~Mpz() { mpz_clear(v_); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  mpz_ptr get() { return v_; }
  mpz_srcptr get() const { return v_; }
  cpp_int to_cpp_int() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    cpp_int out(s);
    void (*free_fn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(s, std::strlen(s) + 1);
    return out;
  }

 private:
  mpz_t v_;
};

cpp_int pow10(int e) {
  cpp_int p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

cpp_int floor_div(const cpp_int& a, const cpp_int& b) {
  // b > 0
  cpp_int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Threshold to_threshold(const cpp_int& floor_value) {
  if (floor_value >= kSentinelBound) return Threshold::pos_infinity();
  if (floor_value <= -kSentinelBound) return Threshold::neg_infinity();
  return Threshold::finite(static_cast<std::int64_t>(floor_value));
}

/// floor(scale_num / scale_den * ln(a / b)), with scale_num, scale_den > 0.
cpp_int floor_scaled_log(long a, long b, const cpp_int& scale_num, const cpp_int& scale_den) {
  if (a == b) return 0;
  const Mpz num(scale_num);
  const Mpz den(scale_den);
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxBits; prec *= 2) {
    Mpfr lo(prec);
    Mpfr hi(prec);
    mpfr_set_si(lo.get(), a, MPFR_RNDD);
    mpfr_div_si(lo.get(), lo.get(), b, MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_mul_z(lo.get(), lo.get(), num.get(), MPFR_RNDD);
    mpfr_div_z(lo.get(), lo.get(), den.get(), MPFR_RNDD);

    mpfr_set_si(hi.get(), a, MPFR_RNDU);
    mpfr_div_si(hi.get(), hi.get(), b, MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_mul_z(hi.get(), hi.get(), num.get(), MPFR_RNDU);
    mpfr_div_z(hi.get(), hi.get(), den.get(), MPFR_RNDU);

    Mpz flo;
    Mpz fhi;
    mpfr_get_z(flo.get(), lo.get(), MPFR_RNDD);
    mpfr_get_z(fhi.get(), hi.get(), MPFR_RNDD);
    if (mpz_cmp(flo.get(), fhi.get()) == 0) return flo.to_cpp_int();
  }
  throw Error("threshold floor not resolved within the precision limit");
}

}  // namespace

std::string Threshold::to_string() const {
  switch (kind_) {
    case Kind::kNegInfinity: return "-inf";
    case Kind::kPosInfinity: return "+inf";
    case Kind::kFinite: break;
  }
  return std::to_string(value_);
}

std::strong_ordering Threshold::operator<=>(const Threshold& other) const {
  auto rank = [](Kind k) { return k == Kind::kNegInfinity ? 0 : k == Kind::kFinite ? 1 : 2; };
  if (kind_ != other.kind_) return rank(kind_) <=> rank(other.kind_);
  return kind_ == Kind::kFinite ? value_ <=> other.value_ : std::strong_ordering::equal;
}

PhiN::PhiN(int n, int precision, std::vector<Threshold> thresholds)
    : n_(n), precision_(precision), thresholds_(std::move(thresholds)) {
  if (static_cast<int>(thresholds_.size()) != n_) throw Error("phi_n needs exactly n thresholds");
  if (!std::is_sorted(thresholds_.begin(), thresholds_.end())) throw Error("phi_n thresholds must be non-decreasing");
}

int PhiN::level(std::int64_t scaled_sum) const noexcept {
  // thresholds exceeded by W form a prefix of the sorted list
  auto it = std::partition_point(thresholds_.begin(), thresholds_.end(),
                                 [scaled_sum](const Threshold& t) { return t.exceeded_by(scaled_sum); });
  return static_cast<int>(it - thresholds_.begin());
}

PhiN compute_thresholds(const PhiConfig& phi, int n, int precision) {
  if (n < 1) throw Error("resolution must be at least 1");
  if (!phi.monotone_non_decreasing()) throw Error("phi must be monotone non-decreasing");
  const cpp_int scale = cpp_int(n) * pow10(precision);
  std::vector<Threshold> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const long a = 2L * j - 1;        // p = a / (2n)
    const long b = 2L * n - 2L * j + 1;  // 1 - p = b / (2n)
    if (phi.kind == PhiConfig::Kind::kLogistic) {
      // phi^{-1}(p) = ln(a / b) / gain
      const cpp_int num = scale * phi.gain.den();
      const cpp_int den = cpp_int(phi.gain.num());
      out.push_back(to_threshold(floor_scaled_log(a, b, num, den)));
      continue;
    }
    const Rational& s = phi.slope;
    const Rational& o = phi.offset;
    if (s.num() == 0) {
      // phi is the constant clamp(offset); compare it with p = a / (2n)
      const cpp_int c_num = std::clamp<std::int64_t>(o.num(), 0, o.den());
      const bool above = c_num * 2 * n > cpp_int(a) * o.den();
      out.push_back(above ? Threshold::neg_infinity() : Threshold::pos_infinity());
      continue;
    }
    // S * (a / (2n) - on / od) * sd / sn
    const cpp_int numer = scale * s.den() * (cpp_int(a) * o.den() - cpp_int(2) * n * o.num());
    const cpp_int denom = cpp_int(2) * n * o.den() * s.num();
    out.push_back(to_threshold(floor_div(numer, denom)));
  }
  return PhiN(n, precision, std::move(out));
}

TruthDegree phi_n_apply(const PhiN& pn, std::int64_t scaled_sum) {
  return {pn.level(scaled_sum), pn.resolution()};
}

double phi_evaluate(const PhiConfig& phi, double x) {
  if (phi.kind == PhiConfig::Kind::kLogistic) return 1.0 / (1.0 + std::exp(-phi.gain.to_double() * x));
  return std::clamp(phi.slope.to_double() * x + phi.offset.to_double(), 0.0, 1.0);
}

int phi_n_direct(const PhiConfig& phi, int n, int precision, std::int64_t scaled_sum) {
  const cpp_int scale = cpp_int(n) * pow10(precision);
  int level = 0;
  if (phi.kind == PhiConfig::Kind::kClampedLinear) {
    // phi(x) = clamp(sn*W/(sd*S) + on/od, 0, 1) as an exact fraction pn/pd
    cpp_int pd = cpp_int(phi.slope.den()) * scale * phi.offset.den();
    cpp_int pnum = cpp_int(phi.slope.num()) * scaled_sum * phi.offset.den() +
                   cpp_int(phi.offset.num()) * phi.slope.den() * scale;
    if (pnum < 0) pnum = 0;
    if (pnum > pd) pnum = pd;
    for (int j = 1; j <= n; ++j) {
      // phi > (2j-1)/(2n)
      if (pnum * 2 * n > cpp_int(2 * j - 1) * pd) ++level;
    }
    return level;
  }
  if (scaled_sum == 0) {
    // phi(0) = 1/2 exactly
    for (int j = 1; j <= n; ++j) level += (n > 2 * j - 1) ? 1 : 0;
    return level;
  }
  const Mpz gain_den_scale(cpp_int(phi.gain.den()) * scale);
  const Mpz gain_num_w(cpp_int(phi.gain.num()) * scaled_sum);
  for (mpfr_prec_t prec = 512; prec <= kMaxBits; prec *= 2) {
    Mpfr value(prec);
    // phi = 1 / (1 + exp(-gain * W / S))
    mpfr_set_z(value.get(), gain_num_w.get(), MPFR_RNDN);
    mpfr_div_z(value.get(), value.get(), gain_den_scale.get(), MPFR_RNDN);
    mpfr_neg(value.get(), value.get(), MPFR_RNDN);
    mpfr_exp(value.get(), value.get(), MPFR_RNDN);
    mpfr_add_ui(value.get(), value.get(), 1, MPFR_RNDN);
    mpfr_ui_div(value.get(), 1, value.get(), MPFR_RNDN);

    bool ambiguous = false;
    level = 0;
    Mpfr diff(prec);
    for (int j = 1; j <= n; ++j) {
      mpfr_set_si(diff.get(), 2 * j - 1, MPFR_RNDN);
      mpfr_div_si(diff.get(), diff.get(), 2 * n, MPFR_RNDN);
      mpfr_sub(diff.get(), value.get(), diff.get(), MPFR_RNDN);
      if (mpfr_zero_p(diff.get()) || mpfr_get_exp(diff.get()) < -(prec - 64)) {
        ambiguous = true;
        break;
      }
      if (mpfr_sgn(diff.get()) > 0) ++level;
    }
    if (!ambiguous) return level;
  }
  throw Error("phi_n level not resolved within the precision limit");
}

}  // namespace typik
