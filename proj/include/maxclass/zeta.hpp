#pragma once

// Exact rational functions in (p, t) for p-local zeta functions, t = p^{-s}.
//
// Numerators are Laurent polynomials with big-integer coefficients.
// Denominators are kept structurally as a monomial times a product of
// factors (1 - p^a t^b); that is enough to add, multiply, cancel and read off
// poles without general polynomial factorization.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "maxclass/arith.hpp"

namespace maxclass {

// p^p_exp t^t_exp.  Ordered by t-exponent first, then p-exponent; this is a
// total order compatible with multiplication, so leading and trailing terms
// of a product are products of leading and trailing terms.
struct Monomial {
  int t_exp = 0;
  int p_exp = 0;

  static Monomial pt(int p_exp, int t_exp) { return {t_exp, p_exp}; }

  Monomial operator*(const Monomial& o) const { return {t_exp + o.t_exp, p_exp + o.p_exp}; }
  Monomial operator/(const Monomial& o) const { return {t_exp - o.t_exp, p_exp - o.p_exp}; }
  Monomial inverse() const { return {-t_exp, -p_exp}; }
  bool is_one() const { return t_exp == 0 && p_exp == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Coefficient times monomial.
struct Term {
  BigInt coefficient;
  Monomial monomial;
  friend bool operator==(const Term&, const Term&) = default;
};

class BivariatePolynomial {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(const BigInt& c) { return term(c, {}); }

  static BivariatePolynomial term(const BigInt& c, Monomial m) {
    BivariatePolynomial r;
    if (c != 0) r.terms_.emplace(m, c);
    return r;
  }

  // 1 - p^a t^b
  static BivariatePolynomial one_minus(int a, int b) {
    return constant(1) - term(1, Monomial::pt(a, b));
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Smallest and largest term in the monomial order.
  Term trailing() const {
    detail::require(!is_zero(), "trailing term of zero polynomial");
    return {terms_.begin()->second, terms_.begin()->first};
  }
  Term leading() const {
    detail::require(!is_zero(), "leading term of zero polynomial");
    return {terms_.rbegin()->second, terms_.rbegin()->first};
  }

  int min_p_exp() const { return extreme([](const Monomial& m) { return m.p_exp; }, true); }
  int min_t_exp() const { return extreme([](const Monomial& m) { return m.t_exp; }, true); }
  int max_p_exp() const { return extreme([](const Monomial& m) { return m.p_exp; }, false); }
  int max_t_exp() const { return extreme([](const Monomial& m) { return m.t_exp; }, false); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  BivariatePolynomial operator-() const {
    BivariatePolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }

  BivariatePolynomial shifted(Monomial m) const {
    BivariatePolynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  BivariatePolynomial scaled(const BigInt& factor) const {
    if (factor == 0) return {};
    BivariatePolynomial r = *this;
    for (auto& [m, c] : r.terms_) c *= factor;
    return r;
  }

  BivariatePolynomial pow(unsigned e) const {
    BivariatePolynomial r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // (p, t) -> (1/p, 1/t)
  BivariatePolynomial substitute_inverse() const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.inverse(), c);
    return r;
  }

  // Exact quotient by `divisor`, or nullopt when it does not divide.  Since
  // the monomial order is a group order the quotient's terms lie between
  // trailing(this)/trailing(divisor) and leading(this)/leading(divisor).
  std::optional<BivariatePolynomial> divide_exact(const BivariatePolynomial& divisor) const {
    detail::require(!divisor.is_zero(), "division by the zero polynomial");
    if (is_zero()) return BivariatePolynomial{};
    const Term lead = divisor.leading();
    const Monomial floor = trailing().monomial / divisor.trailing().monomial;
    BivariatePolynomial rest = *this;
    BivariatePolynomial quotient;
    while (!rest.is_zero()) {
      const Term top = rest.leading();
      const Monomial qm = top.monomial / lead.monomial;
      if (qm < floor) return std::nullopt;
      if (top.coefficient % lead.coefficient != 0) return std::nullopt;
      const BivariatePolynomial qt = term(top.coefficient / lead.coefficient, qm);
      quotient += qt;
      rest -= qt * divisor;
    }
    return quotient;
  }

  // Substitute an integer for p; returns coefficients by t-exponent.
  std::map<int, Rational> specialize_p(std::uint64_t p) const {
    std::map<int, Rational> out;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      const BigInt pp = detail::big_pow(p, static_cast<unsigned>(std::abs(m.p_exp)));
      if (m.p_exp >= 0) v *= pp; else v /= pp;
      out[m.t_exp] += v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  template <typename Key>
  int extreme(Key key, bool minimum) const {
    detail::require(!is_zero(), "exponent bound of zero polynomial");
    int best = key(terms_.begin()->first);
    for (const auto& [m, c] : terms_) best = minimum ? std::min(best, key(m)) : std::max(best, key(m));
    return best;
  }

  TermMap terms_;
};

// 1 - p^a t^b with p^a t^b > 1 in the monomial order.
struct DenominatorFactor {
  int a = 0;
  int b = 1;

  Monomial monomial() const { return Monomial::pt(a, b); }
  BivariatePolynomial polynomial() const { return BivariatePolynomial::one_minus(a, b); }

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
  friend auto operator<=>(const DenominatorFactor&, const DenominatorFactor&) = default;
};

class BivariateRationalFunction {
 public:
  using FactorMap = std::map<DenominatorFactor, int>;

  BivariateRationalFunction() = default;

  static BivariateRationalFunction from_polynomial(BivariatePolynomial numerator) {
    BivariateRationalFunction f;
    f.numerator_ = std::move(numerator);
    f.normalize();
    return f;
  }

  // 1 / (1 - p^a t^b) for any (a, b) != (0, 0).  When p^a t^b < 1 the
  // factor is rewritten as -m (1 - 1/m) so the stored factor is oriented.
  static BivariateRationalFunction inverse_of_one_minus(int a, int b) {
    detail::require(a != 0 || b != 0, "1 - p^0 t^0 is zero");
    BivariateRationalFunction f;
    const Monomial m = Monomial::pt(a, b);
    if (m > Monomial{}) {
      f.numerator_ = BivariatePolynomial::constant(1);
      f.factors_[{a, b}] = 1;
    } else {
      // 1/(1 - m) = -m^{-1} / (1 - m^{-1})
      f.numerator_ = BivariatePolynomial::term(-1, m.inverse());
      f.factors_[{-a, -b}] = 1;
    }
    f.normalize();
    return f;
  }

  // numerator / product of (1 - p^a t^b)^multiplicity
  static BivariateRationalFunction with_factors(BivariatePolynomial numerator,
                                                const std::vector<DenominatorFactor>& factors) {
    BivariateRationalFunction f = from_polynomial(std::move(numerator));
    for (const DenominatorFactor& d : factors) f = f * inverse_of_one_minus(d.a, d.b);
    return f;
  }

  const BivariatePolynomial& numerator() const noexcept { return numerator_; }
  const Monomial& denominator_monomial() const noexcept { return shift_; }
  const FactorMap& factors() const noexcept { return factors_; }

  // Fully expanded denominator.
  BivariatePolynomial denominator() const {
    BivariatePolynomial d = BivariatePolynomial::term(1, shift_);
    for (const auto& [f, mult] : factors_) d = d * f.polynomial().pow(static_cast<unsigned>(mult));
    return d;
  }

  bool is_zero() const { return numerator_.is_zero(); }

  friend BivariateRationalFunction operator*(const BivariateRationalFunction& x,
                                             const BivariateRationalFunction& y) {
    BivariateRationalFunction r;
    r.numerator_ = x.numerator_ * y.numerator_;
    r.shift_ = x.shift_ * y.shift_;
    r.factors_ = x.factors_;
    for (const auto& [f, mult] : y.factors_) r.factors_[f] += mult;
    r.normalize();
    return r;
  }

  friend BivariateRationalFunction operator+(const BivariateRationalFunction& x,
                                             const BivariateRationalFunction& y) {
    BivariateRationalFunction r;
    r.shift_ = {std::max(x.shift_.t_exp, y.shift_.t_exp), std::max(x.shift_.p_exp, y.shift_.p_exp)};
    r.factors_ = x.factors_;
    for (const auto& [f, mult] : y.factors_) r.factors_[f] = std::max(r.factors_[f], mult);
    r.numerator_ = x.lift_to(r) + y.lift_to(r);
    r.normalize();
    return r;
  }

  BivariateRationalFunction operator-() const {
    BivariateRationalFunction r = *this;
    r.numerator_ = -r.numerator_;
    return r;
  }

  friend BivariateRationalFunction operator-(const BivariateRationalFunction& x,
                                             const BivariateRationalFunction& y) {
    return x + (-y);
  }

  // (p, t) -> (1/p, 1/t), renormalized.
  BivariateRationalFunction substitute_inverse() const {
    BivariateRationalFunction r = from_polynomial(numerator_.substitute_inverse());
    r = r * from_polynomial(BivariatePolynomial::term(1, shift_));
    for (const auto& [f, mult] : factors_) {
      for (int i = 0; i < mult; ++i) r = r * inverse_of_one_minus(-f.a, -f.b);
    }
    return r;
  }

  // Equality as rational functions (cross multiplication).
  friend bool equivalent(const BivariateRationalFunction& x, const BivariateRationalFunction& y) {
    return x.numerator_ * y.denominator() == y.numerator_ * x.denominator();
  }

  // The term c m with x = c m y, if x / y is a monomial.
  friend std::optional<Term> monomial_ratio(const BivariateRationalFunction& x,
                                            const BivariateRationalFunction& y) {
    const BivariatePolynomial lhs = x.numerator_ * y.denominator();
    const BivariatePolynomial rhs = y.numerator_ * x.denominator();
    if (lhs.is_zero() || rhs.is_zero()) return std::nullopt;
    const Term a = lhs.leading();
    const Term b = rhs.leading();
    if (a.coefficient % b.coefficient != 0) return std::nullopt;
    const Term ratio{a.coefficient / b.coefficient, a.monomial / b.monomial};
    if (lhs != (rhs * BivariatePolynomial::term(ratio.coefficient, ratio.monomial))) {
      return std::nullopt;
    }
    return ratio;
  }

 private:
  // Numerator of *this rewritten over the (larger) denominator of `target`.
  BivariatePolynomial lift_to(const BivariateRationalFunction& target) const {
    BivariatePolynomial n = numerator_.shifted(target.shift_ / shift_);
    for (const auto& [f, mult] : target.factors_) {
      const auto it = factors_.find(f);
      const int own = it == factors_.end() ? 0 : it->second;
      n = n * f.polynomial().pow(static_cast<unsigned>(mult - own));
    }
    return n;
  }

  // Cancels tracked factors that divide the numerator, then moves monomial
  // content so that all exponents are nonnegative and the denominator
  // monomial is minimal.  The denominator's trailing term is then +shift_.
  void normalize() {
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
    if (numerator_.is_zero()) {
      shift_ = {};
      factors_.clear();
      return;
    }
    for (auto& [f, mult] : factors_) {
      const BivariatePolynomial divisor = f.polynomial();
      while (mult > 0) {
        auto q = numerator_.divide_exact(divisor);
        if (!q) break;
        numerator_ = std::move(*q);
        --mult;
      }
    }
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });

    Monomial content = Monomial::pt(numerator_.min_p_exp(), numerator_.min_t_exp());
    Monomial shift = shift_ / content;
    numerator_ = numerator_.shifted(content.inverse());
    // Negative shift components move back to the numerator.
    const Monomial up = Monomial::pt(std::max(0, -shift.p_exp), std::max(0, -shift.t_exp));
    numerator_ = numerator_.shifted(up);
    shift_ = shift * up;
  }

  BivariatePolynomial numerator_;
  Monomial shift_{};
  FactorMap factors_;
};

bool equivalent(const BivariateRationalFunction& x, const BivariateRationalFunction& y);
std::optional<Term> monomial_ratio(const BivariateRationalFunction& x, const BivariateRationalFunction& y);

// (1 - t)^2 / ((1 - p^{n-2} t)(1 - p t)), reduced.
inline BivariateRationalFunction zeta_closed_form(int n) {
  detail::require(n >= 2, "zeta_closed_form: n must be at least 2");
  return BivariateRationalFunction::with_factors(BivariatePolynomial::one_minus(0, 1).pow(2),
                                                 {{n - 2, 1}, {1, 1}});
}

// The same zeta function assembled from its three geometric-series summands
//   1 + (1 - p^{2-n}) w/(1-w)
//     + (1-p^{-1})(1-p^{2-n})/(1-p^{3-n}) (u/(1-w) - u/(1-u))
//     + (1-p^{-1}) u/(1-u)
// with u = p t and w = p^{n-2} t.  At n = 3 the middle summand is 0/0; its
// limit (1-p^{-1})^2 u^2/(1-u)^2 comes from summing sum_{l=1}^{N-1} 1 = N-1.
inline BivariateRationalFunction zeta_geometric_sum_form(int n) {
  detail::require(n >= 2, "zeta_geometric_sum_form: n must be at least 2");
  using P = BivariatePolynomial;
  using F = BivariateRationalFunction;
  const P one = P::constant(1);
  const P u = P::term(1, Monomial::pt(1, 1));
  const P w = P::term(1, Monomial::pt(n - 2, 1));
  const P first_weight = one - P::term(1, Monomial::pt(2 - n, 0));
  const P inv_p = one - P::term(1, Monomial::pt(-1, 0));

  const F u_over = F::from_polynomial(u) * F::inverse_of_one_minus(1, 1);
  F result = F::from_polynomial(one);
  if (n != 2) result = result + F::from_polynomial(first_weight * w) * F::inverse_of_one_minus(n - 2, 1);

  if (n == 3) {
    result = result + F::from_polynomial(inv_p.pow(2) * u.pow(2)) * F::inverse_of_one_minus(1, 1) *
                          F::inverse_of_one_minus(1, 1);
  } else {
    const F bracket = F::from_polynomial(u) * F::inverse_of_one_minus(n - 2, 1) - u_over;
    result = result + F::from_polynomial(inv_p * first_weight) *
                          F::inverse_of_one_minus(3 - n, 0) * bracket;
  }
  return result + F::from_polynomial(inv_p) * u_over;
}

// Power-series coefficients r_0..r_{n_max} in t after substituting p.
inline std::vector<BigInt> series_coefficients(const BivariateRationalFunction& f,
                                               std::uint64_t p_value, unsigned n_max) {
  detail::require(is_prime(p_value), "series_coefficients: p must be prime");
  const std::size_t len = n_max + 1;
  auto not_unit = [] { return error("series_coefficients: denominator is not a unit power series"); };

  if (f.denominator_monomial().t_exp != 0) throw not_unit();
  const BigInt p_shift = detail::big_pow(p_value, static_cast<unsigned>(f.denominator_monomial().p_exp));

  std::vector<Rational> series(len);
  for (const auto& [texp, c] : f.numerator().specialize_p(p_value)) {
    if (texp < 0) throw not_unit();
    if (static_cast<std::size_t>(texp) < len) series[static_cast<std::size_t>(texp)] = c / p_shift;
  }

  for (const auto& [factor, mult] : f.factors()) {
    if (factor.b <= 0 || factor.a < 0) throw not_unit();
    const BigInt ratio = detail::big_pow(p_value, static_cast<unsigned>(factor.a));
    const auto step = static_cast<std::size_t>(factor.b);
    for (int k = 0; k < mult; ++k) {
      // multiply by 1/(1 - ratio t^step): s_i += ratio s_{i-step}
      for (std::size_t i = step; i < len; ++i) series[i] += ratio * series[i - step];
    }
  }

  std::vector<BigInt> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (denominator(series[i]) != 1) throw error("series_coefficients: non-integral coefficient");
    out[i] = numerator(series[i]);
  }
  return out;
}

// c p^a t^b with f(1/p, 1/t) = c p^a t^b f(p, t), if such a term exists.
inline std::optional<Term> functional_equation_factor(const BivariateRationalFunction& f) {
  return monomial_ratio(f.substitute_inverse(), f);
}

inline bool functional_equation_check(int n) {
  const auto factor = functional_equation_factor(zeta_closed_form(n));
  return factor && factor->coefficient == 1 && factor->monomial == Monomial::pt(n - 1, 0);
}

// Largest a/b over denominator factors (1 - p^a t^b) with b >= 1.
inline Rational abscissa(const BivariateRationalFunction& f) {
  std::optional<Rational> best;
  for (const auto& [factor, mult] : f.factors()) {
    if (factor.b < 1) continue;
    const Rational r(factor.a, factor.b);
    if (!best || r > *best) best = r;
  }
  detail::require(best.has_value(), "abscissa: no pole in t");
  return *best;
}

inline Rational abscissa(int n) { return abscissa(zeta_closed_form(n)); }

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string render_monomial(const Monomial& m) {
  std::string out;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += v;
    if (e != 1) out += '^' + std::to_string(e);
  };
  var('p', m.p_exp);
  var('t', m.t_exp);
  return out;
}

inline std::string render_polynomial(const BivariatePolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : poly.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = render_monomial(m);
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + ' ';
      out += mono;
    }
    first = false;
  }
  return out;
}

inline std::string render_factor(const DenominatorFactor& f, int mult) {
  std::string s = "(1 - " + render_monomial(f.monomial()) + ")";
  if (mult != 1) s += '^' + std::to_string(mult);
  return s;
}

// Pulls factors (1 - p^a t^b) out of a numerator for display.
inline std::string render_factored(const BivariatePolynomial& poly) {
  if (poly.is_zero()) return "0";
  BivariatePolynomial rest = poly;
  std::vector<std::pair<DenominatorFactor, int>> found;
  for (int b = 1; b <= std::max(0, poly.max_t_exp()); ++b) {
    for (int a = 0; a <= std::max(0, poly.max_p_exp()); ++a) {
      int count = 0;
      const BivariatePolynomial d = BivariatePolynomial::one_minus(a, b);
      while (rest.max_t_exp() > 0) {
        auto q = rest.divide_exact(d);
        if (!q) break;
        rest = std::move(*q);
        ++count;
      }
      if (count > 0) found.push_back({{a, b}, count});
    }
  }
  std::string out;
  if (rest.terms().size() == 1) {
    const Term t = rest.leading();
    const std::string mono = render_monomial(t.monomial);
    std::string coef = t.coefficient.str();
    if (!mono.empty() && t.coefficient == 1) coef.clear();
    if (!mono.empty() && t.coefficient == -1) coef = "-";
    out = coef + (coef.empty() || coef == "-" || mono.empty() ? "" : " ") + mono;
    if (found.empty()) return out;
    if (out == "1") out.clear();
    else if (out == "-1") out = "-";
    else if (out != "-") out += ' ';
  } else {
    out = "(" + render_polynomial(rest) + ")";
  }
  for (const auto& [f, mult] : found) out += render_factor(f, mult);
  return out;
}

}  // namespace detail

// Plain text, e.g. "(1 - t)^2 / ((1 - p^2 t)(1 - p t))".
inline std::string to_text(const BivariateRationalFunction& f) {
  std::string num = detail::render_factored(f.numerator());
  if (f.factors().empty() && f.denominator_monomial().is_one()) return num;
  std::string den = detail::render_monomial(f.denominator_monomial());
  std::vector<std::pair<DenominatorFactor, int>> ordered(f.factors().begin(), f.factors().end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.a, x.first.b) > std::pair(y.first.a, y.first.b);
  });
  if (!den.empty() && !ordered.empty()) den += ' ';
  for (const auto& [factor, mult] : ordered) den += detail::render_factor(factor, mult);
  return num + " / (" + den + ")";
}

// {"num": [[coef, pexp, texp], ...], "den_factors": [[a, b], ...],
//  "den_monomial": [pexp, texp]}; coefficients are decimal strings.
inline nlohmann::json to_json(const BivariateRationalFunction& f) {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& [m, c] : f.numerator().terms()) num.push_back({c.str(), m.p_exp, m.t_exp});
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [factor, mult] : f.factors()) {
    for (int i = 0; i < mult; ++i) den.push_back({factor.a, factor.b});
  }
  return {{"num", num},
          {"den_factors", den},
          {"den_monomial", {f.denominator_monomial().p_exp, f.denominator_monomial().t_exp}}};
}

}  // namespace maxclass
