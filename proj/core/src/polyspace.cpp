#include "polystrata/polyspace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <regex>

#include "polystrata/errors.hpp"

namespace polystrata {

namespace {

constexpr double kRelativeTolerance = 1e-12;
constexpr int kMaxBracketSteps = 4000;
constexpr int kMaxBisectionSteps = 400;

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Coefficients a_0..a_n of f, returns those of f(X + g).
template <typename T>
std::vector<T> taylor_shift(std::vector<T> a, const T& g) {
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) a[j] += g * a[j + 1];
  }
  return a;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

template <typename T, typename Fmt>
std::string render(const std::vector<T>& c, Fmt fmt) {
  const int n = static_cast<int>(c.size());
  std::string s = n == 0 ? "1" : (n == 1 ? "X" : "X^" + std::to_string(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto& v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    std::string mag = fmt(v < 0 ? T(-v) : v);
    s += v < 0 ? " - " : " + ";
    if (i == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag + "*";
      s += i == 1 ? "X" : "X^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex fraction(R"(([+-]?)(\d+)(?:/(\d+))?)");
  static const std::regex decimal(R"(([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?)");
  const std::string s = trim(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    Rational r(mpz_class(m[2].str(), 10), m[3].matched ? mpz_class(m[3].str(), 10) : mpz_class(1));
    if (m[3].matched && mpz_class(m[3].str(), 10) == 0) throw InvalidInput("zero denominator in '" + s + "'");
    r.canonicalize();
    return m[1] == "-" ? Rational(-r) : r;
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      if (m[4].length() > 6) throw InvalidInput("exponent too large in '" + s + "'");
      exponent += std::stol(m[4].str());
    }
    if (exponent > 4000 || exponent < -4000) throw InvalidInput("exponent too large in '" + s + "'");
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    r.canonicalize();
    return m[1] == "-" ? Rational(-r) : r;
  }
  throw InvalidInput("malformed number '" + s + "'");
}

MonicPolynomial MonicPolynomial::from_exact(std::vector<Rational> c) {
  MonicPolynomial f;
  for (const auto& v : c) f.coefficients.push_back(v.get_d());
  f.exact = std::move(c);
  return f;
}

MonicPolynomial MonicPolynomial::from_double(std::vector<double> c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw InvalidInput("coefficients must be finite");
  }
  MonicPolynomial f;
  f.coefficients = std::move(c);
  return f;
}

MonicPolynomial MonicPolynomial::parse(std::string_view text) {
  std::vector<Rational> c;
  std::string s(text);
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = s.find(',', pos);
    c.push_back(parse_rational(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (c.size() < 2) throw InvalidInput("coefficient list needs degree at least 1");
  if (c.back() != 1) throw InvalidInput("coefficient list must end with the leading coefficient 1");
  c.pop_back();
  return from_exact(std::move(c));
}

std::string MonicPolynomial::to_string() const {
  if (exact) return render(*exact, [](const Rational& v) { return v.get_str(); });
  return render(coefficients, format_double);
}

MonicPolynomial affine_transform(const MonicPolynomial& f, double rho, double gamma) {
  if (!(rho > 0)) throw InvalidInput("scale must be positive");
  std::vector<double> a = f.coefficients;
  a.push_back(1.0);
  a = taylor_shift(std::move(a), gamma);
  const int n = f.degree();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] / std::pow(rho, n - i);
  return MonicPolynomial::from_double(std::move(out));
}

Normalization affine_normalize(const MonicPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidInput("degree must be at least 1");
  Normalization out;
  std::vector<double> centered;
  if (f.exact) {
    const Rational gamma = -(*f.exact)[static_cast<std::size_t>(n - 1)] / n;
    std::vector<Rational> a = *f.exact;
    a.push_back(1);
    a = taylor_shift(std::move(a), gamma);
    if (std::all_of(a.begin(), a.end() - 2, [](const Rational& v) { return v == 0; })) {
      throw InvalidInput("polynomial is a pure power (X + a)^n; its orbit has no normal form");
    }
    for (int i = 0; i < n; ++i) centered.push_back(a[static_cast<std::size_t>(i)].get_d());
    out.gamma = gamma.get_d();
  } else {
    out.gamma = -f.coefficients[static_cast<std::size_t>(n - 1)] / n;
    std::vector<double> a = f.coefficients;
    a.push_back(1.0);
    a = taylor_shift(std::move(a), out.gamma);
    centered.assign(a.begin(), a.end() - 1);
    // Root-scale test for (X + a)^n: every centered coefficient negligible
    // relative to the input's own scale.
    double scale = 0;
    double residue = 0;
    for (int i = 0; i < n; ++i) {
      const double k = n - i;
      scale = std::max(scale, std::pow(std::fabs(f.coefficients[static_cast<std::size_t>(i)]), 1.0 / k));
      if (i <= n - 2) residue = std::max(residue, std::pow(std::fabs(centered[static_cast<std::size_t>(i)]), 1.0 / k));
    }
    if (residue <= 1e-9 * (1.0 + scale)) {
      throw InvalidInput("polynomial is a pure power (X + a)^n; its orbit has no normal form");
    }
  }
  centered[static_cast<std::size_t>(n - 1)] = 0;

  auto h = [&](double rho) {
    double sum = 0;
    for (int i = 0; i <= n - 2; ++i) {
      const double v = centered[static_cast<std::size_t>(i)] / std::pow(rho, n - i);
      sum += v * v;
    }
    return sum;
  };

  double lo = 1;
  double hi = 1;
  int steps = 0;
  if (h(1) > 1) {
    while (h(hi) > 1 && ++steps < kMaxBracketSteps) hi *= 2;
    lo = hi / 2;
  } else {
    while (h(lo) < 1 && ++steps < kMaxBracketSteps) lo /= 2;
    hi = lo * 2;
  }
  if (!(h(lo) >= 1 && h(hi) <= 1)) throw InvariantViolation("could not bracket the normalizing scale");

  double h_lo = h(lo);
  double h_hi = h(hi);
  for (steps = 0; hi - lo > kRelativeTolerance * hi; ++steps) {
    if (steps == kMaxBisectionSteps) throw InvariantViolation("bisection for the normalizing scale did not converge");
    const double mid = lo + (hi - lo) / 2;
    const double h_mid = h(mid);
    if (h_mid > h_lo || h_mid < h_hi) throw InvariantViolation("normalizing function is not decreasing on the bracket");
    if (h_mid > 1) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
      h_hi = h_mid;
    }
  }
  out.rho = lo + (hi - lo) / 2;

  std::vector<double> g(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i <= n - 2; ++i) g[static_cast<std::size_t>(i)] = centered[static_cast<std::size_t>(i)] / std::pow(out.rho, n - i);
  out.g = MonicPolynomial::from_double(std::move(g));
  return out;
}

FactoredPolynomial::FactoredPolynomial(std::vector<Root> roots, std::vector<Quadratic> quadratics)
    : roots_(std::move(roots)), quadratics_(std::move(quadratics)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].multiplicity < 1) throw InvalidInput("root multiplicities must be positive");
    if (i > 0 && !(roots_[i - 1].value < roots_[i].value)) throw InvalidInput("real roots must be strictly increasing");
  }
  for (const auto& q : quadratics_) {
    if (!(q.p * q.p < 4 * q.q)) throw InvalidInput("quadratic factor X^2 + pX + q needs p^2 < 4q");
  }
}

FactoredPolynomial FactoredPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (s.empty()) throw InvalidInput("empty factored polynomial");
  std::map<Rational, int> roots;
  std::vector<Quadratic> quadratics;
  std::size_t pos = 0;
  static const std::regex term(R"(([+-]?)([0-9./eE]*)(x(?:\^([0-9]+))?)?)");
  while (pos < s.size()) {
    if (s[pos] != '(') throw InvalidInput("expected '(' at position " + std::to_string(pos) + " of '" + s + "'");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw InvalidInput("unbalanced parentheses in '" + s + "'");
    const std::string body = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = pos + 1;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      if (end == pos + 1 || end - pos > 4) throw InvalidInput("malformed exponent in '" + s + "'");
      power = std::stoi(s.substr(pos + 1, end - pos - 1));
      if (power < 1) throw InvalidInput("factor exponents must be positive");
      pos = end;
    }

    // Split the body into signed terms.
    std::map<int, Rational> coef;
    std::size_t i = 0;
    while (i < body.size()) {
      std::size_t j = i + 1;
      while (j < body.size() && !((body[j] == '+' || body[j] == '-') && body[j - 1] != 'e')) ++j;
      const std::string t = body.substr(i, j - i);
      std::smatch m;
      if (t.empty() || !std::regex_match(t, m, term) || (m[2].length() == 0 && !m[3].matched)) {
        throw InvalidInput("malformed term '" + t + "' in '(" + body + ")'");
      }
      Rational c = m[2].length() ? parse_rational(m[2].str()) : Rational(1);
      if (m[1] == "-") c = -c;
      const int e = m[3].matched ? (m[4].matched ? std::stoi(m[4].str()) : 1) : 0;
      coef[e] += c;
      i = j;
    }
    std::erase_if(coef, [](const auto& kv) { return kv.second == 0; });
    if (coef.empty()) throw InvalidInput("zero factor in '" + s + "'");
    const int deg = coef.rbegin()->first;
    if (coef.rbegin()->second != 1) throw InvalidInput("factor (" + body + ") is not monic");
    if (deg == 1) {
      roots[-coef[0]] += power;
    } else if (deg == 2) {
      const Quadratic q{coef[1], coef[0]};
      if (!(q.p * q.p < 4 * q.q)) throw InvalidInput("quadratic factor (" + body + ") has real roots; give them as linear factors");
      for (int k = 0; k < power; ++k) quadratics.push_back(q);
    } else {
      throw InvalidInput("factor (" + body + ") must be linear or quadratic");
    }
  }
  std::vector<Root> list;
  for (const auto& [v, mult] : roots) list.push_back({v, mult});
  return FactoredPolynomial(std::move(list), std::move(quadratics));
}

int FactoredPolynomial::degree() const {
  int n = 2 * static_cast<int>(quadratics_.size());
  for (const auto& r : roots_) n += r.multiplicity;
  return n;
}

MonicPolynomial FactoredPolynomial::expand() const {
  std::vector<Rational> a{1};  // ascending, leading included
  auto times = [&](const std::vector<Rational>& f) {
    std::vector<Rational> out(a.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += a[i] * f[j];
    }
    a = std::move(out);
  };
  for (const auto& r : roots_) {
    for (int k = 0; k < r.multiplicity; ++k) times({-r.value, 1});
  }
  for (const auto& q : quadratics_) times({q.q, q.p, 1});
  a.pop_back();
  return MonicPolynomial::from_exact(std::move(a));
}

std::string FactoredPolynomial::to_string() const {
  std::string s;
  auto add = [&](const std::string& f) { s += (s.empty() ? "" : " ") + f; };
  for (const auto& r : roots_) {
    std::string f = r.value == 0 ? "(x)" : (r.value > 0 ? "(x-" + r.value.get_str() + ")" : "(x+" + Rational(-r.value).get_str() + ")");
    if (r.multiplicity > 1) f += "^" + std::to_string(r.multiplicity);
    add(f);
  }
  for (const auto& q : quadratics_) {
    std::string f = "(x^2";
    if (q.p != 0) f += (q.p > 0 ? "+" : "-") + Rational(abs(q.p)).get_str() + "x";
    if (q.q != 0) f += (q.q > 0 ? "+" : "-") + Rational(abs(q.q)).get_str();
    add(f + ")");
  }
  return s.empty() ? "1" : s;
}

StratumCell cell_of(const FactoredPolynomial& f) {
  std::vector<int> parts;
  for (const auto& r : f.roots()) parts.push_back(r.multiplicity);
  return StratumCell{Composition(std::move(parts)), f.degree()};
}

FactoredPolynomial stabilize(const FactoredPolynomial& f, int m) {
  const int n = f.degree();
  if (m < n || (m - n) % 2 != 0) throw InvalidInput("target degree must be at least n and of the same parity");
  auto quadratics = f.quadratics();
  for (int k = 0; k < (m - n) / 2; ++k) quadratics.push_back({0, 1});
  return FactoredPolynomial(f.roots(), std::move(quadratics));
}

}  // namespace polystrata
