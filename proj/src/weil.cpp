#include "avtk/weil.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>
#include <sstream>

#include "avtk/bounds.hpp"

namespace avtk {

IntPolynomial IntPolynomial::from_coeffs(std::vector<Int> coeffs) {
  require(coeffs.size() >= 2, "polynomial degree must be at least 1");
  require(coeffs.back() == 1, "polynomial must be monic");
  return IntPolynomial{std::move(coeffs)};
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = degree() + 1; i-- > 0;) {
    Int coeff = c[i];
    if (coeff == 0 && !(first && i == 0)) continue;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    if (i == 0 || coeff != 1) os << coeff;
    if (i == 1) os << "T";
    if (i >= 2) os << "T^" << i;
    first = false;
  }
  return os.str();
}

bool weil_admissible(const IntPolynomial& P, const Int& q) {
  require(q >= 2, "weil_admissible requires q >= 2");
  const unsigned deg = P.degree();
  if (deg % 2 != 0) return false;
  const unsigned g = deg / 2;
  for (unsigned i = 0; i < g; ++i) {
    if (P.c[i] != pow_int(q, g - i) * P.c[deg - i]) return false;
  }
  if (deg == 2) return P.c[1] * P.c[1] <= 4 * q;

  // Degree >= 4: locate the roots numerically and compare moduli to sqrt(q).
  std::vector<std::complex<double>> a(deg + 1);
  for (unsigned i = 0; i <= deg; ++i) a[i] = P.c[i].convert_to<double>();
  const auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (unsigned i = deg + 1; i-- > 0;) v = v * x + a[i];
    return v;
  };
  std::vector<std::complex<double>> z(deg);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (auto& zi : z) {
    acc *= seed;
    zi = acc;
  }
  for (unsigned iter = 0; iter < 1000; ++iter) {
    double moved = 0.0;
    for (unsigned i = 0; i < deg; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (unsigned j = 0; j < deg; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const auto delta = eval(z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13) break;
  }
  const double target = std::sqrt(q.convert_to<double>());
  for (const auto& root : z) {
    if (std::abs(std::abs(root) - target) > 1e-6 * target) return false;
  }
  return true;
}

std::vector<Int> power_sums(const IntPolynomial& P, unsigned count) {
  const unsigned n = P.degree();
  const auto a = [&](unsigned i) { return P.c[n - i]; };  // coefficient of T^{n-i}
  std::vector<Int> p(count + 1);
  for (unsigned k = 1; k <= count; ++k) {
    Int acc = 0;
    for (unsigned i = 1; i < k && i <= n; ++i) acc += a(i) * p[k - i];
    if (k <= n) acc += Int(k) * a(k);
    p[k] = -acc;
  }
  return {p.begin() + 1, p.end()};
}

IntPolynomial from_power_sums(const std::vector<Int>& sums, unsigned degree) {
  require(degree >= 1, "degree must be at least 1");
  require(sums.size() >= degree, "need power sums p_1 through p_degree");
  std::vector<Int> e(degree + 1);
  e[0] = 1;
  for (unsigned k = 1; k <= degree; ++k) {
    Int acc = 0;
    for (unsigned i = 1; i <= k; ++i) {
      const Int term = e[k - i] * sums[i - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % Int(k) != 0)
      throw std::logic_error("power sums do not come from an integer polynomial");
    e[k] = acc / Int(k);
  }
  std::vector<Int> c(degree + 1);
  c[degree] = 1;
  for (unsigned k = 1; k <= degree; ++k) c[degree - k] = (k % 2 == 0) ? e[k] : -e[k];
  return IntPolynomial{std::move(c)};
}

IntPolynomial power_charpoly(const IntPolynomial& P, unsigned e) {
  require(e >= 1, "the power must be at least 1");
  const unsigned n = P.degree();
  const auto sums = power_sums(P, n * e);
  std::vector<Int> power_sums_of_e(n);
  for (unsigned k = 1; k <= n; ++k) power_sums_of_e[k - 1] = sums[k * e - 1];
  return from_power_sums(power_sums_of_e, n);
}

namespace {

// Elementary symmetric polynomials e_0..e_m of the given values.
std::vector<Int> elementary_symmetric(const std::vector<Int>& values) {
  std::vector<Int> es(values.size() + 1);
  es[0] = 1;
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t k = r + 1; k >= 1; --k) es[k] += values[r] * es[k - 1];
  }
  return es;
}

}  // namespace

ForcingVerdict a2_forcing_check(const IntPolynomial& P, const Int& q0,
                                unsigned e_lambda, const Int& ell) {
  const unsigned deg = P.degree();
  require(deg % 2 == 0, "the polynomial must have even degree");
  const unsigned g = deg / 2;
  require(e_lambda >= 1, "e_lambda must be at least 1");
  require(is_prime(ell), "ell must be prime");
  require(ell > a2_threshold({.g = g, .q0 = q0, .e_lambda = e_lambda}),
          "ell must exceed the forcing threshold");
  require(weil_admissible(P, q0), "the polynomial is not admissible for the given q0");

  IntPolynomial Q = power_charpoly(P, e_lambda);
  std::vector<Int> target(deg + 1);  // sigma_k of the power roots
  target[0] = 1;
  for (unsigned k = 1; k <= deg; ++k) target[k] = (k % 2 == 0) ? Q.c[deg - k] : -Q.c[deg - k];

  std::vector<Int> q_power(e_lambda + 1);
  q_power[0] = 1;
  for (unsigned j = 1; j <= e_lambda; ++j) q_power[j] = q_power[j - 1] * q0;

  std::vector<std::vector<unsigned>> matches;
  std::vector<unsigned> j(deg, 0);
  while (true) {
    std::vector<Int> values;
    values.reserve(deg);
    for (unsigned r = 0; r < deg; ++r) values.push_back(q_power[j[r]]);
    const auto es = elementary_symmetric(values);
    bool congruent = true;
    for (unsigned k = 1; k <= deg && congruent; ++k) congruent = (es[k] - target[k]) % ell == 0;
    if (congruent) matches.push_back(j);

    int pos = static_cast<int>(deg) - 1;
    while (pos >= 0 && j[pos] == e_lambda) --pos;
    if (pos < 0) break;
    const unsigned next = j[pos] + 1;
    for (unsigned t = static_cast<unsigned>(pos); t < deg; ++t) j[t] = next;
  }

  ForcingVerdict verdict;
  verdict.power_poly = std::move(Q);
  if (matches.empty()) return verdict;
  if (matches.size() > 1) throw std::logic_error("forcing match is not unique above the threshold");
  const auto& found = matches.front();
  std::vector<Int> values;
  for (unsigned r = 0; r < deg; ++r) values.push_back(q_power[found[r]]);
  const auto es = elementary_symmetric(values);
  for (unsigned k = 1; k <= deg; ++k) {
    if (es[k] != target[k])
      throw std::logic_error("congruence match fails exact equality above the threshold");
  }
  if (e_lambda % 2 != 0) throw std::logic_error("forcing matched at an odd power");
  for (unsigned jr : found) {
    if (jr != e_lambda / 2) throw std::logic_error("forced exponent differs from e_lambda / 2");
  }
  verdict.forced = true;
  verdict.exponents = found;
  return verdict;
}

ExponentVector ExponentVector::make(std::uint64_t ell, std::vector<std::uint64_t> i) {
  require(ell >= 3 && is_prime(Int(ell)), "ell must be an odd prime");
  require(!i.empty() && i.size() % 2 == 0, "the exponent list must have positive even length");
  for (auto& x : i) x %= ell - 1;
  ExponentVector v;
  v.ell = ell;
  v.i = std::move(i);
  return v;
}

bool ExponentVector::within_delta_range(std::uint64_t delta) const {
  require(delta >= 1, "delta must be at least 1");
  for (const auto x : i) {
    if (Int(x) * delta >= Int(ell) - 1) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> mq_from_exponents(const ExponentVector& v) {
  require(v.ell >= 3, "ell must be an odd prime");
  const std::uint64_t N = v.ell - 1;
  const auto order_of = [N](std::uint64_t shifted) {
    const std::uint64_t k = shifted % N;
    return k == 0 ? std::uint64_t{1} : N / std::gcd(N, k);
  };
  const auto fold = [](std::uint64_t l, std::uint64_t o) { return l / std::gcd(l, o) * o; };
  std::uint64_t m0 = 1, m = 1;
  for (const auto ir : v.i) m0 = fold(m0, order_of(ir % N + ir % N + N - 1));
  for (std::size_t r = 0; r < v.i.size(); ++r) {
    for (std::size_t s = r; s < v.i.size(); ++s) {
      m = fold(m, order_of(v.i[r] % N + v.i[s] % N + N - 1));
    }
  }
  return {m0, m};
}

Int mazur_forced_trace(unsigned g, const Int& q, const Int& ell) {
  require(g >= 1, "g must be at least 1");
  require(q >= 2, "q must be at least 2");
  require(is_prime(ell), "ell must be prime");
  const Int bound = Int(2) * g * q;
  require(2 * bound < ell, "the window requires 4gq < ell");
  return bound;
}

Certificate mazur_contradiction(unsigned g, const Int& q, unsigned f_odd, const Int& ell) {
  require(f_odd % 2 == 1, "the residue exponent must be odd");
  const auto pp = prime_power_decompose(q);
  require(pp.has_value() && pp->second == f_odd,
          "q must be a prime power with the stated exponent");
  const Int a2 = mazur_forced_trace(g, q, ell);  // also enforces 4gq < ell
  const Int demand = Int(4) * g * g * q;

  Certificate cert;
  std::ostringstream s1;
  s1 << "a_2 is congruent to 2gq = " << a2 << " mod " << ell << " and |a_2| <= " << a2
     << "; the window of width 4gq < " << ell << " pins a_2 = " << a2;
  cert.steps.push_back({s1.str(), true});
  std::ostringstream s2;
  s2 << "a_2 = " << a2 << " attains the bound 2gq, so every squared eigenvalue equals q = " << q;
  cert.steps.push_back({s2.str(), true});
  std::ostringstream s3;
  s3 << "q = " << pp->first << "^" << f_odd
     << " has odd exponent, so sqrt(q) is irrational and the eigenvalue signs balance: a_1 = 0";
  cert.steps.push_back({s3.str(), true});
  std::ostringstream s4;
  s4 << "the trivial-order hypothesis requires ell | 4g^2*q, i.e. " << ell << " | " << demand;
  cert.steps.push_back({s4.str(), demand % ell == 0});
  return cert;
}

WeilConfig WeilConfig::make(Int q, std::array<unsigned, 12> kappa) {
  require(q >= 2 && prime_power_decompose(q).has_value(), "q must be a prime power");
  unsigned total = 0;
  for (const unsigned k : kappa) total += k;
  require(total >= 2 && total % 2 == 0, "the multiplicities must sum to an even 2g >= 2");
  WeilConfig cfg;
  cfg.q = std::move(q);
  cfg.kappa = kappa;
  return cfg;
}

unsigned WeilConfig::two_g() const {
  unsigned total = 0;
  for (const unsigned k : kappa) total += k;
  return total;
}

bool WeilConfig::mu6_supported() const {
  for (unsigned t = 1; t < 12; t += 2) {
    if (kappa[t] != 0) return false;
  }
  return true;
}

bool WeilConfig::galois_stable() const {
  for (unsigned t = 0; t < 12; ++t) {
    for (const unsigned k : {5u, 7u, 11u}) {
      if (kappa[(t * k) % 12] != kappa[t]) return false;
    }
    if (kappa[(t + 6) % 12] != kappa[t]) return false;
  }
  return true;
}

TraceValue trace(const WeilConfig& config, unsigned n) {
  CycloElement angular;
  for (unsigned t = 0; t < 12; ++t) {
    if (config.kappa[t] == 0) continue;
    angular += CycloElement{Rat(config.kappa[t])} * CycloElement::zeta_power(t * (n % 12) % 12);
  }
  TraceValue value;
  value.q = config.q;
  value.n = n;
  value.angular = angular;
  return value;
}

bool TraceValue::is_rational() const {
  if (angular.is_zero()) return true;
  if (n % 2 == 0) return angular.is_rational();
  const auto [s, d] = squarefree_decompose(q);
  if (d == 1) return angular.is_rational();
  if (d == 3) return (angular * CycloElement::sqrt3()).is_rational();
  return false;  // sqrt(q) generates a quadratic extension of the ambient field
}

Rat TraceValue::rational_value() const {
  require(is_rational(), "the trace is irrational");
  if (angular.is_zero()) return Rat(0);
  const Rat half_power{pow_int(q, n / 2)};
  if (n % 2 == 0) return angular.rational_part() * half_power;
  const auto [s, d] = squarefree_decompose(q);
  if (d == 1) return angular.rational_part() * Rat(s) * half_power;
  return (angular * CycloElement::sqrt3()).rational_part() * Rat(s) * half_power;
}

std::string TraceValue::to_string() const {
  std::ostringstream os;
  os << "(" << angular.to_string() << ")";
  if (n / 2 >= 1) os << " * " << q << "^" << n / 2;
  if (n % 2 == 1) os << " * sqrt(" << q << ")";
  return os.str();
}

Certificate sixth_root_analysis(unsigned g, const Int& p, const Int& ell) {
  require(g >= 1 && g <= 16, "g must lie in [1, 16]");
  require(is_prime(p), "p must be prime");
  require(is_prime(ell), "ell must be prime");
  require((ell - 1) % 6 == 0, "ell must be congruent to 1 mod 6");
  const Int p3 = p * p * p;
  const Int a6 = mazur_forced_trace(g, p3, ell);  // also enforces 4g p^3 < ell

  // Exhaust the arrangements of 2g sixth roots of unity; stability must
  // coincide with the balanced pattern, whose members have a_6 = 2gp^3 and
  // vanishing odd traces.
  unsigned total_configs = 0, stable_configs = 0;
  std::array<unsigned, 6> kap{};
  const auto balanced = [&kap] {
    return kap[0] == kap[3] && kap[1] == kap[2] && kap[2] == kap[4] && kap[4] == kap[5];
  };
  const std::function<void(unsigned, unsigned)> scan = [&](unsigned idx, unsigned left) {
    if (idx == 5) {
      kap[5] = left;
      ++total_configs;
      std::array<unsigned, 12> mu12{};
      for (unsigned sixth = 0; sixth < 6; ++sixth) mu12[2 * sixth] = kap[sixth];
      const auto cfg = WeilConfig::make(p, mu12);
      const bool stable = cfg.galois_stable();
      if (stable != balanced()) throw std::logic_error("stability disagrees with the balanced pattern");
      if (stable) {
        ++stable_configs;
        const auto t6 = trace(cfg, 6);
        if (!t6.is_rational() || t6.rational_value() != Rat(a6))
          throw std::logic_error("stable arrangement has the wrong sixth trace");
        if (!trace(cfg, 3).is_zero() || !trace(cfg, 1).is_zero())
          throw std::logic_error("stable arrangement has a nonzero odd trace");
      }
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      kap[idx] = v;
      scan(idx + 1, left - v);
    }
  };
  scan(0, 2 * g);
  if (stable_configs != g / 2 + 1) throw std::logic_error("unexpected count of stable arrangements");

  const Int demand = Int(2) * g * p;
  Certificate cert;
  std::ostringstream s1;
  s1 << "the sixth-power trace window pins a_6 = 2g*p^3 = " << a6 << " (4g*p^3 = " << 2 * a6
     << " < " << ell << ")";
  cert.steps.push_back({s1.str(), true});
  std::ostringstream s2;
  s2 << "every sixth-power eigenvalue equals p^3 = " << p3
     << ", so each eigenvalue is a sixth root of unity times sqrt(" << p << ")";
  cert.steps.push_back({s2.str(), true});
  std::ostringstream s3;
  s3 << "of the " << total_configs << " arrangements of the 2g = " << 2 * g
     << " sixth roots, exactly " << stable_configs
     << " are Galois-stable, all with kappa_0 = kappa_3 and kappa_1 = kappa_2 = kappa_4 = "
        "kappa_5; each has a_6 = "
     << a6 << ", a_3 = 0, a_1 = 0";
  cert.steps.push_back({s3.str(), true});
  std::ostringstream s4;
  s4 << "with a_1 = a_3 = 0 the hypothesis requires ell | 2gp, i.e. " << ell << " | " << demand;
  cert.steps.push_back({s4.str(), demand % ell == 0});
  return cert;
}

Certificate cubic_contradiction(const Int& q, const Int& ell) {
  const auto pp = prime_power_decompose(q);
  require(pp.has_value() && pp->second % 2 == 1, "q must be a prime power with odd exponent");
  require(is_prime(ell), "ell must be prime");
  require(4 * q < ell, "the window requires 4q < ell");

  // (T - z3 q)(T - z3^2 q) = T^2 + qT + q^2, checked exactly.
  const CycloElement z3 = CycloElement::zeta3();
  const CycloElement z3sq = z3 * z3;
  if (!(z3 + z3sq == CycloElement{Rat(-1)}) || !(z3 * z3sq == CycloElement{Rat(1)}))
    throw std::logic_error("cube-root arithmetic failed");

  const unsigned candidate_t[4] = {2, 4, 8, 10};
  unsigned min_degree = 0;
  bool all_degree_4 = true;
  for (const unsigned t : candidate_t) {
    const unsigned deg = min_poly_degree(t, q);
    min_degree = min_degree == 0 ? deg : std::min(min_degree, deg);
    all_degree_4 = all_degree_4 && deg == 4;
  }
  if (!all_degree_4) throw std::logic_error("candidate eigenvalue of unexpected degree");

  Certificate cert;
  std::ostringstream s1;
  s1 << "a_2 is congruent to -q = -" << q << " mod " << ell << " and |a_2| <= 2q = " << 2 * q
     << "; since 4q < " << ell << " the window pins a_2 = -" << q;
  cert.steps.push_back({s1.str(), true});
  std::ostringstream s2;
  s2 << "the squared eigenvalues are the roots of T^2 + " << q << "T + " << q * q
     << ", the two primitive cube roots of unity times " << q;
  cert.steps.push_back({s2.str(), true});
  std::ostringstream s3;
  s3 << "every candidate eigenvalue z^t*sqrt(" << q
     << ") for t in {2, 4, 8, 10} has minimal polynomial of degree 4 over the rationals";
  cert.steps.push_back({s3.str(), true});
  std::ostringstream s4;
  s4 << "the two-dimensional action requires an eigenvalue of degree at most 2 over the rationals";
  cert.steps.push_back({s4.str(), min_degree <= 2});
  return cert;
}

}  // namespace avtk
