#include "avtk/profiles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "avtk/group_orders.hpp"

namespace avtk {

FieldContext FieldContext::make_rational(bool semistable) {
  FieldContext ctx;
  ctx.base = BaseField::rational;
  ctx.n_K = 1;
  ctx.semistable = semistable;
  return ctx;
}

FieldContext FieldContext::make_general(unsigned n_K, bool semistable) {
  FieldContext ctx;
  ctx.base = BaseField::general;
  ctx.n_K = n_K;
  ctx.semistable = semistable;
  return ctx;
}

void FieldContext::validate() const {
  require(n_K >= 1, "FieldContext requires n_K >= 1");
  require(base != BaseField::rational || n_K == 1, "rational base requires n_K = 1");
  if (delta) require(*delta >= 1 && Int(n_K) % *delta == 0, "delta must divide n_K");
}

unsigned Profile::e_prime() const {
  unsigned l = 1;
  for (const auto& [d, n] : counts) l = std::lcm(l, d);
  return l;
}

std::map<unsigned, unsigned> Profile::g_d() const {
  std::map<unsigned, unsigned> result;
  for (const auto& [d, n] : counts) {
    const unsigned weight = n * static_cast<unsigned>(euler_phi(d));
    result[d] = weight / 2;
  }
  return result;
}

unsigned Profile::max_g_d() const {
  unsigned best = 0;
  for (const auto& [d, gd] : g_d()) best = std::max(best, gd);
  return best;
}

std::vector<unsigned> Profile::expanded_ds() const {
  std::vector<unsigned> ds;
  for (const auto& [d, n] : counts) ds.insert(ds.end(), n, d);
  return ds;
}

std::string Profile::phi_sum() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, n] : counts) {
    if (!first) out << " + ";
    first = false;
    if (n > 1) out << n << "*";
    out << "phi(" << d << ")";
  }
  return out.str();
}

bool canonical_less(const Profile& a, const Profile& b) {
  if (a.e_prime() != b.e_prime()) return a.e_prime() < b.e_prime();
  return a.expanded_ds() < b.expanded_ds();
}

bool display_less(const Profile& a, const Profile& b) { return a.expanded_ds() < b.expanded_ds(); }

namespace {

void enumerate_rec(unsigned g, const std::vector<unsigned>& ds, std::size_t idx, unsigned budget,
                   std::map<unsigned, unsigned>& current, std::vector<Profile>& out) {
  if (budget == 0) {
    out.push_back(Profile{g, current});
    return;
  }
  if (idx == ds.size()) return;
  const unsigned d = ds[idx];
  const unsigned phi = static_cast<unsigned>(euler_phi(d));
  const unsigned step = d <= 2 ? 2 : 1;  // parity rule: 2 | n_d when phi(d) = 1
  enumerate_rec(g, ds, idx + 1, budget, current, out);
  for (unsigned n = step; n * phi <= budget; n += step) {
    current[d] = n;
    enumerate_rec(g, ds, idx + 1, budget - n * phi, current, out);
  }
  current.erase(d);
}

}  // namespace

std::vector<Profile> enumerate_profiles(unsigned g) {
  require(g >= 1 && g <= 12, "enumerate_profiles requires 1 <= g <= 12");
  std::vector<unsigned> ds;
  // phi(d) >= sqrt(d/2), so phi(d) <= 2g forces d <= 8g^2.
  for (unsigned d = 1; d <= 8 * g * g; ++d) {
    if (euler_phi(d) <= 2 * g) ds.push_back(d);
  }
  std::map<unsigned, unsigned> current;
  std::vector<Profile> out;
  enumerate_rec(g, ds, 0, 2 * g, current, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<unsigned> admissible_e(const Profile& profile, const FieldContext& ctx) {
  ctx.validate();
  const unsigned ep = profile.e_prime();
  const Int m2g = m_prime(2 * profile.g).value;
  std::vector<unsigned> result;
  if (ctx.semistable) {
    if (ep != 1) return result;
    for (unsigned e = 4; e <= ctx.n_K; e += 4) {
      if (ctx.n_K % e == 0) result.push_back(e);
    }
    return result;
  }
  if (ctx.base == BaseField::rational) {
    if (ep % 4 == 0 && m2g % ep == 0) result.push_back(ep);
    return result;
  }
  for (unsigned k = 1; k <= ctx.n_K; ++k) {
    if (ctx.n_K % k != 0) continue;
    const unsigned e = ep * k;
    if (e % 4 != 0) continue;
    if (m2g * ctx.n_K % e != 0) continue;
    result.push_back(e);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<unsigned> mq_candidates(unsigned e, const FieldContext& ctx) {
  ctx.validate();
  require(e % 4 == 0, "mq_candidates requires 4 | e");
  const unsigned half = e / 2;
  std::vector<unsigned> result;
  for (unsigned m = 2; m <= half; m += 2) {
    if (half % m != 0) continue;
    if (ctx.base == BaseField::rational && m <= 6) continue;
    result.push_back(m);
  }
  return result;
}

std::optional<unsigned> c8_obstruction(const Profile& profile, unsigned m) {
  for (const auto& [d, n] : profile.counts) {
    if (n == 1 && m % d == 0) return d;
  }
  return std::nullopt;
}

bool prune_c8(const Profile& profile, unsigned m, const FieldContext& ctx) {
  ctx.validate();
  require(ctx.base == BaseField::rational, "prune_c8 applies over the rational base only");
  return c8_obstruction(profile, m).has_value();
}

CongruenceClass derive_congruence(unsigned m) {
  require(m >= 2 && m % 2 == 0, "derive_congruence requires m even");
  const unsigned v = v_p(Int(m), 2);
  const std::uint64_t modulus = std::lcm<std::uint64_t>(m, 1ULL << (v + 1));
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < modulus; ++r) {
    if ((r + modulus - 1) % m != 0) continue;  // need m | (ell - 1)
    const std::uint64_t t = (r + modulus - 1) % modulus;
    if (t == 0) continue;  // ell = 1 (mod modulus) forces v_2(ell-1) > v_2(m)
    if (v_p(Int(t), 2) == v) residues.push_back(r);
  }
  return CongruenceClass(modulus, std::move(residues));
}

AnalysisResult analyze(unsigned g, const FieldContext& ctx) {
  ctx.validate();
  AnalysisResult result;
  result.g = g;
  result.ctx = ctx;
  result.profiles = enumerate_profiles(g);
  const Int m2g = m_prime(2 * g).value;
  for (const Profile& profile : result.profiles) {
    const auto es = admissible_e(profile, ctx);
    if (es.empty()) {
      std::ostringstream detail;
      const unsigned ep = profile.e_prime();
      if (ctx.semistable && ep != 1) {
        detail << "semistable mode forces e' = 1 but e' = " << ep;
      } else if (ctx.semistable) {
        detail << "no multiple of 4 divides n_K = " << ctx.n_K;
      } else if (ep % 4 != 0 && ctx.base == BaseField::rational) {
        detail << "4 does not divide e' = " << ep;
      } else if (ctx.base == BaseField::rational) {
        detail << "e' = " << ep << " does not divide M'(" << 2 * g << ") = " << m2g;
      } else {
        detail << "no admissible index over degree " << ctx.n_K;
      }
      result.eliminated.push_back({profile, std::nullopt, std::nullopt, "admissible-e", detail.str()});
      continue;
    }
    for (unsigned e : es) {
      const auto ms = mq_candidates(e, ctx);
      if (ms.empty()) {
        std::ostringstream detail;
        detail << "no even divisor of e/2 = " << e / 2
               << (ctx.base == BaseField::rational ? " exceeds 6" : "");
        result.eliminated.push_back({profile, e, std::nullopt, "m-candidates", detail.str()});
        continue;
      }
      for (unsigned m : ms) {
        if (ctx.base == BaseField::rational) {
          if (auto d = c8_obstruction(profile, m)) {
            std::ostringstream detail;
            detail << "d = " << *d << " has n_d = 1 and divides m = " << m
                   << ", forcing order 1 of ell mod d";
            result.eliminated.push_back({profile, e, m, "power-residue", detail.str()});
            continue;
          }
        }
        result.survivors.push_back({profile, e, m, derive_congruence(m)});
      }
    }
  }
  return result;
}

ConditionState make_condition_state(unsigned d, std::uint64_t ell, unsigned n_d,
                                    unsigned f_lambda_over_ell) {
  require(d >= 1, "condition state requires d >= 1");
  require(is_prime(ell), "condition state requires ell prime");
  require(d % ell != 0, "condition state requires ell coprime to d");
  require(n_d >= 1 && f_lambda_over_ell >= 1, "condition state requires n_d, f_{lambda/ell} >= 1");
  ConditionState s;
  s.d = d;
  s.ell = ell;
  s.n_d = n_d;
  s.f_lambda_over_ell = f_lambda_over_ell;
  s.f = static_cast<unsigned>(mult_order(ell % d, d));
  s.f_lambda = s.f / std::gcd(s.f, f_lambda_over_ell);
  return s;
}

ConditionFlags evaluate_conditions(const ConditionState& s) {
  require(s.d % s.ell != 0, "evaluate_conditions requires ell coprime to d");
  ConditionFlags flags;
  if (s.d <= 2) {
    flags.c2 = true;
  } else {
    std::uint64_t x = s.ell % s.d;
    const std::uint64_t minus_one = s.d - 1;
    std::uint64_t y = x;
    for (unsigned i = 0; i < s.f; ++i) {
      if (y == minus_one) {
        flags.c2 = true;
        break;
      }
      y = y * x % s.d;
    }
  }
  flags.c6 = (s.f % 2 == 0) || s.d <= 2;
  flags.c7 = (static_cast<std::uint64_t>(s.n_d) * s.f) % 2 == 0;
  flags.c8 = static_cast<std::uint64_t>(s.n_d) * s.f_lambda * s.f_lambda_over_ell != 1;
  return flags;
}

bool prime_factor_bound_check(const Profile& profile) {
  const unsigned bound = 2 * profile.max_g_d() + 1;
  Int ep = profile.e_prime();
  for (const auto& [p, e] : factorize(ep)) {
    if (p > bound) return false;
  }
  return true;
}

bool semistable_uniform_check(unsigned n_K) {
  require(n_K >= 1, "semistable_uniform_check requires n_K >= 1");
  return n_K % 4 != 0;
}

}  // namespace avtk
