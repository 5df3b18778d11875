#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avtk/congruences.hpp"
#include "avtk/integers.hpp"

namespace avtk {

enum class BaseField { rational, general };

struct FieldContext {
  BaseField base = BaseField::rational;
  unsigned n_K = 1;
  bool semistable = false;
  std::optional<Int> delta;  // index of the cyclotomic-character image; divides n_K

  static FieldContext make_rational(bool semistable = false);
  static FieldContext make_general(unsigned n_K, bool semistable = false);
  void validate() const;
};

// A solution {n_d} of 2g = sum n_d * phi(d): the inertia decomposition pattern.
struct Profile {
  unsigned g = 0;
  std::map<unsigned, unsigned> counts;  // d -> n_d, entries with n_d >= 1 only

  unsigned e_prime() const;                   // lcm of the d with n_d > 0
  std::map<unsigned, unsigned> g_d() const;   // d -> n_d * phi(d) / 2
  unsigned max_g_d() const;
  std::vector<unsigned> expanded_ds() const;  // each d repeated n_d times, ascending
  std::string phi_sum() const;                // "2*phi(3) + phi(8)"

  friend bool operator==(const Profile&, const Profile&) = default;
};

// Canonical order: by e_prime, then lexicographically by the expanded d-list.
bool canonical_less(const Profile& a, const Profile& b);
// Display order used by the g = 4 table: plain lexicographic d-list.
bool display_less(const Profile& a, const Profile& b);

// All profiles for genus g (guard g <= 12), parity rule 2 | n_d for d <= 2
// enforced, sorted canonically.
std::vector<Profile> enumerate_profiles(unsigned g);

// Candidate values of the stable ramification index e. Over the rational base
// the index equals e_prime and must satisfy 4 | e and e | M'(2g); over a
// general base e ranges over multiples of e_prime with e/e_prime | n_K,
// 4 | e and e | M'(2g)*n_K. Semistable mode forces the geometric part to 1.
std::vector<unsigned> admissible_e(const Profile& profile, const FieldContext& ctx);

// Even divisors m of e/2; over the rational base only m > 6 survive.
std::vector<unsigned> mq_candidates(unsigned e, const FieldContext& ctx);

// A d with n_d = 1 and d | m forces order 1 of ell mod d, killing the profile.
std::optional<unsigned> c8_obstruction(const Profile& profile, unsigned m);
bool prune_c8(const Profile& profile, unsigned m, const FieldContext& ctx);

// Class of primes ell with m | ell - 1 and v_2(ell - 1) = v_2(m) exactly.
CongruenceClass derive_congruence(unsigned m);

struct SurvivorReport {
  Profile profile;
  unsigned e = 0;
  unsigned m_q = 0;
  CongruenceClass constraint;
};

struct EliminationRecord {
  Profile profile;
  std::optional<unsigned> e;
  std::optional<unsigned> m;
  std::string stage;  // "admissible-e" | "m-candidates" | "power-residue"
  std::string detail;
};

struct AnalysisResult {
  unsigned g = 0;
  FieldContext ctx;
  std::vector<Profile> profiles;
  std::vector<SurvivorReport> survivors;
  std::vector<EliminationRecord> eliminated;
};

// Full sieve pipeline: enumerate -> admissible_e -> mq_candidates ->
// power-residue prune (rational base) -> congruence derivation.
AnalysisResult analyze(unsigned g, const FieldContext& ctx);

struct ConditionState {
  unsigned d = 1;
  std::uint64_t ell = 2;
  unsigned n_d = 1;
  unsigned f_lambda_over_ell = 1;
  unsigned f = 1;         // order of ell mod d
  unsigned f_lambda = 1;  // f / gcd(f, f_lambda_over_ell)
};

ConditionState make_condition_state(unsigned d, std::uint64_t ell, unsigned n_d,
                                    unsigned f_lambda_over_ell);

struct ConditionFlags {
  bool c2 = false, c6 = false, c7 = false, c8 = false;
};

ConditionFlags evaluate_conditions(const ConditionState& s);

// Every prime divisor p of e_prime satisfies p <= 2 * max g_d + 1.
bool prime_factor_bound_check(const Profile& profile);

// True iff the semistable sieve runs empty for large ell over any base of
// degree n_K, equivalently 4 does not divide n_K.
bool semistable_uniform_check(unsigned n_K);

}  // namespace avtk
