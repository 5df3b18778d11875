#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avtk/integers.hpp"

namespace avtk {

// A set of residues modulo m >= 1, kept in canonical form: the smallest modulus
// representing the same set of integers. The empty set is representable and
// canonicalizes to modulus 1 with no residues.
class CongruenceClass {
 public:
  CongruenceClass() = default;  // empty set
  CongruenceClass(std::uint64_t modulus, std::vector<std::uint64_t> residues);

  static CongruenceClass universal();  // all integers: {0 mod 1}

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }
  bool is_empty() const { return residues_.empty(); }
  bool contains(const Int& x) const;
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;

 private:
  std::uint64_t modulus_ = 1;
  std::vector<std::uint64_t> residues_;  // sorted, unique, < modulus_
  void canonicalize();
};

// Integers satisfying both classes (CRT merge); empty when incompatible.
CongruenceClass crt_intersect(const CongruenceClass& a, const CongruenceClass& b);

// Least prime p != ell whose residue is an m-th power in F_ell^x. Replaces m by
// gcd(m, ell-1) first, which leaves the power-residue subgroup unchanged.
std::uint64_t smallest_prime_mth_residue(std::uint64_t m, std::uint64_t ell);

}  // namespace avtk
