#include "avtk/congruences.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace avtk {

CongruenceClass::CongruenceClass(std::uint64_t modulus, std::vector<std::uint64_t> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  require(modulus_ >= 1, "CongruenceClass requires modulus >= 1");
  for (auto& r : residues_) r %= modulus_;
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  canonicalize();
}

CongruenceClass CongruenceClass::universal() { return CongruenceClass(1, {0}); }

void CongruenceClass::canonicalize() {
  if (residues_.empty()) {
    modulus_ = 1;
    return;
  }
  // Smallest divisor m of modulus_ such that the set is a union of m-cosets.
  for (std::uint64_t m = 1; m <= modulus_ / 2; ++m) {
    if (modulus_ % m != 0) continue;
    bool closed = true;
    for (std::uint64_t r : residues_) {
      if (!std::binary_search(residues_.begin(), residues_.end(), (r + m) % modulus_)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    std::vector<std::uint64_t> reduced;
    for (std::uint64_t r : residues_) reduced.push_back(r % m);
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    modulus_ = m;
    residues_ = std::move(reduced);
    return;
  }
}

bool CongruenceClass::contains(const Int& x) const {
  if (residues_.empty()) return false;
  const std::uint64_t r = ((x % modulus_ + modulus_) % modulus_).convert_to<std::uint64_t>();
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

std::string CongruenceClass::to_string(const std::string& var) const {
  std::ostringstream out;
  if (residues_.empty()) {
    out << var << " in (empty set)";
  } else if (modulus_ == 1) {
    out << var << " unconstrained";
  } else if (residues_.size() == 1) {
    out << var << " = " << residues_[0] << " (mod " << modulus_ << ")";
  } else {
    out << var << " in {";
    for (std::size_t i = 0; i < residues_.size(); ++i) {
      if (i > 0) out << ", ";
      out << residues_[i];
    }
    out << "} (mod " << modulus_ << ")";
  }
  return out.str();
}

CongruenceClass crt_intersect(const CongruenceClass& a, const CongruenceClass& b) {
  if (a.is_empty() || b.is_empty()) return CongruenceClass();
  const std::uint64_t ma = a.modulus(), mb = b.modulus();
  const std::uint64_t g = std::gcd(ma, mb);
  require(ma / g <= 100'000'000ULL / mb, "crt_intersect limited to lcm <= 1e8");
  const std::uint64_t l = ma / g * mb;
  std::vector<std::uint64_t> merged;
  for (std::uint64_t ra : a.residues()) {
    for (std::uint64_t x = ra; x < l; x += ma) {
      if (b.contains(Int(x))) merged.push_back(x);
    }
  }
  return CongruenceClass(l, std::move(merged));
}

std::uint64_t smallest_prime_mth_residue(std::uint64_t m, std::uint64_t ell) {
  require(m >= 1, "smallest_prime_mth_residue requires m >= 1");
  require(ell >= 3 && is_prime(ell), "smallest_prime_mth_residue requires an odd prime ell");
  const std::uint64_t m_eff = std::gcd(m, ell - 1);
  const std::uint64_t exponent = (ell - 1) / m_eff;
  for (std::uint64_t p = 2;; p = next_prime_after(p)) {
    if (p == ell) continue;
    if (mod_pow(p % ell, exponent, ell) == 1) return p;
    require(p < 10'000'000ULL, "smallest_prime_mth_residue search exhausted");
  }
}

}  // namespace avtk
