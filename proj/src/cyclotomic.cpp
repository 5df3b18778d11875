#include "avtk/cyclotomic.hpp"

#include <sstream>
#include <vector>

namespace avtk {

namespace {

// Coordinates of z^t in the basis 1, z, z^2, z^3.
constexpr int kZetaTable[12][4] = {
    {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
    {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
    {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
};

}  // namespace

CycloElement::CycloElement(Rat rational) { coords_[0] = std::move(rational); }

CycloElement::CycloElement(std::array<Rat, 4> coords) : coords_(std::move(coords)) {}

CycloElement CycloElement::zeta_power(unsigned t) {
  const int* row = kZetaTable[t % 12];
  return CycloElement({Rat(row[0]), Rat(row[1]), Rat(row[2]), Rat(row[3])});
}

CycloElement CycloElement::zeta3() { return zeta_power(4); }

CycloElement CycloElement::sqrt3() {
  return CycloElement({Rat(0), Rat(2), Rat(0), Rat(-1)});
}

bool CycloElement::is_zero() const {
  return coords_[0] == 0 && coords_[1] == 0 && coords_[2] == 0 && coords_[3] == 0;
}

bool CycloElement::is_rational() const {
  return coords_[1] == 0 && coords_[2] == 0 && coords_[3] == 0;
}

Rat CycloElement::rational_part() const {
  require(is_rational(), "rational_part requires a rational element");
  return coords_[0];
}

CycloElement CycloElement::galois(unsigned k) const {
  require(k == 1 || k == 5 || k == 7 || k == 11, "galois requires k in {1, 5, 7, 11}");
  CycloElement out;
  for (unsigned i = 0; i < 4; ++i) {
    if (coords_[i] == 0) continue;
    const int* row = kZetaTable[(i * k) % 12];
    for (unsigned j = 0; j < 4; ++j) out.coords_[j] += coords_[i] * row[j];
  }
  return out;
}

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  for (unsigned i = 0; i < 4; ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  for (unsigned i = 0; i < 4; ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (unsigned i = 0; i < 4; ++i) {
    if (coords_[i] == 0) continue;
    for (unsigned j = 0; j < 4; ++j) {
      if (o.coords_[j] == 0) continue;
      const Rat term = coords_[i] * o.coords_[j];
      const int* row = kZetaTable[(i + j) % 12];
      for (unsigned k = 0; k < 4; ++k) out[k] += term * row[k];
    }
  }
  coords_ = out;
  return *this;
}

std::string CycloElement::to_string() const {
  static const char* kNames[4] = {"", "z", "z^2", "z^3"};
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < 4; ++i) {
    if (coords_[i] == 0) continue;
    Rat c = coords_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0 || c != 1) os << c.str();
    if (i > 0) os << kNames[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Element of Q(z)[y]/(y^2 - d): a pair of CycloElements (u + v*y).  For
// squarefree d outside {1, 3} the polynomial y^2 - d stays irreducible over
// Q(z), whose quadratic subfields are Q(i), Q(sqrt(3)), Q(sqrt(-3)).
struct ExtElement {
  CycloElement u, v;
};

ExtElement mul(const ExtElement& a, const ExtElement& b, const Rat& d) {
  const CycloElement dd{d};
  return {a.u * b.u + dd * (a.v * b.v), a.u * b.v + a.v * b.u};
}

// First k such that powers alpha^0..alpha^k are linearly dependent over Q,
// for alpha given as a list of exact power vectors; rows are echelonized by
// exact Gaussian elimination as they arrive.
unsigned first_dependence(std::vector<std::vector<Rat>> powers) {
  const std::size_t dim = powers.front().size();
  // basis_by_pivot[j] holds a row whose first nonzero entry is column j.
  std::vector<std::vector<Rat>> basis_by_pivot(dim);
  for (unsigned k = 0; k < powers.size(); ++k) {
    auto row = std::move(powers[k]);
    std::size_t j = 0;
    while (j < dim) {
      if (row[j] == 0) {
        ++j;
        continue;
      }
      const auto& pivot_row = basis_by_pivot[j];
      if (pivot_row.empty()) break;
      const Rat factor = row[j] / pivot_row[j];
      for (std::size_t c = j; c < dim; ++c) row[c] -= factor * pivot_row[c];
    }
    if (j == dim) return k;  // alpha^k fell into the span of lower powers
    basis_by_pivot[j] = std::move(row);
  }
  throw std::logic_error("power sequence exceeded the ambient dimension");
}

}  // namespace

unsigned min_poly_degree(unsigned t, const Int& q) {
  require(q >= 1, "min_poly_degree requires q >= 1");
  const auto [s, d] = squarefree_decompose(q);
  const Rat s_rat{s};
  if (d == 1 || d == 3) {
    // sqrt(q) = s or s*sqrt(3) lies in Q(z); work in the 4-dimensional field.
    CycloElement alpha = CycloElement{s_rat} * CycloElement::zeta_power(t);
    if (d == 3) alpha *= CycloElement::sqrt3();
    std::vector<std::vector<Rat>> powers;
    CycloElement pw{Rat(1)};
    for (unsigned k = 0; k <= 4; ++k) {
      powers.push_back({pw.coords()[0], pw.coords()[1], pw.coords()[2], pw.coords()[3]});
      pw *= alpha;
    }
    return first_dependence(std::move(powers));
  }
  const Rat d_rat{d};
  const ExtElement alpha{CycloElement{}, CycloElement{s_rat} * CycloElement::zeta_power(t)};
  std::vector<std::vector<Rat>> powers;
  ExtElement pw{CycloElement{Rat(1)}, CycloElement{}};
  for (unsigned k = 0; k <= 8; ++k) {
    std::vector<Rat> row;
    for (const Rat& c : pw.u.coords()) row.push_back(c);
    for (const Rat& c : pw.v.coords()) row.push_back(c);
    powers.push_back(std::move(row));
    pw = mul(pw, alpha, d_rat);
  }
  return first_dependence(std::move(powers));
}

}  // namespace avtk
