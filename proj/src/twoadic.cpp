#include "mixedforms/twoadic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mixedforms/arith.hpp"

namespace mixedforms {

namespace {

// Three-valued logic for the clause lists; Unknown stands for an
// Indeterminate spinor norm.
enum class K3 { False, True, Unknown };

K3 k_and(K3 x, K3 y) {
  if (x == K3::False || y == K3::False) return K3::False;
  if (x == K3::True && y == K3::True) return K3::True;
  return K3::Unknown;
}

K3 k_or(K3 x, K3 y) {
  if (x == K3::True || y == K3::True) return K3::True;
  if (x == K3::False && y == K3::False) return K3::False;
  return K3::Unknown;
}

K3 k_not(K3 x) {
  if (x == K3::Unknown) return x;
  return x == K3::True ? K3::False : K3::True;
}

K3 k_of(bool b) { return b ? K3::True : K3::False; }

K3 norm_inside(const SpinorNorm& theta, SquareClassSet n) {
  switch (theta.kind) {
    case SpinorKind::FullGroup:
      return k_of(n == SquareClassSet::everything());
    case SpinorKind::Set:
      return k_of(theta.set.subset_of(n));
    case SpinorKind::Indeterminate:
      return K3::Unknown;
  }
  return K3::Unknown;
}

unsigned unit_mod8(std::int64_t u) {
  const auto r = static_cast<unsigned>(mod_reduce(u, 8));
  if (r % 2 == 0) throw std::invalid_argument("2-adic unit must be odd");
  return r;
}

}  // namespace

SquareClass square_class(std::int64_t value) {
  if (value == 0) throw std::invalid_argument("square_class: zero has no square class");
  const std::uint64_t mag = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
  const unsigned val = v2(mag);
  std::uint64_t unit = (mag >> val) % 8;
  if (value < 0) unit = 8 - unit;
  return {val % 2, static_cast<unsigned>(unit)};
}

SquareClass class_mul(SquareClass s, SquareClass t) {
  return {(s.val_parity + t.val_parity) % 2, (s.unit * t.unit) % 8};
}

SquareClassSet SquareClassSet::of(std::initializer_list<std::int64_t> values) {
  SquareClassSet out;
  for (std::int64_t v : values) out.insert(square_class(v));
  return out;
}

unsigned SquareClassSet::size() const { return static_cast<unsigned>(std::popcount(mask_)); }

bool SquareClassSet::is_subgroup() const {
  if (!contains(SquareClass{})) return false;
  for (SquareClass x : members()) {
    for (SquareClass y : members()) {
      if (!contains(class_mul(x, y))) return false;
    }
  }
  return true;
}

std::vector<SquareClass> SquareClassSet::members() const {
  std::vector<SquareClass> out;
  for (unsigned i = 0; i < 8; ++i) {
    if ((mask_ >> i) & 1) out.push_back(SquareClass::from_index(i));
  }
  return out;
}

std::string SquareClassSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (SquareClass s : members()) {
    if (!first) out += ',';
    out += std::to_string(s.representative());
    first = false;
  }
  return out + "}";
}

SquareClassSet generated_subgroup(SquareClassSet s) {
  SquareClassSet g;
  g.insert(SquareClass{});
  g = g | s;
  for (;;) {
    SquareClassSet next = g;
    for (SquareClass x : g.members()) {
      for (SquareClass y : g.members()) next.insert(class_mul(x, y));
    }
    if (next == g) return g;
    g = next;
  }
}

SquareClassSet hilbert_kernel(std::int64_t d) {
  SquareClassSet out;
  for (unsigned i = 0; i < 8; ++i) {
    const SquareClass g = SquareClass::from_index(i);
    if (hilbert2(g.representative(), d) == 1) out.insert(g);
  }
  return out;
}

ImaginaryField imaginary_field(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("imaginary_field: n must be positive");
  const std::uint64_t d = squarefree_part(n);
  if (d == 1) return {FieldTag::Gaussian, 1};
  if (d == 2) return {FieldTag::RootMinusTwo, 2};
  return {FieldTag::Other, d};
}

SquareClassSet norm_group(const ImaginaryField& field) {
  switch (field.tag) {
    case FieldTag::Gaussian:
      return SquareClassSet::of({1, 5, 2, 10});
    case FieldTag::RootMinusTwo:
      return SquareClassSet::of({1, 3, 2, 6});
    case FieldTag::Other:
      break;
  }
  throw std::invalid_argument("norm_group: only Q(i) and Q(sqrt(-2)) are supported");
}

SquareClassSet binary_spinor_norm(std::int64_t alpha, unsigned r) {
  const unsigned u = unit_mod8(alpha);
  if (r == 0) throw std::invalid_argument("binary_spinor_norm: r must be at least 1");
  const auto a = static_cast<std::int64_t>(u);
  if (r == 1 || r == 3) return hilbert_kernel(-2 * a);
  if (r == 2) {
    SquareClassSet units;
    for (std::int64_t g : {1, 3, 5, 7}) {
      if (hilbert2(g, -a) == 1) units.insert(square_class(g));
    }
    return units;
  }
  if (r == 4) return SquareClassSet::of({1, a, 5, 5 * a});
  return SquareClassSet::of({1, a});
}

Lattice2 Lattice2::make(std::array<std::int64_t, 3> units, std::array<int, 3> exponents) {
  Lattice2 lat;
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return exponents[i] < exponents[j]; });
  lat.shift = exponents[order[0]];
  for (int k = 0; k < 3; ++k) {
    lat.permutation[k] = order[k];
    lat.units[k] = unit_mod8(units[order[k]]);
    lat.exponents[k] = static_cast<unsigned>(exponents[order[k]] - lat.shift);
  }
  return lat;
}

SpinorNorm ternary_spinor_norm(const Lattice2& lattice) {
  const int r = static_cast<int>(lattice.r());
  const int s = static_cast<int>(lattice.s());
  auto meets = [](std::initializer_list<int> xs, std::initializer_list<int> ys) {
    for (int x : xs) {
      if (std::find(ys.begin(), ys.end(), x) != ys.end()) return true;
    }
    return false;
  };
  if (meets({r, s - r}, {1, 3}) && meets({r, s, s - r}, {2, 4})) {
    return {SpinorKind::FullGroup, SquareClassSet::everything()};
  }
  const bool reducible = (0 < r && r < s) || (s >= 5 && (r == 0 || r == s));
  if (!reducible) return {SpinorKind::Indeterminate, {}};

  SquareClassSet acc;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const unsigned diff = lattice.exponents[j] - lattice.exponents[i];
      const auto ratio = static_cast<std::int64_t>((lattice.units[i] * lattice.units[j]) % 8);
      if (diff > 0) {
        acc = acc | binary_spinor_norm(ratio, diff);
      } else if (ratio == 1) {
        // <1,1> is a scaled sum of two squares: its spinor norms are the
        // norms from Q(i).
        acc = acc | norm_group({FieldTag::Gaussian, 1});
      } else {
        return {SpinorKind::Indeterminate, {}};
      }
    }
  }
  return {SpinorKind::Set, generated_subgroup(acc)};
}

SpinorCheck schulze_pillot_check(const Lattice2& lattice, unsigned t_valuation, const ImaginaryField& field) {
  const SquareClassSet n = norm_group(field);
  const int r = static_cast<int>(lattice.r());
  const int s = static_cast<int>(lattice.s());
  const int vt = static_cast<int>(t_valuation);
  const auto c1 = static_cast<std::int64_t>(lattice.units[0]);
  const auto b1 = static_cast<std::int64_t>(lattice.units[1]);
  const auto a1 = static_cast<std::int64_t>(lattice.units[2]);
  const bool r_odd = r % 2 == 1;

  auto inside = [&](int first_exponent, int second_exponent) {
    const auto lat = Lattice2::make({c1, b1, a1}, {first_exponent, second_exponent, s});
    return norm_inside(ternary_spinor_norm(lat), n);
  };

  K3 fails = K3::False;
  if ((r + s) % 2 == vt % 2) {
    const K3 l1 = inside(r - 2, r);
    const K3 l2 = inside(r, r);
    const K3 clause_a = k_of(r_odd && vt >= r - 3);
    const K3 clause_b = k_and(k_and(k_of(!r_odd), k_not(l1)), k_of((r != s && vt >= r - 2) || (r == s && vt >= r)));
    const K3 clause_c = k_and(k_and(k_and(k_of(!r_odd), l1), k_not(l2)), k_of(vt >= r));
    const K3 clause_d = k_and(k_and(k_and(k_of(!r_odd), l1), l2), k_of(vt >= s));
    fails = k_or(k_or(clause_a, clause_b), k_or(clause_c, clause_d));
  } else {
    if (!(0 < r && r < s)) return SpinorCheck::Indeterminate;
    const K3 l1 = inside(r - 3, r);
    const K3 clause_a = k_of(!r_odd && vt >= r - 4);
    const K3 clause_b = k_and(k_and(k_of(r_odd), k_not(l1)), k_of(vt >= r - 3));
    const K3 clause_c = k_and(k_and(k_of(r_odd), l1), k_of(vt >= s - 2));
    fails = k_or(clause_a, k_or(clause_b, clause_c));
  }
  switch (fails) {
    case K3::True:
      return SpinorCheck::ConditionsFail;
    case K3::False:
      return SpinorCheck::ConditionsHold;
    case K3::Unknown:
      return SpinorCheck::Indeterminate;
  }
  return SpinorCheck::Indeterminate;
}

}  // namespace mixedforms
