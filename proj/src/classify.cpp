#include "mixedforms/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mixedforms/arith.hpp"
#include "mixedforms/local.hpp"

namespace mixedforms {

namespace {

std::string join_primes(const std::vector<std::uint64_t>& primes) {
  std::string out = "[";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(primes[i]);
  }
  return out + "]";
}

// "name=value name=value ..."
class Inputs {
 public:
  Inputs& operator()(const char* name, std::uint64_t value) {
    sep();
    out_ << name << '=' << value;
    return *this;
  }
  Inputs& operator()(const char* name, const std::string& value) {
    sep();
    out_ << name << '=' << value;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  void sep() {
    if (!first_) out_ << ' ';
    first_ = false;
  }
  std::ostringstream out_;
  bool first_ = true;
};

bool all_primes(std::uint64_t n, bool (*accept)(std::uint64_t)) {
  for (std::uint64_t p : odd_prime_divisors(n)) {
    if (!accept(p)) return false;
  }
  return n % 2 == 1 || accept(2);
}

bool one_mod_four(std::uint64_t p) { return p % 4 == 1; }
bool one_or_three_mod_eight(std::uint64_t p) { return p % 8 == 1 || p % 8 == 3; }

struct Parts {
  std::uint64_t a, b, c;
  unsigned va, vb, vc;
  std::uint64_t a1, b1, c1;  // odd parts
  std::uint64_t sf;          // SF(a'b'c')
};

Parts parts_of(const MixedForm& f) {
  Parts p{f.a, f.b, f.c, v2(f.a), v2(f.b), v2(f.c), odd_part(f.a), odd_part(f.b), odd_part(f.c), 0};
  p.sf = squarefree_part_of_product({p.a1, p.b1, p.c1});
  return p;
}

void add(Trace& trace, std::string clause, std::string inputs, bool outcome) {
  trace.push_back({std::move(clause), std::move(inputs), outcome});
}

std::string prefix(const MixedForm& f) { return std::string(kind_tag(f.kind)); }

// Clause evaluated only when everything before it held; returns the outcome
// for chaining.
bool residue_class_clause(Trace& trace, const std::string& label, const Parts& p, std::uint64_t sum) {
  const unsigned v = v2(sum);
  bool ok = v < 2;
  if (ok) {
    const std::uint64_t m = std::uint64_t{1} << (3 - v);
    ok = p.sf % m == odd_part(sum) % m;
  }
  add(trace, label, Inputs()("sum", sum)("v2_sum", v)("sf_odd", p.sf).str(), ok);
  return ok;
}

AlmostResult almost_two_squares(const MixedForm& f, Trace trace) {
  const Parts p = parts_of(f);
  const std::string tag = prefix(f);

  const std::uint64_t m = p.vc < 2 ? (std::uint64_t{1} << (3 - p.vc)) : 1;
  bool c1 = p.a % 2 == 0 && p.c % 4 != 0 && p.a1 % m == p.b1 % m;
  if (c1 && p.b % 4 != 0) c1 = p.va % 2 == p.c % 2;
  if (c1 && p.b % 2 == 1 && p.c % 2 == 1) c1 = p.a % 8 == 0 && p.b % 8 == p.c % 8;
  add(trace, tag + ".almost.congruences",
      Inputs()("a", p.a)("b", p.b)("c", p.c)("v2_a", p.va)("v2_c", p.vc).str(), c1);

  const bool same_parity = p.va % 2 == p.vb % 2;
  const bool c2 = all_primes(p.sf, same_parity ? one_mod_four : one_or_three_mod_eight);
  add(trace, tag + ".almost.prime-divisors",
      Inputs()("sf_odd", p.sf)("v2_parity_equal", same_parity ? "true" : "false").str(), c2);

  bool c3 = false;
  if (c1 && c2) {
    const std::uint64_t scale = std::uint64_t{1} << (3 - p.vc);
    const bool solvable = condition3_solvable({scale * p.a, scale * p.b, p.c1},
                                              {Parity::Any, Parity::Any, Parity::Any}, p.sf);
    c3 = !solvable;
    add(trace, tag + ".almost.no-representation",
        Inputs()("coefficients", std::to_string(scale * p.a) + "," + std::to_string(scale * p.b) + "," +
                                     std::to_string(p.c1))("target", p.sf).str(),
        c3);
  }
  return {c1 && c2 && c3 ? TriState::no() : TriState::yes(), std::move(trace)};
}

AlmostResult almost_one_square(const MixedForm& f, Trace trace) {
  const Parts p = parts_of(f);
  const std::string tag = prefix(f);
  const std::uint64_t sum = p.b + p.c;
  const unsigned v = v2(sum);

  const bool c1 = residue_class_clause(trace, tag + ".almost.congruences", p, sum);

  const bool sf_abc_odd = (p.va + p.vb + p.vc) % 2 == 0;
  const bool match = (sf_abc_odd ? 1u : 0u) == sum % 2;
  const bool c2 = all_primes(p.sf, match ? one_or_three_mod_eight : one_mod_four);
  add(trace, tag + ".almost.prime-divisors",
      Inputs()("sf_odd", p.sf)("sf_abc_parity_matches", match ? "true" : "false").str(), c2);

  const unsigned va = p.va, vb = p.vb;
  bool c4 = true;
  if (vb <= 1) c4 = va >= vb + 2 && (va - vb) % 2 == 0;
  else if (vb == 2) c4 = va % 2 == 1;
  else if (vb >= 5 && vb % 2 == 1) c4 = p.a % 4 == 0 || p.c % 2 == 0;
  else if (vb >= 6 && vb % 2 == 0) c4 = p.a % 2 == 0 || p.a % 8 == p.c % 8;
  const bool middle = vb == 3 || vb == 4;
  bool c4_middle = true;
  if (vb == 3) c4_middle = p.a % 4 == 0 || p.c % 2 == 0;
  if (vb == 4) c4_middle = p.a % 2 == 0 || p.a % 8 == p.c % 8;
  add(trace, tag + ".almost.valuations", Inputs()("v2_a", va)("v2_b", vb)("a", p.a)("c", p.c).str(),
      middle ? c4_middle : c4);

  bool c3 = false;
  const bool need_c3 = c1 && c2 && (middle ? c4_middle : c4);
  if (need_c3) {
    const std::uint64_t target = (std::uint64_t{1} << v) * p.sf;
    c3 = !condition3_solvable({8 * p.a, p.b, p.c}, {Parity::Any, Parity::Odd, Parity::Odd}, target);
    add(trace, tag + ".almost.no-representation",
        Inputs()("coefficients", std::to_string(8 * p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c))(
            "target", target)
            .str(),
        c3);
  }

  if (!middle) return {need_c3 && c3 ? TriState::no() : TriState::yes(), std::move(trace)};

  if (!(need_c3 && c3)) return {TriState::yes(), std::move(trace)};
  const bool sufficient = va % 2 == 1 && (vb == 4 || (vb == 3 && va >= 3 && p.b1 % 8 == p.c1 % 8));
  add(trace, tag + ".almost.middle-valuation-sufficient",
      Inputs()("v2_a", va)("v2_b", vb)("b_odd_mod8", p.b1 % 8)("c_odd_mod8", p.c1 % 8).str(), sufficient);
  if (sufficient) return {TriState::no(), std::move(trace)};
  return {TriState::unknown("stt-v2b-in-3-4-gap"), std::move(trace)};
}

AlmostResult almost_three_tri(const MixedForm& f, Trace trace) {
  const Parts p = parts_of(f);
  const std::string tag = prefix(f);
  const std::uint64_t sum = p.a + p.b + p.c;
  const unsigned v = v2(sum);

  const bool c1 = residue_class_clause(trace, tag + ".almost.congruences", p, sum);

  const bool sf_abc_odd = (p.va + p.vb + p.vc) % 2 == 0;
  const bool match = (sf_abc_odd ? 1u : 0u) == sum % 2;
  const bool c2 = all_primes(p.sf, match ? one_mod_four : one_or_three_mod_eight);
  add(trace, tag + ".almost.prime-divisors",
      Inputs()("sf_odd", p.sf)("sf_abc_parity_matches", match ? "true" : "false").str(), c2);

  const unsigned va = p.va, vb = p.vb;
  const unsigned diff = va - vb;
  bool c4 = true;
  if (vb <= 1) c4 = diff >= 3 && diff % 2 == 1;
  else if (vb == 2) c4 = va % 2 == 0;
  add(trace, tag + ".almost.valuations", Inputs()("v2_a", va)("v2_b", vb).str(), c4);

  if (!(c1 && c2 && c4)) return {TriState::yes(), std::move(trace)};

  const std::uint64_t target = (std::uint64_t{1} << v) * p.sf;
  const bool c3 = !condition3_solvable({p.a, p.b, p.c}, {Parity::Odd, Parity::Odd, Parity::Odd}, target);
  add(trace, tag + ".almost.no-representation",
      Inputs()("coefficients", std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c))(
          "target", target)
          .str(),
      c3);
  if (!c3) return {TriState::yes(), std::move(trace)};

  bool strong = true;
  if (vb <= 1) strong = diff >= 5 && diff % 2 == 1;
  else if (vb == 2 || vb == 4) strong = va >= 4 && va % 2 == 0;
  else if (vb == 3) strong = va >= 6 && va % 2 == 0 && p.b1 % 8 == p.c % 8;
  add(trace, tag + ".almost.valuations-strong",
      Inputs()("v2_a", va)("v2_b", vb)("b_odd_mod8", p.b1 % 8)("c_mod8", p.c % 8).str(), strong);
  if (strong) return {TriState::no(), std::move(trace)};
  return {TriState::unknown("ttt-band-gap"), std::move(trace)};
}

// e(T_x+T_y) and e(x^2+2T_y) take the same values, so a T_x+T_y+T_z form with
// a repeated coefficient has the same exceptions as a square-plus-two-triangles
// form. Used only where the three-triangle table is silent.
void settle_by_pair_identity(const MixedForm& f, AlmostResult& r) {
  const auto v = f.coefficients();
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t e = v[i], d = v[(i + 2) % 3];
    if (e != v[(i + 1) % 3] || e > kMaxCoefficient / 2) continue;
    const MixedForm twin = MixedForm::make(Kind::OneSquareTwoTri, e, 2 * e, d);
    AlmostResult t = classify_almost(twin);
    add(r.trace, prefix(f) + ".almost.paired-slot-identity", Inputs()("equivalent", to_string(twin)).str(),
        t.value.value != Verdict::Unknown);
    if (t.value.value == Verdict::Unknown) return;
    for (auto& entry : t.trace) r.trace.push_back(std::move(entry));
    r.value = t.value;
    return;
  }
}

std::array<std::uint64_t, 3> canonical_key(const MixedForm& f) {
  auto [a, b, c] = f.coefficients();
  switch (f.kind) {
    case Kind::TwoSquaresOneTri:
      if (a > b) std::swap(a, b);
      return {a, b, c};
    case Kind::OneSquareTwoTri:
      if (b < c) std::swap(b, c);
      return {a, b, c};
    case Kind::ThreeTri: {
      std::array<std::uint64_t, 3> v{a, b, c};
      std::sort(v.begin(), v.end());
      return v;
    }
  }
  return {a, b, c};
}

struct LiteratureNote {
  Kind kind;
  std::array<std::uint64_t, 3> normalized;
  const char* text;
};

// Results known from separate arguments. They are reported as notes only.
constexpr LiteratureNote kLiteratureNotes[] = {
    {Kind::ThreeTri, {8, 1, 1}, "known by a separate argument to be not almost universal"},
    {Kind::ThreeTri, {4, 4, 1}, "known by a separate argument to be not almost universal"},
    {Kind::ThreeTri, {48, 2, 1}, "known by a separate argument to be not almost universal"},
};

}  // namespace

std::string_view verdict_tag(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

NormalizedForm normalize(const MixedForm& form) {
  const auto coeffs = form.coefficients();
  auto before = [&](int i, int j) {
    const unsigned vi = v2(coeffs[i]), vj = v2(coeffs[j]);
    if (vi != vj) return vi > vj;
    return coeffs[i] > coeffs[j];
  };
  NormalizedForm out;
  auto& perm = out.permutation;
  switch (form.kind) {
    case Kind::TwoSquaresOneTri:
      if (before(1, 0)) std::swap(perm[0], perm[1]);
      break;
    case Kind::OneSquareTwoTri:
      if (before(2, 1)) std::swap(perm[1], perm[2]);
      break;
    case Kind::ThreeTri:
      std::sort(perm.begin(), perm.end(), before);
      break;
  }
  out.form = MixedForm{form.kind, coeffs[perm[0]], coeffs[perm[1]], coeffs[perm[2]]};
  return out;
}

AsymptoticResult classify_asymptotic(const MixedForm& form) {
  AsymptoticResult result;
  const std::string tag = prefix(form);
  const std::uint64_t g = std::gcd(std::gcd(form.a, form.b), form.c);
  add(result.trace, tag + ".asymptotic.coprime", Inputs()("gcd", g).str(), g == 1);
  if (g != 1) return result;

  const LocalReport local = local_report(form);
  add(result.trace, tag + ".asymptotic.residues",
      Inputs()("failing_primes", join_primes(local.failing_odd_primes)).str(), local.odd_condition_holds);
  add(result.trace, tag + ".asymptotic.two-adic", Inputs()("a", form.a)("b", form.b)("c", form.c).str(),
      local.two_adic_holds);
  result.value = local.odd_condition_holds && local.two_adic_holds;
  return result;
}

bool condition3_solvable(const std::array<std::uint64_t, 3>& coefficients, const std::array<Parity, 3>& parity,
                         std::uint64_t target) {
  return restricted_solvable(coefficients, parity, target);
}

AlmostResult classify_almost(const MixedForm& form) {
  auto asym = classify_asymptotic(form);
  if (!asym.value) return {TriState::no(), std::move(asym.trace)};
  const NormalizedForm norm = normalize(form);
  switch (form.kind) {
    case Kind::TwoSquaresOneTri:
      return almost_two_squares(norm.form, std::move(asym.trace));
    case Kind::OneSquareTwoTri:
      return almost_one_square(norm.form, std::move(asym.trace));
    case Kind::ThreeTri: {
      AlmostResult r = almost_three_tri(norm.form, std::move(asym.trace));
      if (r.value.value == Verdict::Unknown) settle_by_pair_identity(norm.form, r);
      return r;
    }
  }
  return {TriState::unknown("unreachable"), {}};
}

const std::vector<std::array<std::uint64_t, 3>>& universal_list(Kind kind) {
  static const std::vector<std::array<std::uint64_t, 3>> two_squares{
      {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 4}, {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 8, 1}, {2, 2, 1}};
  static const std::vector<std::array<std::uint64_t, 3>> one_square{
      {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 5, 2}, {1, 6, 1},
      {1, 8, 1}, {2, 1, 1}, {2, 2, 1}, {2, 4, 1}, {3, 2, 1}, {4, 1, 1}, {4, 2, 1}};
  static const std::vector<std::array<std::uint64_t, 3>> three_tri{{1, 1, 1}, {1, 1, 2}, {1, 1, 4}, {1, 1, 5},
                                                                    {1, 2, 2}, {1, 2, 3}, {1, 2, 4}};
  switch (kind) {
    case Kind::TwoSquaresOneTri:
      return two_squares;
    case Kind::OneSquareTwoTri:
      return one_square;
    case Kind::ThreeTri:
      return three_tri;
  }
  return three_tri;
}

bool classify_universal(const MixedForm& form) {
  const auto key = canonical_key(form);
  const auto& list = universal_list(form.kind);
  return std::find(list.begin(), list.end(), key) != list.end();
}

Classification classify(const MixedForm& form) {
  Classification out;
  out.form = form;
  out.normalized = normalize(form);
  const auto& perm = out.normalized.permutation;
  add(out.trace, prefix(form) + ".normalize",
      Inputs()("permutation", std::to_string(perm[0]) + "," + std::to_string(perm[1]) + "," +
                                  std::to_string(perm[2]))
          .str(),
      perm != std::array<int, 3>{0, 1, 2});

  out.universal = classify_universal(form);
  add(out.trace, prefix(form) + ".universal.list-membership", to_string(form), out.universal);

  auto almost = classify_almost(form);
  out.asymptotically_universal = false;
  for (const auto& e : almost.trace) {
    if (e.clause.ends_with(".asymptotic.coprime") && !e.outcome) out.notes.push_back("gcd(a,b,c) > 1");
  }
  out.asymptotically_universal = classify_asymptotic(form).value;
  out.almost_universal = std::move(almost.value);
  out.trace.insert(out.trace.end(), almost.trace.begin(), almost.trace.end());

  for (const auto& note : kLiteratureNotes) {
    const auto& n = out.normalized.form;
    if (note.kind == form.kind && note.normalized == std::array<std::uint64_t, 3>{n.a, n.b, n.c}) {
      out.notes.emplace_back(note.text);
    }
  }
  if (form.kind == Kind::TwoSquaresOneTri && out.asymptotically_universal) {
    for (const auto& e : out.trace) {
      if (e.clause == "sst.almost.prime-divisors" && !e.outcome) {
        out.notes.emplace_back("prime-divisor condition fails, yet the form is asymptotically universal");
      }
    }
  }
  return out;
}

}  // namespace mixedforms
