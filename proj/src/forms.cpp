#include "mixedforms/forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mixedforms/arith.hpp"

namespace mixedforms {

namespace {

using u128 = unsigned __int128;

// Fixed-size bit array over [0, bound].
class BitArray {
 public:
  explicit BitArray(std::uint64_t bound) : bound_(bound), words_(bound / 64 + 1, 0) {}

  void set(std::uint64_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  // this |= other << shift, truncated at bound.
  void or_shifted(const BitArray& other, std::uint64_t shift) {
    const std::size_t n = words_.size();
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    if (word_shift >= n) return;
    for (std::size_t i = n; i-- > word_shift;) {
      const std::size_t j = i - word_shift;
      std::uint64_t v = other.words_[j] << bit_shift;
      if (bit_shift != 0 && j > 0) v |= other.words_[j - 1] >> (64 - bit_shift);
      words_[i] |= v;
    }
  }

  void or_with(const BitArray& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  std::vector<std::uint64_t> unset_positions() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i <= bound_; ++i) {
      if (!test(i)) out.push_back(i);
    }
    return out;
  }

 private:
  std::uint64_t bound_;
  std::vector<std::uint64_t> words_;
};

std::uint64_t shape_value(SlotShape shape, std::uint64_t t) {
  return shape == SlotShape::Square ? t * t : triangular(t);
}

// coefficient * shape(t) for t = 0, 1, ... while the value stays <= bound.
// Triangular slots only need t >= 0 because T_t = T_{-t-1}.
std::vector<std::uint64_t> slot_values(std::uint64_t coefficient, SlotShape shape, std::uint64_t bound) {
  std::vector<std::uint64_t> values;
  for (std::uint64_t t = 0;; ++t) {
    u128 v = static_cast<u128>(coefficient) * shape_value(shape, t);
    if (v > bound) break;
    values.push_back(static_cast<std::uint64_t>(v));
  }
  return values;
}

bool slot_hits(std::uint64_t coefficient, SlotShape shape, std::uint64_t value) {
  if (value % coefficient != 0) return false;
  const std::uint64_t q = value / coefficient;
  return shape == SlotShape::Square ? is_square(q) : is_triangular(q);
}

// Slot indices ordered by coefficient, largest first.
std::array<int, 3> slots_by_coefficient(const MixedForm& form) {
  std::array<int, 3> order{0, 1, 2};
  const auto coeffs = form.coefficients();
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return coeffs[i] > coeffs[j]; });
  return order;
}

std::uint64_t signed_square(std::int64_t v) {
  const auto m = static_cast<std::uint64_t>(v < 0 ? -v : v);
  return m * m;
}

std::uint64_t signed_triangular(std::int64_t v) {
  // T_v for negative v equals T_{-v-1}.
  const auto t = static_cast<std::uint64_t>(v < 0 ? -v - 1 : v);
  return triangular(t);
}

}  // namespace

std::string_view kind_tag(Kind kind) {
  switch (kind) {
    case Kind::TwoSquaresOneTri:
      return "sst";
    case Kind::OneSquareTwoTri:
      return "stt";
    case Kind::ThreeTri:
      return "ttt";
  }
  return "?";
}

Kind parse_kind(std::string_view tag) {
  if (tag == "sst") return Kind::TwoSquaresOneTri;
  if (tag == "stt") return Kind::OneSquareTwoTri;
  if (tag == "ttt") return Kind::ThreeTri;
  throw std::invalid_argument("unknown form kind '" + std::string(tag) + "' (expected sst, stt or ttt)");
}

MixedForm MixedForm::make(Kind kind, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  for (std::uint64_t v : {a, b, c}) {
    if (v == 0 || v > kMaxCoefficient) {
      throw std::invalid_argument("coefficients must lie in [1, 2^32]");
    }
  }
  return MixedForm{kind, a, b, c};
}

SlotShape MixedForm::shape(int slot) const {
  switch (kind) {
    case Kind::TwoSquaresOneTri:
      return slot < 2 ? SlotShape::Square : SlotShape::Triangular;
    case Kind::OneSquareTwoTri:
      return slot < 1 ? SlotShape::Square : SlotShape::Triangular;
    case Kind::ThreeTri:
      return SlotShape::Triangular;
  }
  return SlotShape::Square;
}

std::string to_string(const MixedForm& form) {
  static constexpr std::array<char, 3> vars{'x', 'y', 'z'};
  std::string out;
  const auto coeffs = form.coefficients();
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out += '+';
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
    if (form.shape(i) == SlotShape::Square) {
      out += vars[i];
      out += "^2";
    } else {
      out += "T_";
      out += vars[i];
    }
  }
  return out;
}

std::uint64_t evaluate(const MixedForm& form, std::int64_t x, std::int64_t y, std::int64_t z) {
  const std::array<std::int64_t, 3> args{x, y, z};
  const auto coeffs = form.coefficients();
  u128 total = 0;
  for (int i = 0; i < 3; ++i) {
    if (args[i] > kMaxEvalArgument || args[i] < -kMaxEvalArgument) {
      throw std::overflow_error("evaluate: argument exceeds 2^20 in absolute value");
    }
    const std::uint64_t q =
        form.shape(i) == SlotShape::Square ? signed_square(args[i]) : signed_triangular(args[i]);
    total += static_cast<u128>(coeffs[i]) * q;
  }
  if (total > UINT64_MAX) throw std::overflow_error("evaluate: value exceeds 64 bits");
  return static_cast<std::uint64_t>(total);
}

bool represents(const MixedForm& form, std::uint64_t n) {
  if (n > kMaxRepresentTarget) throw std::invalid_argument("represents: target exceeds 2^40");
  const auto order = slots_by_coefficient(form);
  const auto coeffs = form.coefficients();
  const auto outer = slot_values(coeffs[order[0]], form.shape(order[0]), n);
  const auto middle = slot_values(coeffs[order[1]], form.shape(order[1]), n);
  for (std::uint64_t u : outer) {
    for (std::uint64_t v : middle) {
      if (u + v > n) break;
      if (slot_hits(coeffs[order[2]], form.shape(order[2]), n - u - v)) return true;
    }
  }
  return false;
}

ExceptionalSetReport exceptional_set(const MixedForm& form, std::uint64_t bound, unsigned jobs) {
  if (bound > kMaxSieveBound) {
    throw std::length_error("exceptional_set: bound exceeds the configured maximum of 10^7");
  }
  jobs = std::max(1u, jobs);
  const auto order = slots_by_coefficient(form);
  const auto coeffs = form.coefficients();

  // Pairwise sums of the two smaller-coefficient slots, then one shifted OR
  // per value of the largest-coefficient slot.
  const auto first = slot_values(coeffs[order[1]], form.shape(order[1]), bound);
  const auto second = slot_values(coeffs[order[2]], form.shape(order[2]), bound);
  BitArray pair_sums(bound);
  for (std::uint64_t u : first) {
    for (std::uint64_t v : second) {
      if (u + v > bound) break;
      pair_sums.set(u + v);
    }
  }

  const auto shifts = slot_values(coeffs[order[0]], form.shape(order[0]), bound);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, shifts.size()));
  std::vector<BitArray> partial(jobs, BitArray(bound));
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < shifts.size(); i += jobs) partial[worker].or_shifted(pair_sums, shifts[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }
  for (unsigned w = 1; w < jobs; ++w) partial[0].or_with(partial[w]);

  ExceptionalSetReport report;
  report.form = form;
  report.bound = bound;
  report.exceptions = partial[0].unset_positions();
  report.complete_below_bound = true;
  report.caveat = "complete for n <= " + std::to_string(bound) +
                  "; no claim is made about integers beyond the bound";
  return report;
}

DiagonalQuadratic associated_quadratic(const MixedForm& form) {
  const auto [a, b, c] = form.coefficients();
  DiagonalQuadratic q;
  switch (form.kind) {
    case Kind::TwoSquaresOneTri:
      q.coefficients = {8 * a, 8 * b, c};
      q.parity = {Parity::Any, Parity::Any, Parity::Odd};
      q.offset = c;
      break;
    case Kind::OneSquareTwoTri:
      q.coefficients = {8 * a, b, c};
      q.parity = {Parity::Any, Parity::Odd, Parity::Odd};
      q.offset = b + c;
      break;
    case Kind::ThreeTri:
      q.coefficients = {a, b, c};
      q.parity = {Parity::Odd, Parity::Odd, Parity::Odd};
      q.offset = a + b + c;
      break;
  }
  return q;
}

namespace {

// Walks nonnegative (x, y) and solves for z, reporting each hit with its sign
// multiplicity. The visitor returns false to stop early.
template <typename Visitor>
void walk_solutions(const std::array<std::uint64_t, 3>& coefficients, const std::array<Parity, 3>& parity,
                    std::uint64_t n, Visitor&& visit) {
  for (std::uint64_t c : coefficients) {
    if (c == 0) throw std::invalid_argument("quadratic coefficients must be positive");
  }
  // Solve for the variable with the smallest coefficient.
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return coefficients[i] > coefficients[j]; });
  auto parity_ok = [&](int slot, std::uint64_t v) { return parity[slot] == Parity::Any || v % 2 == 1; };
  auto multiplicity = [](std::uint64_t v) -> std::uint64_t { return v == 0 ? 1 : 2; };

  const std::uint64_t c0 = coefficients[order[0]], c1 = coefficients[order[1]], c2 = coefficients[order[2]];
  for (std::uint64_t x = 0;; ++x) {
    const u128 vx = static_cast<u128>(c0) * x * x;
    if (vx > n) break;
    if (!parity_ok(order[0], x)) continue;
    for (std::uint64_t y = 0;; ++y) {
      const u128 vy = vx + static_cast<u128>(c1) * y * y;
      if (vy > n) break;
      if (!parity_ok(order[1], y)) continue;
      const auto rest = static_cast<std::uint64_t>(n - vy);
      if (rest % c2 != 0 || !is_square(rest / c2)) continue;
      const std::uint64_t z = isqrt(rest / c2);
      if (!parity_ok(order[2], z)) continue;
      if (!visit(multiplicity(x) * multiplicity(y) * multiplicity(z))) return;
    }
  }
}

std::vector<std::uint64_t> square_value_frequencies(std::uint64_t coefficient, std::uint64_t m) {
  std::vector<std::uint64_t> freq(m, 0);
  const std::uint64_t c = coefficient % m;
  for (std::uint64_t x = 0; x < m; ++x) ++freq[mul_mod(c, mul_mod(x, x, m), m)];
  return freq;
}

std::uint64_t checked_modulus(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("local_count: p must be prime");
  if (k == 0) throw std::invalid_argument("local_count: k must be positive");
  std::uint64_t m = 1;
  for (unsigned i = 0; i < k; ++i) {
    m *= p;
    if (m > kMaxLocalModulus) throw std::invalid_argument("local_count: p^k exceeds 10^6");
  }
  return m;
}

// Distribution of the first two diagonal terms mod m.
std::vector<std::uint64_t> pair_distribution(const std::vector<std::uint64_t>& f1,
                                             const std::vector<std::uint64_t>& f2, std::uint64_t m) {
  std::vector<std::uint64_t> h(m, 0);
  for (std::uint64_t u = 0; u < m; ++u) {
    if (f1[u] == 0) continue;
    for (std::uint64_t v = 0; v < m; ++v) {
      if (f2[v] == 0) continue;
      const std::uint64_t s = u + v >= m ? u + v - m : u + v;
      h[s] += f1[u] * f2[v];
    }
  }
  return h;
}

}  // namespace

std::uint64_t restricted_count(const DiagonalQuadratic& q, std::uint64_t n) {
  if (n > kMaxRepresentTarget) throw std::invalid_argument("restricted_count: target exceeds 2^40");
  std::uint64_t total = 0;
  walk_solutions(q.coefficients, q.parity, n, [&](std::uint64_t mult) {
    total += mult;
    return true;
  });
  return total;
}

bool restricted_solvable(const std::array<std::uint64_t, 3>& coefficients, const std::array<Parity, 3>& parity,
                         std::uint64_t n) {
  bool found = false;
  walk_solutions(coefficients, parity, n, [&](std::uint64_t) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t local_count(const std::array<std::uint64_t, 3>& coefficients, std::uint64_t n, std::uint64_t p,
                          unsigned k) {
  const std::uint64_t m = checked_modulus(p, k);
  const auto f1 = square_value_frequencies(coefficients[0], m);
  const auto f2 = square_value_frequencies(coefficients[1], m);
  const auto f3 = square_value_frequencies(coefficients[2], m);
  const auto h = pair_distribution(f1, f2, m);
  const std::uint64_t target = n % m;
  std::uint64_t count = 0;
  for (std::uint64_t u = 0; u < m; ++u) {
    if (h[u] == 0) continue;
    count += h[u] * f3[(target + m - u) % m];
  }
  return count;
}

std::vector<std::uint64_t> local_count_table(const std::array<std::uint64_t, 3>& coefficients, std::uint64_t p,
                                             unsigned k) {
  const std::uint64_t m = checked_modulus(p, k);
  const auto f1 = square_value_frequencies(coefficients[0], m);
  const auto f2 = square_value_frequencies(coefficients[1], m);
  const auto f3 = square_value_frequencies(coefficients[2], m);
  return pair_distribution(pair_distribution(f1, f2, m), f3, m);
}

}  // namespace mixedforms
