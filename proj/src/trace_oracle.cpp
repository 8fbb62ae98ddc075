#include "charvar/trace_oracle.hpp"

#include <cstdlib>

#include "charvar/errors.hpp"
#include "charvar/polyalg.hpp"
#include "charvar/trace.hpp"

namespace charvar {

std::complex<double> Sl2Sampler::uniform_entry() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng_);
  const double im = u(rng_);
  return {re, im};
}

Eigen::Matrix2cd Sl2Sampler::next_matrix() {
  while (true) {
    Eigen::Matrix2cd m;
    m(0, 0) = uniform_entry();
    m(0, 1) = uniform_entry();
    m(1, 0) = uniform_entry();
    m(1, 1) = uniform_entry();
    if (std::abs(m(0, 0)) < kMinPivot) continue;
    m(1, 1) = (1.0 + m(0, 1) * m(1, 0)) / m(0, 0);
    return m;
  }
}

Eigen::Matrix2cd evaluate_numeric(const FreeWord& word, const Eigen::Matrix2cd& first,
                                  const Eigen::Matrix2cd& second) {
  auto sl2_inverse = [](const Eigen::Matrix2cd& m) {
    Eigen::Matrix2cd inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return inv;
  };
  const Eigen::Matrix2cd first_inv = sl2_inverse(first);
  const Eigen::Matrix2cd second_inv = sl2_inverse(second);
  Eigen::Matrix2cd result = Eigen::Matrix2cd::Identity();
  for (const auto& l : word.letters()) {
    const bool is_first = l.gen == Generator::First;
    const Eigen::Matrix2cd& step = l.exp > 0 ? (is_first ? first : second) : (is_first ? first_inv : second_inv);
    for (int i = 0; i < std::abs(l.exp); ++i) result = result * step;
  }
  return result;
}

bool numeric_trace_oracle(const FreeWord& word, const MultiPoly& candidate, int trials, double tol,
                          std::uint64_t seed) {
  if (trials < 1) throw UnsupportedInput("numeric_trace_oracle: trials must be >= 1");
  Sl2Sampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    const auto [a, b] = sampler.next_pair();
    const std::complex<double> expected = evaluate_numeric(word, a, b).trace();
    const std::map<std::string, std::complex<double>> point{
        {"x", a.trace()}, {"y", b.trace()}, {"z", (a * b).trace()}};
    if (std::abs(eval_complex(candidate, point) - expected) >= tol) return false;
  }
  return true;
}

bool numeric_trace_oracle(const FreeWord& word, int trials, double tol, std::uint64_t seed) {
  return numeric_trace_oracle(word, trace_poly(word), trials, tol, seed);
}

}  // namespace charvar
