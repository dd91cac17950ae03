#include "kernels_impl.hpp"

namespace fplab::kernels {

void scalar_axpb_mod(uint32_t a, uint32_t b, const uint32_t* x, std::size_t n,
                     uint32_t p, uint32_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<uint32_t>((a + static_cast<uint64_t>(b) * x[i]) % p);
  }
}

uint64_t scalar_dot4_zero_count(const uint32_t* x0, const uint32_t* x1,
                                const uint32_t* x2, const uint32_t* x3,
                                const uint32_t c[4], std::size_t n, uint32_t p) {
  uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Each product reduced before summing: the 4-term sum stays below 4p.
    uint64_t s = static_cast<uint64_t>(c[0]) * x0[i] % p;
    s += static_cast<uint64_t>(c[1]) * x1[i] % p;
    s += static_cast<uint64_t>(c[2]) * x2[i] % p;
    s += static_cast<uint64_t>(c[3]) * x3[i] % p;
    count += (s % p == 0);
  }
  return count;
}

namespace {

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::pair<double, double> scalar_table_sum(const uint32_t* idx, std::size_t n,
                                           const double* cos_tab, const double* sin_tab) {
  Kahan re, im;
  for (std::size_t i = 0; i < n; ++i) {
    re.add(cos_tab[idx[i]]);
    im.add(sin_tab[idx[i]]);
  }
  return {re.sum, im.sum};
}

std::pair<double, double> scalar_weighted_table_sum(const uint32_t* idx, const double* w,
                                                    std::size_t n, const double* cos_tab,
                                                    const double* sin_tab) {
  Kahan re, im;
  for (std::size_t i = 0; i < n; ++i) {
    re.add(w[i] * cos_tab[idx[i]]);
    im.add(w[i] * sin_tab[idx[i]]);
  }
  return {re.sum, im.sum};
}

uint64_t scalar_sum_squares_u32(const uint32_t* c, std::size_t n) {
  uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<uint64_t>(c[i]) * c[i];
  }
  return acc;
}

}  // namespace fplab::kernels
