#include "ylab/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "ylab/combinatorics.hpp"
#include "ylab/error.hpp"
#include "ylab/families.hpp"
#include "ylab/series.hpp"

namespace ylab {

ParameterGrid ParameterGrid::defaults() {
  ParameterGrid g;
  for (const char* s : {"-2", "-1", "-1/2", "1/3", "2", "5/2", "3"}) {
    g.lambdas.push_back(Rational::parse(s));
  }
  for (const char* s : {"0", "1", "-1", "1/2"}) g.xs.push_back(Rational::parse(s));
  return g;
}

namespace {

std::string str(long v) { return std::to_string(v); }

std::string tuple_str(const std::vector<long>& ks) {
  std::string out = "[";
  for (size_t i = 0; i < ks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ks[i]);
  }
  return out + "]";
}

// Records comparisons; the first mismatch becomes the counterexample.
class Recorder {
 public:
  explicit Recorder(IdentityReport& report) : report_(report) {}

  template <class T, class MakeParams>
  bool expect(const T& lhs, const T& rhs, MakeParams&& make_params) {
    ++report_.points_tested;
    if (lhs == rhs) return true;
    report_.passed = false;
    report_.first_counterexample = Counterexample{make_params(), lhs.to_string(), rhs.to_string()};
    return false;
  }

  void notice(std::string text) { report_.notices.push_back(std::move(text)); }

 private:
  IdentityReport& report_;
};

// Closed-form Y_n^(k)(lambda) for 0 <= k <= max_k, 0 <= n <= max_n; zero for n < 0.
class YTable {
 public:
  YTable(const Rational& lambda, long max_k, long max_n)
      : max_n_(max_n), values_(static_cast<size_t>(max_k + 1)) {
    for (long k = 0; k <= max_k; ++k) {
      auto& row = values_[static_cast<size_t>(k)];
      row.reserve(static_cast<size_t>(max_n + 1));
      for (long n = 0; n <= max_n; ++n) row.push_back(y_number(n, k, lambda));
    }
  }

  const Rational& operator()(long n, long k) const {
    static const Rational zero;
    if (n < 0) return zero;
    return values_.at(static_cast<size_t>(k)).at(static_cast<size_t>(n));
  }

  long max_n() const { return max_n_; }

 private:
  long max_n_;
  std::vector<std::vector<Rational>> values_;
};

struct Context {
  const ParameterGrid& grid;
  std::vector<Rational> lambdas;
  std::string_view variant;
  Recorder rec;
};

// Visits every k-tuple of length m over the k range.
void for_each_tuple(const IntRange& range, long m, const std::function<bool(const std::vector<long>&)>& f) {
  std::vector<long> t(static_cast<size_t>(m), range.lo);
  while (true) {
    if (!f(t)) return;
    long i = m - 1;
    while (i >= 0 && t[static_cast<size_t>(i)] == range.hi) {
      t[static_cast<size_t>(i)] = range.lo;
      --i;
    }
    if (i < 0) return;
    ++t[static_cast<size_t>(i)];
  }
}

// Visits every composition (v_1, ..., v_m) of n into m nonnegative parts.
void for_each_composition(long n, long m, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> v(static_cast<size_t>(m), 0);
  std::function<void(long, long)> rec = [&](long idx, long remaining) {
    if (idx == m - 1) {
      v[static_cast<size_t>(idx)] = remaining;
      f(v);
      return;
    }
    for (long p = 0; p <= remaining; ++p) {
      v[static_cast<size_t>(idx)] = p;
      rec(idx + 1, remaining - p);
    }
  };
  if (m >= 1) rec(0, n);
}

Rational inv_factorial(long n) { return Rational(BigInt(1), factorial(n)); }

// 1. Closed form against the power-series expansion of the generating function.
void check_explicit_vs_series(Context& c) {
  for (const auto& lambda : c.lambdas) {
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      const auto series = expand_y_gf(static_cast<unsigned long>(k), lambda,
                                      static_cast<size_t>(c.grid.n.hi + 1));
      for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
        if (!c.rec.expect(y_number(n, k, lambda), series[static_cast<size_t>(n)], [&] {
              return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"n", str(n)}};
            }))
          return;
      }
    }
  }
}

// 2. Y_n = lambda^2/(1-lambda) (n+k-1) Y_{n-1}, n >= 1.
void check_recurrence_basic(Context& c) {
  for (const auto& lambda : c.lambdas) {
    const Rational ratio = lambda * lambda / (Rational(1) - lambda);
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (long n = std::max(1L, c.grid.n.lo); n <= c.grid.n.hi; ++n) {
        const Rational rhs = ratio * Rational(n + k - 1) * y_number(n - 1, k, lambda);
        if (!c.rec.expect(y_number(n, k, lambda), rhs, [&] {
              return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"n", str(n)}};
            }))
          return;
      }
    }
  }
}

// 3. sum_j (-1)^{k-j} (n)_j C(k,j) lambda^{2j} (1-lambda)^{k-j} Y_{n-j}^(k) = 0, n >= 1.
void check_recurrence_new7(Context& c) {
  for (const auto& lambda : c.lambdas) {
    const YTable y(lambda, c.grid.k.hi, c.grid.n.hi);
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (long n = std::max(1L, c.grid.n.lo); n <= c.grid.n.hi; ++n) {
        Rational sum = 0;
        for (long j = 0; j <= std::min(k, n); ++j) {
          Rational term = falling_factorial(Rational(n), j) * Rational(binomial(k, j)) *
                          lambda.pow(2 * j) * (Rational(1) - lambda).pow(k - j) * y(n - j, k);
          sum += neg_one_pow(k - j) < 0 ? -term : term;
        }
        if (!c.rec.expect(sum, Rational(0), [&] {
              return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"n", str(n)}};
            }))
          return;
      }
    }
  }
}

// 4. Finite-sum polynomial route against the (1 + lambda t)^x series product.
void check_poly_from_numbers(Context& c) {
  for (const auto& lambda : c.lambdas) {
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (const auto& x : c.grid.xs) {
        const auto series = expand_y_poly_gf(static_cast<unsigned long>(k), x, lambda,
                                             static_cast<size_t>(c.grid.n.hi + 1));
        for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
          if (!c.rec.expect(y_polynomial(n, k, x, lambda), series[static_cast<size_t>(n)], [&] {
                return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)},
                                 {"x", x.to_string()}, {"n", str(n)}};
              }))
            return;
        }
      }
    }
  }
}

// 5. sum_j (-1)^j Y_j Y_{n-j} = 4 lambda^{2n} (1+(-1)^n) (n+1)! / ((n+2)(lambda-1)^{n+2}).
void check_alt_convolution(Context& c) {
  for (const auto& lambda : c.lambdas) {
    const YTable y(lambda, 1, c.grid.n.hi);
    for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
      Rational lhs = 0;
      for (long j = 0; j <= n; ++j) {
        const Rational term = y(j, 1) * y(n - j, 1);
        lhs += neg_one_pow(j) < 0 ? -term : term;
      }
      const Rational rhs = Rational(4) * lambda.pow(2 * n) * Rational(1 + neg_one_pow(n)) *
                           Rational(factorial(n + 1)) /
                           (Rational(n + 2) * (lambda - Rational(1)).pow(n + 2));
      if (!c.rec.expect(lhs, rhs, [&] {
            return ParamList{{"lambda", lambda.to_string()}, {"n", str(n)}};
          }))
        return;
    }
  }
}

Rational sury_sum(long n) {
  Rational s = 0;
  for (long j = 0; j <= n; ++j) s += Rational(2).pow(j) / Rational(j + 1);
  return s;
}

// 6. sum_j Y_j Y_{n-j} in closed form.
void check_plain_convolution(Context& c) {
  for (const auto& lambda : c.lambdas) {
    const YTable y(lambda, 1, c.grid.n.hi);
    for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
      Rational lhs = 0;
      for (long j = 0; j <= n; ++j) lhs += y(j, 1) * y(n - j, 1);
      const Rational lm1 = lambda - Rational(1);
      Rational rhs = Rational(factorial(n + 1)) / (Rational(2).pow(n - 2) * lm1 * lm1) *
                     (lambda * lambda / lm1).pow(n) * sury_sum(n);
      if (neg_one_pow(n) < 0) rhs = -rhs;
      if (!c.rec.expect(lhs, rhs, [&] {
            return ParamList{{"lambda", lambda.to_string()}, {"n", str(n)}};
          }))
        return;
    }
  }
}

// 7. sum_j 1/C(n,j) = (n+1)/2^n sum_j 2^j/(j+1).
void check_inverse_binomial_sury(Context& c) {
  for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
    Rational lhs = 0;
    for (long j = 0; j <= n; ++j) lhs += Rational(BigInt(1), binomial(n, j));
    const Rational rhs = Rational(n + 1) / Rational(2).pow(n) * sury_sum(n);
    if (!c.rec.expect(lhs, rhs, [&] { return ParamList{{"n", str(n)}}; })) return;
  }
}

// 8. sum_j (-1)^j / C(n,j) = (1+(-1)^n)(n+1)/(n+2).
void check_inverse_binomial_alt(Context& c) {
  for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
    Rational lhs = 0;
    for (long j = 0; j <= n; ++j) {
      const Rational term(BigInt(1), binomial(n, j));
      lhs += neg_one_pow(j) < 0 ? -term : term;
    }
    const Rational rhs = Rational(1 + neg_one_pow(n)) * Rational(n + 1) / Rational(n + 2);
    if (!c.rec.expect(lhs, rhs, [&] { return ParamList{{"n", str(n)}}; })) return;
  }
}

// 9. sum_j (-1)^{k-j} (n)_j lambda^j B_j^k(lambda) Y_{n-j}^(k) = 0, n >= 1.
void check_bernstein_relation(Context& c) {
  for (const auto& lambda : c.lambdas) {
    const YTable y(lambda, c.grid.k.hi, c.grid.n.hi);
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (long n = std::max(1L, c.grid.n.lo); n <= c.grid.n.hi; ++n) {
        Rational sum = 0;
        for (long j = 0; j <= std::min(k, n); ++j) {
          Rational term = falling_factorial(Rational(n), j) * lambda.pow(j) *
                          bernstein(j, k, lambda) * y(n - j, k);
          sum += neg_one_pow(k - j) < 0 ? -term : term;
        }
        if (!c.rec.expect(sum, Rational(0), [&] {
              return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"n", str(n)}};
            }))
          return;
      }
    }
  }
}

// 10. Y_v^(k) through Stirling numbers of the first kind and Apostol-Bernoulli
// numbers. Variants: "plus" carries (-1)^{k+1}, "minus" carries (-1)^k,
// "general" uses the order-k index shift m! B_{m+k}^(k) / (m+k)!.
void check_s1_apostol_bernoulli(Context& c) {
  const long max_v = c.grid.n.hi;
  const auto s1 = FamilyTable::stirling1(max_v);
  for (const auto& lambda : c.lambdas) {
    const auto b = FamilyTable::apostol_bernoulli(lambda, max_v + c.grid.k.hi + 1, c.grid.k.hi);
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (long v = c.grid.n.lo; v <= max_v; ++v) {
        Rational sum = 0;
        for (long m = 0; m <= v; ++m) {
          const Rational& s = s1.at(v, m);
          if (s.is_zero()) continue;
          if (c.variant == "general") {
            sum += s * Rational(factorial(m)) * b.at(m + k, k) * inv_factorial(m + k);
          } else {
            sum += s * b.at(m + 1, k) / Rational(m + 1);
          }
        }
        Rational rhs = Rational(2).pow(k) * lambda.pow(v) * sum;
        if (c.variant == "plus" && neg_one_pow(k + 1) < 0) rhs = -rhs;
        if (c.variant == "minus" && neg_one_pow(k) < 0) rhs = -rhs;
        if (!c.rec.expect(y_number(v, k, lambda), rhs, [&] {
              return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"v", str(v)}};
            }))
          return;
      }
    }
  }
}

// 11. Y_m^(k)(-lambda) = (-1)^{m+k} lambda^m sum_n E_n^(k)(lambda) S_1(m,n).
void check_s1_apostol_euler(Context& c) {
  const auto s1 = FamilyTable::stirling1(c.grid.n.hi);
  for (const auto& lambda : c.lambdas) {
    const auto e = FamilyTable::apostol_euler(lambda, c.grid.n.hi, c.grid.k.hi);
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (long m = c.grid.n.lo; m <= c.grid.n.hi; ++m) {
        Rational sum = 0;
        for (long n = 0; n <= m; ++n) sum += e.at(n, k) * s1.at(m, n);
        Rational rhs = lambda.pow(m) * sum;
        if (neg_one_pow(m + k) < 0) rhs = -rhs;
        if (!c.rec.expect(y_number(m, k, -lambda), rhs, [&] {
              return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"m", str(m)}};
            }))
          return;
      }
    }
  }
}

// 12. Y_{n+v}^(k) = (-1)^v (k)^(v) lambda^{2v} / 2^v Y_n^(k+v); v ranges over the k range.
void check_derivative_t_shift(Context& c) {
  const long max_v = c.grid.k.hi;
  for (const auto& lambda : c.lambdas) {
    const YTable y(lambda, c.grid.k.hi + max_v, c.grid.n.hi + max_v);
    for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
      for (long v = 0; v <= max_v; ++v) {
        Rational factor = rising_factorial(Rational(k), v) * lambda.pow(2 * v) / Rational(2).pow(v);
        if (neg_one_pow(v) < 0) factor = -factor;
        for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
          if (!c.rec.expect(y(n + v, k), factor * y(n, k + v), [&] {
                return ParamList{{"lambda", lambda.to_string()}, {"k", str(k)}, {"v", str(v)},
                                 {"n", str(n)}};
              }))
            return;
        }
      }
    }
  }
}

// 13. d/dlambda Y_n^(k) = -(k/2)(2 lambda n Y_{n-1}^(k+1) + Y_n^(k+1)), compared
// as canonical rational functions and then pointwise on the lambda grid.
void check_derivative_lambda(Context& c) {
  for (long k = c.grid.k.lo; k <= c.grid.k.hi; ++k) {
    for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
      const RationalFunction lhs = y_number_ratfun(n, k).derivative();
      RationalFunction inner = y_number_ratfun(n, k + 1);
      if (n >= 1) {
        inner += RationalFunction(Polynomial::monomial(Rational(2 * n), 1)) *
                 y_number_ratfun(n - 1, k + 1);
      }
      const RationalFunction rhs =
          RationalFunction(Polynomial(Rational(BigInt(-k), BigInt(2)))) * inner;
      if (!c.rec.expect(lhs, rhs, [&] {
            return ParamList{{"k", str(k)}, {"n", str(n)}, {"form", "rational-function"}};
          }))
        return;
      for (const auto& lambda : c.lambdas) {
        if (!c.rec.expect(lhs(lambda), rhs(lambda), [&] {
              return ParamList{{"k", str(k)}, {"n", str(n)}, {"lambda", lambda.to_string()}};
            }))
          return;
      }
    }
  }
}

// 14. Y_n^(k_1+...+k_m) as the multinomial convolution of Y^(k_i).
void check_multi_convolution(Context& c) {
  const long m_max = c.grid.m_max;
  const long max_order = c.grid.k.hi * m_max;
  for (const auto& lambda : c.lambdas) {
    const YTable y(lambda, max_order, c.grid.n.hi);
    // Y_v^(k) / v!, so that the multinomial weight becomes n! times a product.
    std::vector<std::vector<Rational>> scaled(static_cast<size_t>(c.grid.k.hi + 1));
    for (long k = 0; k <= c.grid.k.hi; ++k) {
      for (long v = 0; v <= c.grid.n.hi; ++v) {
        scaled[static_cast<size_t>(k)].push_back(y(v, k) * inv_factorial(v));
      }
    }
    for (long m = 1; m <= m_max; ++m) {
      bool ok = true;
      for_each_tuple(c.grid.k, m, [&](const std::vector<long>& ks) {
        long total = 0;
        for (long k : ks) total += k;
        for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
          Rational sum = 0;
          for_each_composition(n, m, [&](const std::vector<long>& vs) {
            Rational prod = 1;
            for (size_t i = 0; i < vs.size(); ++i) {
              const Rational& f = scaled[static_cast<size_t>(ks[i])][static_cast<size_t>(vs[i])];
              if (f.is_zero()) return;
              prod *= f;
            }
            sum += prod;
          });
          sum *= Rational(factorial(n));
          if (!c.rec.expect(y(n, total), sum, [&] {
                return ParamList{{"lambda", lambda.to_string()}, {"m", str(m)},
                                 {"k", tuple_str(ks)}, {"n", str(n)}};
              })) {
            ok = false;
            return false;
          }
        }
        return true;
      });
      if (!ok) return;
    }
  }
}

BigInt rising_binomial(long k, long v) { return binomial(k + v - 1, v); }

// 15. C(k_1+...+k_m+n-1, n) = sum over compositions of prod C(k_i+v_i-1, v_i).
void check_vandermonde_multi(Context& c) {
  for (long m = 1; m <= c.grid.m_max; ++m) {
    bool ok = true;
    for_each_tuple(c.grid.k, m, [&](const std::vector<long>& ks) {
      long total = 0;
      for (long k : ks) total += k;
      for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
        BigInt sum = 0;
        for_each_composition(n, m, [&](const std::vector<long>& vs) {
          BigInt prod = 1;
          for (size_t i = 0; i < vs.size() && prod != 0; ++i) prod *= rising_binomial(ks[i], vs[i]);
          sum += prod;
        });
        if (!c.rec.expect(Rational(rising_binomial(total, n)), Rational(sum), [&] {
              return ParamList{{"m", str(m)}, {"k", tuple_str(ks)}, {"n", str(n)}};
            })) {
          ok = false;
          return false;
        }
      }
      return true;
    });
    if (!ok) return;
  }
}

// 16. m = 2 case.
void check_vandermonde_m2(Context& c) {
  for (long k1 = c.grid.k.lo; k1 <= c.grid.k.hi; ++k1) {
    for (long k2 = c.grid.k.lo; k2 <= c.grid.k.hi; ++k2) {
      for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
        BigInt sum = 0;
        for (long v = 0; v <= n; ++v) sum += binomial(k1 + v - 1, v) * binomial(k2 + n - v - 1, n - v);
        if (!c.rec.expect(Rational(binomial(k1 + k2 + n - 1, n)), Rational(sum), [&] {
              return ParamList{{"k1", str(k1)}, {"k2", str(k2)}, {"n", str(n)}};
            }))
          return;
      }
    }
  }
}

// 17. m = 3 case as a double sum.
void check_vandermonde_m3(Context& c) {
  const IntRange& kr = c.grid.k;
  for (long k1 = kr.lo; k1 <= kr.hi; ++k1) {
    for (long k2 = kr.lo; k2 <= kr.hi; ++k2) {
      for (long k3 = kr.lo; k3 <= kr.hi; ++k3) {
        for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
          BigInt sum = 0;
          for (long v2 = 0; v2 <= n; ++v2) {
            for (long v1 = 0; v1 <= n - v2; ++v1) {
              sum += binomial(k1 + v1 - 1, v1) * binomial(k2 + n - v1 - v2 - 1, n - v1 - v2) *
                     binomial(k3 + v2 - 1, v2);
            }
          }
          if (!c.rec.expect(Rational(binomial(k1 + k2 + k3 + n - 1, n)), Rational(sum), [&] {
                return ParamList{{"k1", str(k1)}, {"k2", str(k2)}, {"k3", str(k3)}, {"n", str(n)}};
              }))
            return;
        }
      }
    }
  }
}

BigInt shifted_sum(long n, long upper) {
  BigInt s = 0;
  for (long j = 0; j <= upper; ++j) s += binomial(n + j, j) * binomial(2 * n - j - 1, n - j);
  return s;
}

// 18. C(3n,n) = 3/2 sum_j C(n+j-1,j) C(2n-j-1,n-j), n >= 1.
void check_c3n_half(Context& c) {
  if (c.grid.n.lo < 1) {
    c.rec.notice("n = 0 skipped: the substitution k1 = k2 = n requires n >= 1");
  }
  for (long n = std::max(1L, c.grid.n.lo); n <= c.grid.n.hi; ++n) {
    BigInt s = 0;
    for (long j = 0; j <= n; ++j) s += binomial(n + j - 1, j) * binomial(2 * n - j - 1, n - j);
    if (!c.rec.expect(Rational(binomial(3 * n, n)), Rational(BigInt(3), BigInt(2)) * Rational(s),
                      [&] { return ParamList{{"n", str(n)}}; }))
      return;
  }
}

// 19. C(3n,n) = sum_{j=0}^{n} C(n+j,j) C(2n-j-1,n-j).
void check_c3n_shift(Context& c) {
  for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
    if (!c.rec.expect(Rational(binomial(3 * n, n)), Rational(shifted_sum(n, n)),
                      [&] { return ParamList{{"n", str(n)}}; }))
      return;
  }
}

// 20. C_n = (C(3n,n) - sum_{j<n} C(n+j,j) C(2n-j-1,n-j)) / (n+1).
void check_catalan_from_c3n(Context& c) {
  for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
    const Rational rhs = (Rational(binomial(3 * n, n)) - Rational(shifted_sum(n, n - 1))) / Rational(n + 1);
    if (!c.rec.expect(Rational(catalan(n)), rhs, [&] { return ParamList{{"n", str(n)}}; })) return;
  }
}

Rational simsek_sum(long n) {
  Rational s = 0;
  for (long j = n; j <= 2 * n; ++j) {
    const Rational term = Rational(binomial(2 * n, j)) / Rational(j + 1);
    s += neg_one_pow(n + j) < 0 ? -term : term;
  }
  return s;
}

// 21. C_n = (2n+1)/(n+1) sum_{j=n}^{2n} (-1)^{n+j} C(2n,j)/(j+1).
void check_simsek_catalan(Context& c) {
  for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
    const Rational rhs = Rational(2 * n + 1) / Rational(n + 1) * simsek_sum(n);
    if (!c.rec.expect(Rational(catalan(n)), rhs, [&] { return ParamList{{"n", str(n)}}; })) return;
  }
}

// 22. C(3n,n) = (2n+1) sum_{j=n}^{2n} (-1)^{n+j} C(2n,j)/(j+1) + sum_{j<n} C(n+j,j) C(2n-j-1,n-j).
void check_final_combinatorial(Context& c) {
  for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
    const Rational rhs = Rational(2 * n + 1) * simsek_sum(n) + Rational(shifted_sum(n, n - 1));
    if (!c.rec.expect(Rational(binomial(3 * n, n)), rhs, [&] { return ParamList{{"n", str(n)}}; }))
      return;
  }
}

// 23. V_n from its definition against the Catalan form.
void check_v_definition_vs_catalan(Context& c) {
  for (const auto& lambda : c.lambdas) {
    for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
      if (!c.rec.expect(v_number(n, lambda), v_number_catalan(n, lambda), [&] {
            return ParamList{{"lambda", lambda.to_string()}, {"n", str(n)}};
          }))
        return;
    }
  }
}

// 24. V_{n+1} = -((8n+4)/(n+2)) (lambda/(lambda-1))^2 V_n, in product form.
void check_v_ratio(Context& c) {
  for (const auto& lambda : c.lambdas) {
    const Rational q = lambda / (lambda - Rational(1));
    for (long n = c.grid.n.lo; n <= c.grid.n.hi; ++n) {
      const Rational rhs = -(Rational(8 * n + 4) / Rational(n + 2)) * q * q * v_number(n, lambda);
      if (!c.rec.expect(v_number(n + 1, lambda), rhs, [&] {
            return ParamList{{"lambda", lambda.to_string()}, {"n", str(n)}};
          }))
        return;
    }
  }
}

// 25. C(x+a, j) = sum_i C(x,i) C(a,j-i) for nonnegative integers x, a drawn from the n range.
void check_chu_vandermonde(Context& c) {
  for (long x = c.grid.n.lo; x <= c.grid.n.hi; ++x) {
    for (long a = c.grid.n.lo; a <= c.grid.n.hi; ++a) {
      for (long j = 0; j <= x + a + 1; ++j) {
        BigInt sum = 0;
        for (long i = 0; i <= j; ++i) sum += binomial(x, i) * binomial(a, j - i);
        if (!c.rec.expect(Rational(binomial(x + a, j)), Rational(sum), [&] {
              return ParamList{{"x", str(x)}, {"a", str(a)}, {"k", str(j)}};
            }))
          return;
      }
    }
  }
}

using CheckFn = void (*)(Context&);

struct CatalogEntry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> table = {
      {{"explicit-vs-series", "closed form of Y_n^(k) against the generating-function expansion", LambdaUse::y_family, {}}, check_explicit_vs_series},
      {{"recurrence-basic", "Y_n^(k) = lambda^2/(1-lambda) (n+k-1) Y_{n-1}^(k)", LambdaUse::y_family, {}}, check_recurrence_basic},
      {{"recurrence-new7", "sum_j (-1)^{k-j} (n)_j C(k,j) lambda^{2j} (1-lambda)^{k-j} Y_{n-j}^(k) = 0", LambdaUse::y_family, {}}, check_recurrence_new7},
      {{"poly-from-numbers", "Y_n^(k)(x;lambda) = sum_j C(n,j) lambda^{n-j} (x)_{n-j} Y_j^(k)(lambda)", LambdaUse::y_family, {}}, check_poly_from_numbers},
      {{"alt-convolution", "sum_j (-1)^j Y_j Y_{n-j} closed form", LambdaUse::y_family, {}}, check_alt_convolution},
      {{"plain-convolution", "sum_j Y_j Y_{n-j} closed form", LambdaUse::y_family, {}}, check_plain_convolution},
      {{"inverse-binomial-sury", "sum_j 1/C(n,j) = (n+1)/2^n sum_j 2^j/(j+1)", LambdaUse::none, {}}, check_inverse_binomial_sury},
      {{"inverse-binomial-alt", "sum_j (-1)^j/C(n,j) = (1+(-1)^n)(n+1)/(n+2)", LambdaUse::none, {}}, check_inverse_binomial_alt},
      {{"bernstein-relation", "sum_j (-1)^{k-j} (n)_j lambda^j B_j^k(lambda) Y_{n-j}^(k) = 0", LambdaUse::y_family, {}}, check_bernstein_relation},
      {{"s1-apostol-bernoulli", "Y_v^(k) = (-1)^{k+1} 2^k lambda^v sum_m S_1(v,m) B_{m+1}^(k)/(m+1)", LambdaUse::y_family, {"plus", "minus", "general"}}, check_s1_apostol_bernoulli},
      {{"s1-apostol-euler", "Y_m^(k)(-lambda) = (-1)^{m+k} lambda^m sum_n E_n^(k)(lambda) S_1(m,n)", LambdaUse::euler_shift, {}}, check_s1_apostol_euler},
      {{"derivative-t-shift", "Y_{n+v}^(k) = (-1)^v (k)^(v) lambda^{2v}/2^v Y_n^(k+v)", LambdaUse::y_family, {}}, check_derivative_t_shift},
      {{"derivative-lambda", "d/dlambda Y_n^(k) = -(k/2)(2 lambda n Y_{n-1}^(k+1) + Y_n^(k+1))", LambdaUse::y_family, {}}, check_derivative_lambda},
      {{"multi-convolution", "Y_n^(k_1+...+k_m) as a multinomial convolution", LambdaUse::y_family, {}}, check_multi_convolution},
      {{"vandermonde-multi", "C(k_1+...+k_m+n-1, n) as a convolution of C(k_i+v_i-1, v_i)", LambdaUse::none, {}}, check_vandermonde_multi},
      {{"vandermonde-m2", "C(k1+k2+n-1, n) = sum_v C(k1+v-1, v) C(k2+n-v-1, n-v)", LambdaUse::none, {}}, check_vandermonde_m2},
      {{"vandermonde-m3", "three-order Vandermonde convolution as a double sum", LambdaUse::none, {}}, check_vandermonde_m3},
      {{"c3n-half", "C(3n,n) = 3/2 sum_j C(n+j-1,j) C(2n-j-1,n-j)", LambdaUse::none, {}}, check_c3n_half},
      {{"c3n-shift", "C(3n,n) = sum_j C(n+j,j) C(2n-j-1,n-j)", LambdaUse::none, {}}, check_c3n_shift},
      {{"catalan-from-c3n", "C_n = (C(3n,n) - sum_{j<n} C(n+j,j) C(2n-j-1,n-j))/(n+1)", LambdaUse::none, {}}, check_catalan_from_c3n},
      {{"simsek-catalan", "C_n = (2n+1)/(n+1) sum_{j=n}^{2n} (-1)^{n+j} C(2n,j)/(j+1)", LambdaUse::none, {}}, check_simsek_catalan},
      {{"final-combinatorial", "C(3n,n) via the alternating Catalan sum and the shifted sum", LambdaUse::none, {}}, check_final_combinatorial},
      {{"v-definition-vs-catalan", "Y_n^(n+1)/(n+1)! = (-1)^n C_n 2^{n+1} lambda^{2n}/(lambda-1)^{2n+1}", LambdaUse::y_family, {}}, check_v_definition_vs_catalan},
      {{"v-ratio", "V_{n+1}/V_n = -((8n+4)/(n+2)) (lambda/(lambda-1))^2", LambdaUse::y_family, {}}, check_v_ratio},
      {{"chu-vandermonde", "C(x+a,k) = sum_j C(x,j) C(a,k-j)", LambdaUse::none, {}}, check_chu_vandermonde},
  };
  return table;
}

const CatalogEntry& find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw Error(ErrorKind::unknown_check, "unknown check '" + std::string(id) + "'");
}

std::optional<Rational> pole_of(LambdaUse use) {
  switch (use) {
    case LambdaUse::none: return std::nullopt;
    case LambdaUse::y_family: return Rational(1);
    case LambdaUse::euler_shift: return Rational(-1);
  }
  return std::nullopt;
}

std::string resolve_variant(const CheckInfo& info, std::string_view variant) {
  if (info.variants.empty()) {
    if (!variant.empty()) {
      throw Error(ErrorKind::domain, "check '" + std::string(info.id) + "' has no variants");
    }
    return {};
  }
  if (variant.empty()) return std::string(info.variants.front());
  for (auto v : info.variants) {
    if (v == variant) return std::string(v);
  }
  throw Error(ErrorKind::domain, "unknown variant '" + std::string(variant) + "' for check '" +
                                     std::string(info.id) + "'");
}

void validate_ranges(const ParameterGrid& grid) {
  if (grid.n.empty() || grid.n.lo < 0) throw Error(ErrorKind::domain, "n range must be a nonempty interval of nonnegative integers");
  if (grid.k.empty() || grid.k.lo < 0) throw Error(ErrorKind::domain, "k range must be a nonempty interval of nonnegative integers");
  if (grid.m_max < 1) throw Error(ErrorKind::domain, "m_max must be at least 1");
}

IdentityReport run(const CatalogEntry& entry, const ParameterGrid& grid, std::string_view variant,
                   bool lenient) {
  validate_ranges(grid);
  IdentityReport report;
  report.check_id = std::string(entry.info.id);
  report.variant = resolve_variant(entry.info, variant);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Rational> lambdas;
  std::vector<std::string> notices;
  const auto pole = pole_of(entry.info.lambda_use);
  for (const auto& l : grid.lambdas) {
    if (pole && l == *pole) {
      if (!lenient) {
        throw Error(ErrorKind::pole, "lambda = " + l.to_string() + " is a pole of check '" +
                                         report.check_id + "'");
      }
      notices.push_back("lambda = " + l.to_string() + " skipped: pole of this identity");
      continue;
    }
    lambdas.push_back(l);
  }
  report.notices = std::move(notices);

  if (grid.lambdas.empty()) {
    report.notices.push_back("empty lambda list: nothing evaluated");
  } else {
    Context ctx{grid, std::move(lambdas), report.variant, Recorder(report)};
    entry.fn(ctx);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

const std::vector<CheckInfo>& catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo& find_check(std::string_view id) { return find_entry(id).info; }

IdentityReport run_check(std::string_view id, const ParameterGrid& grid, std::string_view variant) {
  return run(find_entry(id), grid, variant, /*lenient=*/false);
}

IdentityReport run_check_lenient(std::string_view id, const ParameterGrid& grid,
                                 std::string_view variant) {
  return run(find_entry(id), grid, variant, /*lenient=*/true);
}

std::vector<IdentityReport> run_suite(const ParameterGrid& grid, bool parallel) {
  validate_ranges(grid);
  const auto& all = entries();
  std::vector<IdentityReport> reports(all.size());
  if (!parallel) {
    for (size_t i = 0; i < all.size(); ++i) reports[i] = run(all[i], grid, {}, true);
    return reports;
  }
  std::vector<std::exception_ptr> errors(all.size());
  std::atomic<size_t> next{0};
  const size_t workers =
      std::clamp<size_t>(std::thread::hardware_concurrency(), 1, all.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < all.size(); i = next++) {
        try {
          reports[i] = run(all[i], grid, {}, true);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

SignResolution resolve_sign_variant(const ParameterGrid& grid) {
  constexpr std::string_view id = "s1-apostol-bernoulli";
  SignResolution out;
  out.plus = run_check_lenient(id, grid, "plus");
  out.minus = run_check_lenient(id, grid, "minus");
  if (out.plus.passed != out.minus.passed) {
    out.holding_variant = out.plus.passed ? "plus" : "minus";
  }
  for (long k = grid.k.lo; k <= grid.k.hi; ++k) {
    ParameterGrid slice = grid;
    slice.k = {k, k};
    std::vector<std::string> holding;
    for (const char* v : {"plus", "minus"}) {
      if (run_check_lenient(id, slice, v).passed) holding.emplace_back(v);
    }
    out.per_order.emplace_back(k, std::move(holding));
  }
  return out;
}

}  // namespace ylab
