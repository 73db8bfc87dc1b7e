#include "padic_fixvec/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "padic_fixvec/cosets.hpp"
#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/gl2_dims.hpp"
#include "padic_fixvec/global_bounds.hpp"
#include "padic_fixvec/representations.hpp"

namespace padic_fixvec {

namespace {

class Check {
 public:
  Check(std::string name, const VerifyOptions& options) : options_(options) { outcome_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++outcome_.cases;
    if (ok) return;
    ++failed_;
    if (outcome_.failures.size() < options_.max_reported_failures) outcome_.failures.push_back(describe());
  }

  void note(std::string text) { outcome_.notes.push_back(std::move(text)); }
  void observe() { ++outcome_.cases; }
  void skip(std::string text) { outcome_.skipped.push_back(std::move(text)); }

  CheckOutcome finish() {
    if (failed_ > outcome_.failures.size()) {
      outcome_.failures.push_back("... " + std::to_string(failed_ - outcome_.failures.size()) +
                                  " further failures not listed");
    }
    return std::move(outcome_);
  }

 private:
  const VerifyOptions& options_;
  CheckOutcome outcome_;
  std::size_t failed_ = 0;
};

std::string str(const BigInt& v) { return v.str(); }

std::string partition_str(std::span<const std::size_t> partition) {
  std::string s = "(";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(partition[i]);
  }
  return s + ")";
}

std::string blocks_str(const GenericRepresentation& rep) {
  std::string s = "[";
  for (std::size_t i = 0; i < rep.blocks().size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(rep.blocks()[i].n_block) + "," + std::to_string(rep.blocks()[i].conductor) + ")";
  }
  return s + "]";
}

std::vector<Partition> compositions(std::size_t n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(std::size_t)> rec = [&](std::size_t rest) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = 1; part <= rest; ++part) {
      current.push_back(part);
      rec(rest - part);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

// Every generic representation with total size <= max_n and block conductors <= max_c.
void for_each_rep(std::uint32_t max_n, std::uint32_t max_c, const std::function<void(const GenericRepresentation&)>& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& shape : compositions(n)) {
      std::vector<std::uint32_t> cond(shape.size(), 0);
      while (true) {
        std::vector<SquareIntegrableBlock> blocks;
        for (std::size_t i = 0; i < shape.size(); ++i) {
          blocks.push_back({static_cast<std::uint32_t>(shape[i]), cond[i]});
        }
        visit(GenericRepresentation(std::move(blocks)));
        std::size_t k = cond.size();
        while (k > 0 && ++cond[k - 1] > max_c) cond[--k] = 0;
        if (k == 0) break;
      }
    }
  }
}

const std::vector<std::uint64_t> kPrimePowerGrid{2, 3, 4, 5, 7};

// ----------------------------------------------------------------------------
// cosets

CheckOutcome check_gl_enumeration(const VerifyOptions& opt) {
  Check c("gl_enumeration_count", opt);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t p : {2, 3, 5}) {
      for (std::uint32_t m = 1; m <= 2; ++m) {
        const std::string where = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " m=" + std::to_string(m);
        try {
          std::uint64_t count = 0;
          for_each_gl(n, p, m, [&](const MatrixModPM&) { ++count; }, opt.budget);
          const BigInt expected = gl_order(n, p, m);
          c.expect(BigInt(count) == expected,
                   [&] { return where + ": enumerated " + std::to_string(count) + " != gl_order " + str(expected); });
        } catch (const BudgetExceeded& e) {
          c.skip(where + ": " + e.what());
        }
      }
    }
  }
  return c.finish();
}

CheckOutcome check_parabolic_enumeration(const VerifyOptions& opt) {
  Check c("parabolic_enumeration_count", opt);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& part : compositions(n)) {
      for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint32_t m = 1; m <= 2; ++m) {
          const std::string where = partition_str(part) + " p=" + std::to_string(p) + " m=" + std::to_string(m);
          try {
            // Full-matrix enumeration filtered by membership: independent of enumerate_parabolic.
            std::uint64_t count = 0;
            for_each_gl(n, p, m, [&](const MatrixModPM& g) { count += in_parabolic(g, part) ? 1 : 0; }, opt.budget);
            const BigInt expected = parabolic_order(part, p, m);
            c.expect(BigInt(count) == expected, [&] {
              return where + ": enumerated " + std::to_string(count) + " != parabolic_order " + str(expected);
            });
          } catch (const BudgetExceeded& e) {
            c.skip(where + ": " + e.what());
          }
        }
      }
    }
  }
  return c.finish();
}

CheckOutcome check_gl_level_ratio(const VerifyOptions& opt) {
  Check c("gl_order_level_ratio", opt);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      for (std::uint32_t m = 1; m <= 5; ++m) {
        const BigInt lo = gl_order(n, q, m), hi = gl_order(n, q, m + 1);
        const BigInt step = ipow(BigInt(q), n * n);
        c.expect(hi == lo * step, [&] {
          return "n=" + std::to_string(n) + " q=" + std::to_string(q) + " m=" + std::to_string(m) +
                 ": ratio is not q^{n^2}";
        });
      }
    }
  }
  return c.finish();
}

CheckOutcome check_product_closure(const VerifyOptions& opt) {
  Check c("invertibility_product_closure", opt);
  std::mt19937_64 rng(20240101);
  for (std::size_t n : {2, 3, 4}) {
    for (auto [p, m] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {2, 3}, {3, 2}, {5, 1}, {5, 2}, {7, 2}}) {
      for (int trial = 0; trial < 200; ++trial) {
        MatrixModPM a(n, p, m), b(n, p, m);
        std::uniform_int_distribution<std::uint64_t> entry(0, a.modulus() - 1);
        for (auto& e : a.mutable_entries()) e = entry(rng);
        for (auto& e : b.mutable_entries()) e = entry(rng);
        const bool lhs = is_invertible(a * b);
        const bool rhs = is_invertible(a) && is_invertible(b);
        c.expect(lhs == rhs, [&] {
          return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " m=" + std::to_string(m) +
                 ": invertibility of the product disagrees";
        });
        const std::uint64_t det_lhs = (a * b).determinant();
        const std::uint64_t det_rhs = a.determinant() * b.determinant() % a.modulus();
        c.expect(det_lhs == det_rhs, [&] { return "determinant is not multiplicative at n=" + std::to_string(n); });
      }
    }
  }
  return c.finish();
}

CheckOutcome check_index_closed_vs_enumerated(const VerifyOptions& opt) {
  Check c("index_closed_vs_enumerated", opt);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& part : compositions(n)) {
      for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint32_t m = 1; m <= 2; ++m) {
          const std::string where = partition_str(part) + " p=" + std::to_string(p) + " m=" + std::to_string(m);
          const BigInt closed = parabolic_index_closed(part, p, m);
          try {
            const std::uint64_t counted = parabolic_index_enumerated(part, p, m, opt.budget);
            c.expect(BigInt(counted) == closed, [&] {
              return where + ": enumerated " + std::to_string(counted) + " != closed " + str(closed);
            });
          } catch (const BudgetExceeded& e) {
            c.skip(where + ": " + e.what());
          }
          const bool borel = part.size() == 2 && part[0] == 1 && part[1] == 1;
          if (!borel) continue;
          try {
            const std::uint64_t generic =
                parabolic_index_enumerated(part, p, m, opt.budget, CosetMethod::canonical_key);
            c.expect(BigInt(generic) == closed, [&] {
              return where + ": canonical-key count " + std::to_string(generic) + " != closed " + str(closed);
            });
          } catch (const BudgetExceeded& e) {
            c.skip(where + " (canonical key): " + e.what());
          }
        }
      }
    }
  }
  return c.finish();
}

CheckOutcome check_borel_index_formula(const VerifyOptions& opt) {
  Check c("borel_index_formula", opt);
  const Partition borel{1, 1};
  for (std::uint64_t q : kPrimePowerGrid) {
    for (std::uint32_t r = 1; r <= 6; ++r) {
      const BigInt expected = ipow(BigInt(q), r - 1) * (q + 1);
      const BigInt got = parabolic_index_closed(borel, q, r);
      c.expect(got == expected, [&] {
        return "q=" + std::to_string(q) + " r=" + std::to_string(r) + ": " + str(got) + " != q^{r-1}(q+1) = " + str(expected);
      });
    }
  }
  return c.finish();
}

CheckOutcome check_refinement_divisibility(const VerifyOptions& opt) {
  Check c("index_refinement_divisibility", opt);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& coarse : compositions(n)) {
      for (std::size_t i = 0; i < coarse.size(); ++i) {
        for (std::size_t left = 1; left < coarse[i]; ++left) {
          Partition fine(coarse.begin(), coarse.begin() + static_cast<std::ptrdiff_t>(i));
          fine.push_back(left);
          fine.push_back(coarse[i] - left);
          fine.insert(fine.end(), coarse.begin() + static_cast<std::ptrdiff_t>(i) + 1, coarse.end());
          for (std::uint64_t q : {2, 3, 4, 5}) {
            for (std::uint32_t m = 1; m <= 3; ++m) {
              const BigInt a = parabolic_index_closed(fine, q, m);
              const BigInt b = parabolic_index_closed(coarse, q, m);
              c.expect(a % b == 0, [&] {
                return partition_str(fine) + " vs " + partition_str(coarse) + " q=" + std::to_string(q) +
                       " m=" + std::to_string(m) + ": " + str(a) + " not divisible by " + str(b);
              });
            }
          }
        }
      }
    }
  }
  return c.finish();
}

SuiteReport suite_cosets(const VerifyOptions& opt) {
  return {"cosets",
          {check_gl_enumeration(opt), check_parabolic_enumeration(opt), check_gl_level_ratio(opt),
           check_product_closure(opt), check_index_closed_vs_enumerated(opt), check_borel_index_formula(opt),
           check_refinement_divisibility(opt)}};
}

// ----------------------------------------------------------------------------
// characters

std::uint64_t count_units_by_gcd(std::uint64_t p, std::uint32_t r) {
  std::uint64_t mod = 1;
  for (std::uint32_t i = 0; i < r; ++i) mod *= p;
  std::uint64_t units = 0;
  for (std::uint64_t x = 0; x < mod; ++x) units += std::gcd(x, mod) == 1 ? 1 : 0;
  return mod == 1 ? 1 : units;
}

SuiteReport suite_characters(const VerifyOptions& opt) {
  Check hist("dual_conductor_histogram", opt);
  Check units("upto_vs_unit_count", opt);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint32_t r = 0; r <= 4; ++r) {
      const std::string where = "p=" + std::to_string(p) + " r=" + std::to_string(r);
      try {
        const auto dual = enumerate_unit_dual(p, r, opt.dual_budget);
        const auto h = conductor_histogram(dual, r);
        for (std::uint32_t i = 0; i <= r; ++i) {
          const BigInt expected = num_classes_exact(p, i);
          hist.expect(BigInt(h[i]) == expected, [&] {
            return where + " conductor " + std::to_string(i) + ": " + std::to_string(h[i]) + " characters, |L_i| = " +
                   str(expected);
          });
        }
        const BigInt total = r == 0 ? BigInt(1) : BigInt(p - 1) * ipow(BigInt(p), r - 1);
        hist.expect(BigInt(dual.size()) == total,
                    [&] { return where + ": dual has " + std::to_string(dual.size()) + " characters"; });
      } catch (const BudgetExceeded& e) {
        hist.skip(where + ": " + e.what());
      }
      const std::uint64_t u = count_units_by_gcd(p, r);
      units.expect(num_classes_upto(p, r) == u,
                   [&] { return where + ": |L_{<=r}| != |(Z/p^r)^x| = " + std::to_string(u); });
    }
  }

  Check closed("upto_closed_form", opt);
  for (std::uint64_t q = 2; q <= 9; ++q) {
    for (std::uint32_t r = 1; r <= 8; ++r) {
      BigInt sum = 0;
      for (std::uint32_t i = 0; i <= r; ++i) sum += num_classes_exact(q, i);
      const BigInt upto = num_classes_upto(q, r);
      const BigInt expected = BigInt(q - 1) * ipow(BigInt(q), r - 1);
      closed.expect(sum == upto && upto == expected, [&] {
        return "q=" + std::to_string(q) + " r=" + std::to_string(r) + ": " + str(upto) + " != (q-1)q^{r-1} = " + str(expected);
      });
    }
  }
  return {"characters", {hist.finish(), units.finish(), closed.finish()}};
}

// ----------------------------------------------------------------------------
// supercuspidal and the rest of GL_2

std::string qsm(std::uint64_t q, std::uint32_t s, std::uint32_t m) {
  return "q=" + std::to_string(q) + " s=" + std::to_string(s) + " m=" + std::to_string(m);
}

SuiteReport suite_supercuspidal(const VerifyOptions& opt) {
  Check closed("closed_form_vs_lattice", opt);
  Check basis("kirillov_basis_count", opt);
  Check minimal("minimal_level_values", opt);
  Check twist("twist_invariance", opt);
  for (std::uint64_t q : kPrimePowerGrid) {
    for (std::uint32_t s = 2; s <= 8; ++s) {
      for (std::uint32_t m = (s + 1) / 2; m <= 8; ++m) {
        const BigInt a = dim_supercuspidal_minimal(q, s, m);
        const BigInt b = dim_supercuspidal_lattice(q, s, m);
        closed.expect(a == b, [&] { return qsm(q, s, m) + ": closed " + str(a) + " != lattice " + str(b); });
        const std::uint64_t count = for_each_kirillov_basis_element(q, s, 0, m, [](const KirillovBasisElement&) {});
        basis.expect(BigInt(count) == b,
                     [&] { return qsm(q, s, m) + ": basis has " + std::to_string(count) + " elements, lattice " + str(b); });
        for (std::uint32_t c_chi = 0; c_chi <= 6; ++c_chi) {
          if (twisted_conductor_minimal(s, c_chi) > 2 * m) continue;
          const BigInt t = dim_supercuspidal(q, s, c_chi, m);
          twist.expect(t == a, [&] { return qsm(q, s, m) + " c_chi=" + std::to_string(c_chi) + ": " + str(t) + " != " + str(a); });
        }
      }
      const std::uint32_t r = s / 2;
      const BigInt qq(q);
      if (s % 2 == 0) {
        const BigInt got = dim_supercuspidal_minimal(q, s, r);
        const BigInt expected = (qq - 1) * ipow(qq, r - 1);
        minimal.expect(got == expected, [&] { return qsm(q, s, r) + ": " + str(got) + " != (q-1)q^{r-1} = " + str(expected); });
      } else {
        const BigInt got = dim_supercuspidal_minimal(q, s, r + 1);
        const BigInt expected = (qq + 1) * (qq - 1) * ipow(qq, r - 1);
        minimal.expect(got == expected,
                       [&] { return qsm(q, s, r + 1) + ": " + str(got) + " != (q+1)(q-1)q^{r-1} = " + str(expected); });
      }
    }
  }

  Check exact("exact_sequence_identity", opt);
  for (std::uint64_t q : kPrimePowerGrid) {
    for (std::uint32_t cc = 0; cc <= 6; ++cc) {
      for (std::uint32_t r = 0; r <= 6; ++r) {
        const BigInt ps = dim_gl2(PrincipalSeries{cc, cc}, q, r);
        const BigInt st = dim_gl2(SteinbergTwist{cc}, q, r);
        exact.expect(ps == st + delta_leq(cc, r), [&] {
          return "q=" + std::to_string(q) + " c=" + std::to_string(cc) + " r=" + std::to_string(r) + ": " + str(ps) +
                 " != " + str(st) + " + d(c<=r)";
        });
      }
    }
  }

  std::vector<GL2Representation> reps;
  for (std::uint32_t s = 2; s <= 8; ++s) {
    for (std::uint32_t cc = 0; cc <= 6; ++cc) reps.emplace_back(Supercuspidal{s, cc});
  }
  for (std::uint32_t c1 = 0; c1 <= 6; ++c1) {
    reps.emplace_back(SteinbergTwist{c1});
    for (std::uint32_t c2 = 0; c2 <= 6; ++c2) reps.emplace_back(PrincipalSeries{c1, c2});
  }
  Check mono("level_monotonicity", opt);
  Check vanish("vanishing_threshold", opt);
  for (std::uint64_t q : kPrimePowerGrid) {
    for (const auto& rep : reps) {
      const std::uint32_t cond = conductor_gl2(rep);
      for (std::uint32_t m = 0; m <= 8; ++m) {
        const BigInt lo = dim_gl2(rep, q, m), hi = dim_gl2(rep, q, m + 1);
        mono.expect(lo <= hi, [&] {
          return "q=" + std::to_string(q) + " conductor " + std::to_string(cond) + " m=" + std::to_string(m) + ": dim drops " +
                 str(lo) + " -> " + str(hi);
        });
        if (std::holds_alternative<PrincipalSeries>(rep)) continue;
        // Square integrable on GL_2: nonzero exactly when c(pi) <= 2m.
        vanish.expect((lo > 0) == (cond <= 2 * m), [&] {
          return "q=" + std::to_string(q) + " conductor " + std::to_string(cond) + " m=" + std::to_string(m) + ": dim " + str(lo);
        });
      }
    }
  }

  Check oracle("principal_series_oracle_consistency", opt);
  const Partition borel{1, 1};
  const std::vector<BigInt> ones{1, 1};
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      const BigInt ps = dim_principal_series(p, 0, 0, r);
      const BigInt induced = dim_induced_general(borel, p, r, ones);
      oracle.expect(ps == induced, [&] { return "p=" + std::to_string(p) + " r=" + std::to_string(r) + ": induced formula differs"; });
      try {
        const std::uint64_t counted = parabolic_index_enumerated(borel, p, r, opt.budget);
        oracle.expect(ps == counted, [&] {
          return "p=" + std::to_string(p) + " r=" + std::to_string(r) + ": " + str(ps) + " != enumerated " + std::to_string(counted);
        });
      } catch (const BudgetExceeded& e) {
        oracle.skip("p=" + std::to_string(p) + " r=" + std::to_string(r) + ": " + e.what());
      }
    }
  }

  return {"supercuspidal",
          {closed.finish(), basis.finish(), minimal.finish(), twist.finish(), exact.finish(), mono.finish(),
           vanish.finish(), oracle.finish()}};
}

// ----------------------------------------------------------------------------
// windows: fixed-vector criteria, conductor windows, global bounds

SuiteReport suite_windows(const VerifyOptions& opt) {
  Check equiv("conductor_depth_equivalence", opt);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t cc = 0; cc <= 20; ++cc) {
      for (std::uint32_t m = 1; m <= 6; ++m) {
        const bool a = has_fixed_vector_esi(n, cc, m);
        const bool b = has_fixed_vector_depth(depth_esi(n, cc), m);
        equiv.expect(a == b, [&] {
          return "n=" + std::to_string(n) + " c=" + std::to_string(cc) + " m=" + std::to_string(m) + ": criteria disagree";
        });
      }
    }
  }

  Check gl2depth("depth_gl2_agreement", opt);
  for (std::uint32_t cc = 2; cc <= 40; ++cc) {
    gl2depth.expect(depth_esi(2, cc) == depth_supercuspidal_gl2(cc), [&] { return "c=" + std::to_string(cc); });
  }

  Check level("min_level_bruteforce", opt);
  Check consistent("fixed_vector_criteria_consistency", opt);
  Check esi("square_integrable_window", opt);
  Check weak("generic_weak_window", opt);
  Check strict("generic_strict_window", opt);
  std::uint64_t strict_violations = 0;
  for_each_rep(4, 8, [&](const GenericRepresentation& rep) {
    const std::uint32_t ml = min_level(rep);
    std::uint32_t brute = 0;
    while (!has_fixed_vector(rep, brute)) ++brute;
    level.expect(brute == ml, [&] {
      return blocks_str(rep) + ": min_level " + std::to_string(ml) + ", brute force " + std::to_string(brute);
    });
    for (std::uint32_t m = 0; m <= 6; ++m) {
      const bool fixed = has_fixed_vector(rep, m);
      bool by_depth = true;
      bool by_blocks = true;
      for (const auto& b : rep.blocks()) {
        by_blocks = by_blocks && has_fixed_vector_esi(b.n_block, b.conductor, m);
        by_depth = by_depth && (m == 0 ? b.conductor == 0 : has_fixed_vector_depth(depth_esi(b.n_block, b.conductor), m));
      }
      consistent.expect(fixed == by_blocks && fixed == by_depth && fixed == (m >= ml),
                        [&] { return blocks_str(rep) + " m=" + std::to_string(m) + ": criteria disagree"; });
    }
    const auto c = static_cast<std::int64_t>(conductor(rep));
    if (ml == 0) {
      weak.expect(conductor_window(rep.n(), 0).contains(c), [&] { return blocks_str(rep) + ": level 0 but c != 0"; });
      return;
    }
    if (rep.blocks().size() == 1) {
      const auto w = conductor_window(rep.n(), ml, true);
      esi.expect(w.contains(c), [&] { return blocks_str(rep) + ": c=" + std::to_string(c) + " outside " + w.to_string(); });
      return;
    }
    weak.expect(ml <= c && c <= static_cast<std::int64_t>(ml) * rep.n(), [&] {
      return blocks_str(rep) + ": c=" + std::to_string(c) + " outside [" + std::to_string(ml) + ", " +
             std::to_string(ml * rep.n()) + "]";
    });
    const auto w = conductor_window(rep.n(), ml, false);
    strict.observe();
    if (!w.contains(c)) {
      ++strict_violations;
      if (strict_violations <= 10) {
        strict.note(blocks_str(rep) + ": min level " + std::to_string(ml) + ", c(pi) = " + std::to_string(c) +
                    " not in " + w.to_string());
      }
    }
  });
  if (strict_violations > 0) {
    strict.note(std::to_string(strict_violations) +
                " multi-block representations have c(pi) = m, outside the strict window (m, mn] (additive conductor)");
  }

  Check bounds("global_window_bounds_consistency", opt);
  std::mt19937_64 rng(7);
  for (std::uint64_t N = 1; N <= 10'000; ++N) {
    const GlobalLevel level_n = factorize(N);
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const BoundsResult b = conductor_bounds(n, N);
      bounds.expect(b.lower <= N && BigInt(N) <= b.upper, [&] {
        return "N=" + std::to_string(N) + " n=" + std::to_string(n) + ": N outside [" + str(b.lower) + ", " + str(b.upper) + "]";
      });
      std::vector<LocalWindow> windows;
      for (const auto& pe : level_n.factorization) windows.push_back(local_conductor_window(n, pe.e));
      const std::size_t k = windows.size();
      auto check_product = [&](const std::vector<std::uint64_t>& exps) {
        BigInt product = 1;
        for (std::size_t i = 0; i < k; ++i) product *= ipow(BigInt(level_n.factorization[i].p), exps[i]);
        bounds.expect(b.lower <= product && product <= b.upper, [&] {
          return "N=" + std::to_string(N) + " n=" + std::to_string(n) + ": local product " + str(product) + " outside [" +
                 str(b.lower) + ", " + str(b.upper) + "]";
        });
      };
      std::vector<std::uint64_t> exps(k);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        for (std::size_t i = 0; i < k; ++i) exps[i] = (mask >> i) & 1U ? windows[i].upper : windows[i].lower;
        check_product(exps);
      }
      if (k == 0) continue;
      for (int sample = 0; sample < 2; ++sample) {
        for (std::size_t i = 0; i < k; ++i) {
          std::uniform_int_distribution<std::uint64_t> pick(windows[i].lower, windows[i].upper);
          exps[i] = pick(rng);
        }
        check_product(exps);
      }
    }
    const BoundsResult one = conductor_bounds(1, N);
    bounds.expect(one.upper == N && one.lower <= N, [&] { return "N=" + std::to_string(N) + ": n=1 bounds"; });
  }
  const BoundsResult spot = conductor_bounds(2, 12);
  bounds.expect(spot.lower == 6 && spot.upper == 144,
                [&] { return "conductor_bounds(2, 12) = (" + str(spot.lower) + ", " + str(spot.upper) + ")"; });

  return {"windows",
          {equiv.finish(), gl2depth.finish(), level.finish(), consistent.finish(), esi.finish(), weak.finish(),
           strict.finish(), bounds.finish()}};
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cosets", "characters", "supercuspidal", "windows"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "cosets") return suite_cosets(options);
  if (name == "characters") return suite_characters(options);
  if (name == "supercuspidal") return suite_supercuspidal(options);
  if (name == "windows") return suite_windows(options);
  throw InvalidParameter("unknown verification suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_verification(std::string_view which, const VerifyOptions& options) {
  std::vector<SuiteReport> reports;
  if (which == "all") {
    for (const auto& name : suite_names()) reports.push_back(run_suite(name, options));
  } else {
    reports.push_back(run_suite(which, options));
  }
  return reports;
}

}  // namespace padic_fixvec
