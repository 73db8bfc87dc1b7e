// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "padic_fixvec/characters.hpp"
#include "padic_fixvec/cosets.hpp"
#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/gl2_dims.hpp"
#include "padic_fixvec/global_bounds.hpp"
#include "padic_fixvec/representations.hpp"

using namespace padic_fixvec;

namespace {

// Wall-clock limits in seconds; 0 means none.
constexpr double kLimitCosets = 60.0;
constexpr double kLimitCharacters = 30.0;
constexpr double kLimitSupercuspidal = 5.0;
constexpr double kLimitGlobal = 30.0;

// Exact comparisons throughout: integer results must match with zero tolerance.
constexpr int kMaxListed = 5;

const std::vector<std::uint64_t> kGridQ{2, 3, 4, 5, 7};

struct Result {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::uint64_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

template <class A, class B>
std::string mismatch(const std::string& label, const A& got, const B& want) {
  std::ostringstream os;
  os << label << ": got " << got << ", expected " << want;
  return os.str();
}

Result criterion_cosets() {
  Result r;
  const Partition borel{1, 1};
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t m : {1u, 2u}) {
      const auto label = "(1,1) p=" + std::to_string(p) + " m=" + std::to_string(m);
      const BigInt expected = ipow(BigInt(p), m - 1) * (p + 1);
      const BigInt enumerated = parabolic_index_enumerated(borel, p, m);
      r.expect(enumerated == expected, mismatch(label + " enumerated", enumerated, expected));
      r.expect(parabolic_index_closed(borel, p, m) == expected,
               mismatch(label + " closed", parabolic_index_closed(borel, p, m), expected));
      if (p <= 3) {
        const BigInt canonical = parabolic_index_enumerated(borel, p, m, kDefaultEnumerationBudget,
                                                            CosetMethod::canonical_key);
        r.expect(canonical == expected, mismatch(label + " canonical keys", canonical, expected));
      }
    }
  }
  const Partition gl3{2, 1};
  r.expect(parabolic_index_enumerated(gl3, 2, 1) == 7,
           mismatch("(2,1) p=2 m=1 enumerated", parabolic_index_enumerated(gl3, 2, 1), 7));
  r.expect(parabolic_index_closed(gl3, 2, 1) == 7, mismatch("(2,1) p=2 m=1 closed", parabolic_index_closed(gl3, 2, 1), 7));
  r.expect(parabolic_index_enumerated(borel, 3, 2) == 12, "spot value (1,1) p=3 m=2 -> 12");
  return r;
}

Result criterion_characters() {
  Result r;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint32_t k = 0; k <= 4; ++k) {
      const auto label = "p=" + std::to_string(p) + " r=" + std::to_string(k);
      const auto dual = enumerate_unit_dual(p, k);
      const auto hist = conductor_histogram(dual, k);
      for (std::uint32_t i = 0; i <= k; ++i) {
        // (1, p-2, (p-1)^2, (p-1)^2 p, ...)
        const BigInt want = i == 0 ? BigInt(1) : i == 1 ? BigInt(p) - 2 : ipow(BigInt(p - 1), 2) * ipow(BigInt(p), i - 2);
        r.expect(BigInt(hist[i]) == want, mismatch(label + " |L_" + std::to_string(i) + "|", hist[i], want));
        r.expect(num_classes_exact(p, i) == want, mismatch(label + " closed |L_" + std::to_string(i) + "|", num_classes_exact(p, i), want));
      }
      const BigInt total = k == 0 ? BigInt(1) : BigInt(p - 1) * ipow(BigInt(p), k - 1);
      r.expect(BigInt(dual.size()) == total, mismatch(label + " total", dual.size(), total));
      r.expect(num_classes_upto(p, k) == total, mismatch(label + " upto", num_classes_upto(p, k), total));
    }
  }
  return r;
}

Result criterion_supercuspidal_identity() {
  Result r;
  for (auto q : kGridQ) {
    for (std::uint32_t s = 2; s <= 8; ++s) {
      for (std::uint32_t m = (s + 1) / 2; m <= 8; ++m) {
        const auto label = "q=" + std::to_string(q) + " s=" + std::to_string(s) + " m=" + std::to_string(m);
        const BigInt closed = dim_supercuspidal_minimal(q, s, m);
        const BigInt lattice = dim_supercuspidal_lattice(q, s, m);
        const std::uint64_t basis = for_each_kirillov_basis_element(q, s, 0, m, [](const KirillovBasisElement&) {});
        r.expect(closed == lattice, mismatch(label + " closed vs lattice", closed, lattice));
        r.expect(BigInt(basis) == lattice, mismatch(label + " basis count vs lattice", basis, lattice));
      }
    }
  }
  return r;
}

Result criterion_minimal_level() {
  Result r;
  r.expect(dim_supercuspidal_minimal(3, 2, 1) == 2, "spot value q=3 s=2 m=1 -> 2");
  r.expect(dim_supercuspidal_minimal(3, 3, 2) == 8, "spot value q=3 s=3 m=2 -> 8");
  for (auto q : kGridQ) {
    const BigInt bq(q);
    for (std::uint32_t s = 2; s <= 8; ++s) {
      const std::uint32_t m = (s + 1) / 2;
      const BigInt want = s % 2 == 0 ? (bq - 1) * ipow(bq, s / 2 - 1) : (bq + 1) * (bq - 1) * ipow(bq, s / 2 - 1);
      const BigInt got = dim_supercuspidal_minimal(q, s, m);
      r.expect(got == want, mismatch("q=" + std::to_string(q) + " s=" + std::to_string(s), got, want));
    }
  }
  return r;
}

std::string blocks_text(const std::vector<SquareIntegrableBlock>& blocks) {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += (i ? ",(" : "(") + std::to_string(blocks[i].n_block) + "," + std::to_string(blocks[i].conductor) + ")";
  }
  return out + "]";
}

void for_each_generic(std::uint32_t max_n, std::uint32_t max_c,
                      const std::function<void(const std::vector<SquareIntegrableBlock>&)>& visit) {
  std::vector<SquareIntegrableBlock> blocks;
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t used) {
    if (!blocks.empty()) visit(blocks);
    for (std::uint32_t n = 1; used + n <= max_n; ++n) {
      for (std::uint32_t c = 0; c <= max_c; ++c) {
        blocks.push_back({n, c});
        grow(used + n);
        blocks.pop_back();
      }
    }
  };
  grow(0);
}

Result criterion_equivalence() {
  Result r;
  std::uint64_t strict_violations = 0;
  std::vector<std::string> witnesses;
  for_each_generic(4, 8, [&](const std::vector<SquareIntegrableBlock>& blocks) {
    const GenericRepresentation rep(blocks);
    const auto label = blocks_text(blocks);
    for (std::uint32_t m = 0; m <= 6; ++m) {
      bool by_conductor = true, by_depth = true;
      for (const auto& b : blocks) {
        by_conductor = by_conductor && b.conductor <= m * b.n_block;
        if (m >= 1) by_depth = by_depth && has_fixed_vector_depth(depth_esi(b.n_block, b.conductor), m);
        r.expect(has_fixed_vector_esi(b.n_block, b.conductor, m) == (b.conductor <= m * b.n_block),
                 label + " esi criterion m=" + std::to_string(m));
      }
      const bool fixed = has_fixed_vector(rep, m);
      r.expect(fixed == by_conductor, label + " conductor criterion m=" + std::to_string(m));
      if (m >= 1) r.expect(fixed == by_depth, label + " depth criterion m=" + std::to_string(m));
    }
    const std::uint32_t ml = min_level(rep);
    std::uint32_t brute = 0;
    while (!has_fixed_vector(rep, brute)) ++brute;
    r.expect(ml == brute, mismatch(label + " min_level", ml, brute));
    if (ml >= 1) r.expect(!has_fixed_vector(rep, ml - 1), label + " fixed below min_level");

    const std::uint64_t c = conductor(rep);
    const std::uint64_t n = rep.n();
    if (ml == 0) return;
    if (blocks.size() == 1) {
      r.expect((ml - 1) * n < c && c <= ml * n, label + " esi window ((m-1)n, mn]");
      r.expect(conductor_window(rep.n(), ml, true).contains(static_cast<std::int64_t>(c)), label + " esi window object");
    }
    r.expect(ml <= c && c <= ml * n, label + " weak window [m, mn]");
    if (!(ml < c)) {
      ++strict_violations;
      if (witnesses.size() < kMaxListed) {
        witnesses.push_back("blocks " + label + ": min level " + std::to_string(ml) + ", c = " + std::to_string(c) +
                            " not in " + conductor_window(rep.n(), ml).to_string());
      }
    }
  });
  if (strict_violations > 0) {
    r.notes.push_back("strict window (m, mn] fails for " + std::to_string(strict_violations) + " generic reps");
    for (auto& w : witnesses) r.notes.push_back(w);
  }
  return r;
}

Result criterion_exact_sequence() {
  Result r;
  for (auto q : kGridQ) {
    for (std::uint32_t c = 0; c <= 6; ++c) {
      for (std::uint32_t k = 1; k <= 6; ++k) {
        const BigInt diff = dim_principal_series(q, c, c, k) - dim_steinberg_twist(q, c, k);
        r.expect(diff == delta_leq(c, k), mismatch("q=" + std::to_string(q) + " c=" + std::to_string(c) +
                                                       " r=" + std::to_string(k),
                                                   diff, delta_leq(c, k)));
      }
    }
  }
  return r;
}

Result criterion_global() {
  Result r;
  const auto spot = conductor_bounds(2, 12);
  r.expect(spot.lower == 6 && spot.upper == 144, "conductor_bounds(2, 12) = (" + to_string(spot.lower) + ", " +
                                                     to_string(spot.upper) + "), expected (6, 144)");
  std::mt19937_64 rng(7);
  for (std::uint64_t N = 1; N <= 10'000; ++N) {
    const auto level = factorize(N);
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const auto bounds = conductor_bounds(n, N);
      r.expect(bounds.lower <= N && N <= bounds.upper, "N=" + std::to_string(N) + " lower <= N <= upper");
      std::vector<LocalWindow> windows;
      for (const auto& pe : level.factorization) windows.push_back(local_conductor_window(n, pe.e));
      auto check_product = [&](const std::vector<std::uint64_t>& exps) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < exps.size(); ++i) prod *= ipow(BigInt(level.factorization[i].p), exps[i]);
        r.expect(bounds.lower <= prod && prod <= bounds.upper,
                 "N=" + std::to_string(N) + " n=" + std::to_string(n) + " product " + to_string(prod));
      };
      const std::size_t k = windows.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::uint64_t> exps(k);
        for (std::size_t i = 0; i < k; ++i) exps[i] = (mask >> i) & 1 ? windows[i].upper : windows[i].lower;
        check_product(exps);
      }
      for (int sample = 0; sample < 2 && k > 0; ++sample) {
        std::vector<std::uint64_t> exps(k);
        for (std::size_t i = 0; i < k; ++i) {
          exps[i] = windows[i].lower + rng() % (windows[i].upper - windows[i].lower + 1);
        }
        check_product(exps);
      }
    }
  }
  return r;
}

Result criterion_monotonicity() {
  Result r;
  std::vector<GL2Representation> reps;
  for (std::uint32_t s = 2; s <= 8; ++s)
    for (std::uint32_t c = 0; c <= 6; ++c) reps.push_back(Supercuspidal{s, c});
  for (std::uint32_t c1 = 0; c1 <= 6; ++c1)
    for (std::uint32_t c2 = 0; c2 <= 6; ++c2) reps.push_back(PrincipalSeries{c1, c2});
  for (std::uint32_t c = 0; c <= 6; ++c) reps.push_back(SteinbergTwist{c});
  for (auto q : kGridQ) {
    for (const auto& rep : reps) {
      BigInt previous = dim_gl2(rep, q, 0);
      for (std::uint32_t m = 1; m <= 8; ++m) {
        const BigInt current = dim_gl2(rep, q, m);
        r.expect(previous <= current, "q=" + std::to_string(q) + " conductor " + std::to_string(conductor_gl2(rep)) +
                                          " drops at m=" + std::to_string(m));
        previous = current;
      }
    }
  }
  return r;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coset coefficient", kLimitCosets, criterion_cosets},
      {2, "character class counts", kLimitCharacters, criterion_characters},
      {3, "supercuspidal dimension identity", kLimitSupercuspidal, criterion_supercuspidal_identity},
      {4, "minimal-level values", 0, criterion_minimal_level},
      {5, "fixed-vector criteria equivalence", 0, criterion_equivalence},
      {6, "exact-sequence identity", 0, criterion_exact_sequence},
      {7, "global conductor bounds", kLimitGlobal, criterion_global},
      {8, "level monotonicity", 0, criterion_monotonicity},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = result.failures.empty();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      pass = false;
      result.failures.push_back("runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
    }
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << result.cases
              << " cases, " << seconds << " s";
    if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << " s";
    std::cout << ")\n";
    for (std::size_t i = 0; i < result.failures.size() && i < kMaxListed; ++i) {
      std::cout << "      failed: " << result.failures[i] << "\n";
    }
    if (result.failures.size() > kMaxListed) {
      std::cout << "      ... " << result.failures.size() - kMaxListed << " more\n";
    }
    for (const auto& n : result.notes) std::cout << "      NOTE: " << n << "\n";
  }
  return all ? 0 : 1;
}
