// Acceptance run: one PASS/FAIL line per criterion, details indented below a FAIL.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "altsum/altsum.hpp"

using namespace altsum;

namespace {

// Tolerances.
constexpr Real kTolC = 2e-6L, kTolK = 1e-6L, kTolK1 = 2e-6L, kTolQprod = 1e-6L, kTolDabelian = 2e-6L,
               kTolCsigma = 1e-6L, kTolARelative = 1e-10L;
constexpr Real kTolDirichlet = 1e-5L;
constexpr std::uint64_t kDirichletTerms = 1000000;
constexpr Real kTolRatio = 1e-2L, kTolLogResidual = 1e-2L, kTauBound = 1.0L, kTolSigmaQ = 1e-12L;
constexpr std::uint64_t kRatioX = 1000000;

struct Criterion {
  std::ostringstream detail;
  bool ok = true;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    " << what << '\n';
    }
  }
};

std::string num(Real v, int digits = 12) { return format_real(v, digits); }

// 1. exact identities
void exact_identities(Criterion& c) {
  for (const auto& f : all_descriptors()) c.check(verify_convolution(f, 100000), "convolution identity " + f.id());
  for (const auto& f : all_descriptors()) {
    const ValueTable t = sieve_values(f, 100000);
    const std::vector<std::uint64_t> xs{1000, 10000, 100000};
    const auto k = alternating_sums_via_kernel(t, xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
      c.check(to_mpq(k[i]) == to_mpq(alternating_sum_direct(t, xs[i])),
              "direct != kernel for " + f.id() + " at " + std::to_string(xs[i]));
  }
  const ValueTable rk = sieve_values(inv(Fn::kappa), 100000);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(1, 100000);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t x = pick(rng);
    c.check(kk_identity_check(rk, x), "kk identity at " + std::to_string(x));
  }
  for (const auto& f : all_descriptors()) {
    const CoefficientSeries a = bell_coeffs(f, 128);
    const auto prod = series_product(a, reciprocal_coeffs(a));
    bool id = prod.size() == 129 && prod[0] == 1;
    for (std::size_t i = 1; id && i < prod.size(); ++i) id = prod[i] == 0;
    c.check(id, "reciprocal * original != 1 for " + f.id());
    const CoefficientSeries r = reciprocal_coeffs(bell_coeffs(f, 12)),
                            m = reciprocal_coeffs_multinomial(bell_coeffs(f, 12), 12);
    bool same = true;
    for (std::size_t nu = 0; nu <= 12; ++nu) same = same && r[nu] == m[nu];
    c.check(same, "multinomial != recurrence for " + f.id());
  }
}

void expect_b(Criterion& c, const char* id, std::vector<const char*> want) {
  const CoefficientSeries b = reciprocal_coeffs(bell_coeffs(*parse_function(id), want.size()));
  for (std::size_t i = 0; i < want.size(); ++i)
    c.check(b[i + 1] == mpq_class(want[i]), std::string(id) + " b_" + std::to_string(i + 1) + " = " + b[i + 1].get_str() +
                                                ", expected " + want[i]);
}

// 2. published exact values
void published_values(Criterion& c) {
  expect_b(c, "1/sigma", {"-1/3", "-2/63", "-8/945"});
  expect_b(c, "1/sigma_star", {"-1/3", "-4/45", "-2/135", "32/34425"});
  expect_b(c, "1/phi_star", {"-1", "2/3", "-10/21", "104/315"});
  expect_b(c, "1/tau", {"-1/2", "-1/12", "-1/24"});
  const Kernel hp = kernel_of(fn(Fn::gcd_sum), 64), hk = kernel_of(fn(Fn::kappa), 64);
  c.check(hp[1] == -6, "h_P(2) = " + hp[1].get_str());
  for (std::size_t nu = 2; nu <= 64; ++nu) c.check(hp[nu] == 2, "h_P(2^" + std::to_string(nu) + ") = " + hp[nu].get_str());
  for (std::size_t nu = 1; nu <= 64; ++nu)
    c.check(hk[nu] == (nu % 2 ? -4 : 4), "h_kappa(2^" + std::to_string(nu) + ") = " + hk[nu].get_str());
  for (const char* id : {"phi", "psi", "sigma", "1/psi", "1/kappa", "1/kappa_star"})
    c.check(closed_form_check(id, 64), std::string("closed form ") + id);
}

// 3. coefficient bounds
void coefficient_bounds(Criterion& c) {
  for (const char* id : {"1/sigma", "1/tau", "1/gcd_sum"}) {
    try {
      const KaluzaReport r = check_kaluza(bell_coeffs(*parse_function(id), 64));
      c.check(!r.is_log_convex || r.bounds_hold, std::string("Kaluza bounds fail for ") + id);
      if (!r.is_log_convex) c.detail << "    note: " << id << " prefix not log-convex at nu=" << *r.first_violation << '\n';
    } catch (const InternalError& e) {
      c.check(false, e.what());
    }
  }
  const KendallReport k = kendall_explicit_bound(bell_coeffs(inv(Fn::sigma_bi), 64), mpq_class(4, 5), mpq_class(1, 2));
  c.check(k.hypothesis_holds, "1/sigma_bi: |a_nu| <= (4/5) 2^-nu fails");
  c.check(k.bound_holds, "1/sigma_bi: explicit bound fails");
}

// 4. constants
void constants(Criterion& c) {
  struct Target {
    const char* id;
    Real value, tol;
  };
  for (const Target& t : {Target{"C", 0.704442L, kTolC}, Target{"K", 1.606695L, kTolK}, Target{"K1", -0.422423L, kTolK1},
                          Target{"qprod", 0.288788L, kTolQprod}, Target{"D_abelian", 0.752015L, kTolDabelian},
                          Target{"c_sigma_bi", -0.152003L, kTolCsigma}}) {
    const ConstantResult r = named_constant(t.id, kDefaultPrimeLimit);
    c.check(std::fabs(r.value - t.value) <= t.tol, std::string(t.id) + " = " + num(r.value) + " (tail " +
                                                       num(r.tail_estimate, 2) + "), target " + num(t.value, 7) +
                                                       " ± " + num(t.tol, 2));
  }
  const Real A = named_constant("A").value;
  const Real closed = 315 * zeta(3) / (2 * std::pow(kPi, 4));
  c.check(std::fabs(A / closed - 1) <= kTolARelative, "A = " + num(A, 15) + " vs 315 zeta(3)/(2 pi^4) = " + num(closed, 15));
}

// 5. alternating Dirichlet series
void dirichlet(Criterion& c) {
  std::vector<std::pair<Fn, Real>> cases;
  for (const auto& id : stated_closed_form_ids()) cases.push_back({parse_function(id)->base, 3});
  for (Fn f : {Fn::mu_sq, Fn::tau, Fn::abelian}) cases.push_back({f, 2});
  for (const auto& [f, s] : cases) {
    const Real partial = alternating_dirichlet_partial(fn(f), s, kDirichletTerms);
    const Real closed = stated_closed_form(f, s);
    c.check(std::fabs(partial - closed) <= kTolDirichlet, std::string(info(f).id) + " s=" + num(s, 2) + ": partial " +
                                                               num(partial) + " closed " + num(closed));
  }
}

// 6. main terms
void main_terms(Criterion& c) {
  for (const char* f : {"phi", "psi", "sigma", "kappa", "sigma_star", "phi_star", "kappa_star", "sigma_bi", "beta"}) {
    const SumReport r = run_report(*find_model(f, SumMode::alternating), {kRatioX});
    const Real ratio = to_real(r.exact[0]) / r.predicted[0];
    c.check(std::fabs(ratio - 1) <= kTolRatio, std::string(f) + " ratio " + num(ratio));
  }
  for (const char* f : {"1/phi", "1/psi", "1/sigma"}) {
    const SumReport r = run_report(*find_model(f, SumMode::alternating), {kRatioX});
    c.check(std::fabs(r.residual[0]) <= kTolLogResidual, std::string(f) + " residual " + num(r.residual[0]));
  }
  const SumReport tau = run_report(*find_model("tau", SumMode::alternating), power_of_two_grid(10, 20));
  for (std::size_t i = 0; i < tau.grid.size(); ++i) {
    const Real scaled = tau.residual[i] / std::pow(static_cast<Real>(tau.grid[i]), 0.4L);
    c.check(std::fabs(scaled) <= kTauBound, "tau residual/x^0.4 at " + std::to_string(tau.grid[i]) + " is " + num(scaled));
  }
  const Real q2 = sigma_q_model(QSet::of({2})).params[0], alt = find_model("sigma", SumMode::alternating)->params[0];
  c.check(std::fabs(q2 - alt) <= kTolSigmaQ, "sigma_Q{2} constant " + num(q2, 18) + " vs " + num(alt, 18));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> suite{
      {"1 exact identities", exact_identities}, {"2 published exact values", published_values},
      {"3 coefficient bounds", coefficient_bounds}, {"4 constants", constants},
      {"5 alternating Dirichlet series", dirichlet}, {"6 asymptotic main terms", main_terms}};
  int failed = 0;
  for (const auto& [name, run] : suite) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << num(secs, 3) << " s)\n" << c.detail.str() << std::flush;
    failed += !c.ok;
  }
  return failed;
}
