#include "qrr/expoly/closed_form.hpp"

#include "qrr/errors.hpp"

#include <cmath>
#include <complex>

namespace qrr {

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth_roots(const CPoly& p) {
  int n = p.degree();
  std::vector<cld> c;
  for (auto& z : p.coeffs())
    c.emplace_back(static_cast<long double>(to_double(z.re)), static_cast<long double>(to_double(z.im)));
  cld lead = c.back();
  for (auto& x : c) x /= lead;
  std::vector<cld> z(n);
  if (n == 0) return z;
  long double R = 0;
  for (int k = 0; k < n; ++k) R = std::max(R, std::pow(std::abs(c[k]), 1.0L / (n - k)));
  R = std::max(R, 1e-3L);
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(R, 2.0L * 3.14159265358979323846L * k / n + 0.4L);
  auto eval = [&](cld x, cld& d) {
    cld v = c[n];
    d = 0;
    for (int k = n - 1; k >= 0; --k) {
      d = d * x + v;
      v = v * x + c[k];
    }
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      cld d;
      cld v = eval(z[k], d);
      if (v == cld(0)) continue;
      cld ratio = v / d;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      moved = std::max(moved, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (moved < 1e-18L) break;
  }
  return z;
}

Rational round_to_grid(const Rational& x, long bits) {
  return dyadic_floor(x + pow2(-bits - 1), bits);
}

ComplexRational round_to_grid(const ComplexRational& z, long bits) {
  return ComplexRational(round_to_grid(z.re, bits), round_to_grid(z.im, bits));
}

ComplexRational newton_refine(const CPoly& p, ComplexRational z, long bits) {
  CPoly dp = p.derivative();
  for (int it = 0; it < 64; ++it) {
    ComplexRational v = p(z);
    if (v.is_zero()) break;
    ComplexRational d = dp(z);
    if (d.is_zero()) break;
    ComplexRational nz = round_to_grid(z - v / d, bits);
    if (nz == z) break;
    z = nz;
  }
  return z;
}

ComplexRational from_cld(cld z) {
  Rational re(static_cast<double>(z.real())), im(static_cast<double>(z.imag()));
  return ComplexRational(re, im);
}

// First continued-fraction convergent within 2^-err_bits of x.
Rational convergent(const Rational& x, long err_bits) {
  Integer p = x.get_num(), q = x.get_den();
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational tol = pow2(-err_bits);
  while (q != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Rational cand(h1, k1);
    cand.canonicalize();
    if (abs(x - cand) < tol) return cand;
    Integer r = p - a * q;
    p = q;
    q = r;
  }
  Rational cand(h1, k1);
  cand.canonicalize();
  return cand;
}

Rational up64(const Rational& r) { return to_big_up(r, 64).to_rational(); }

struct Ball {
  ComplexRational c;
  Rational r;
};

Ball mul(const Ball& a, const Ball& b) {
  Ball o;
  o.c = a.c * b.c;
  o.r = up64(modulus_upper(a.c) * b.r + modulus_upper(b.c) * a.r + a.r * b.r);
  return o;
}

Ball inv(const Ball& a) {
  Rational m = modulus_lower(a.c);
  if (!(m > a.r)) throw EigenvalueNotGaussianRational("eigenvalue enclosures are not separated");
  Ball o;
  o.c = ComplexRational(1) / a.c;
  o.r = up64(a.r / (m * (m - a.r)));
  return o;
}

void round_ball(Ball& b, long bits) {
  ComplexRational c = round_to_grid(b.c, bits);
  b.r = up64(b.r + pow2(-bits));
  b.c = std::move(c);
}

bool discs_disjoint(const Eigenvalue& a, const Eigenvalue& b) {
  Rational r = a.radius + b.radius;
  return norm2(a.center - b.center) > r * r;
}

}  // namespace

SpectralData spectral_data(const CMatrix& M, const ClosedFormOptions& opts) {
  SpectralData sd;
  sd.characteristic = characteristic_polynomial(M);
  sd.squarefree = squarefree_part(sd.characteristic);
  if (!evaluate_at_matrix(sd.squarefree, M).is_zero())
    throw DefectiveGenerator("governing matrix is not diagonalisable");

  CPoly rem = sd.squarefree;
  for (cld z : aberth_roots(sd.squarefree)) {
    ComplexRational zr = newton_refine(sd.squarefree, from_cld(z), 160);
    ComplexRational cand(convergent(zr.re, 80), convergent(zr.im, 80));
    if (!sd.squarefree(cand).is_zero()) continue;
    bool seen = false;
    for (auto& e : sd.eigenvalues) seen = seen || e.center == cand;
    if (seen) continue;
    sd.eigenvalues.push_back({cand, Rational(0)});
    CPoly q, r;
    divmod(rem, CPoly::linear_root(cand), q, r);
    rem = q;
  }
  if (rem.degree() <= 0) return sd;

  sd.split = false;
  if (!opts.allow_fallback)
    throw EigenvalueNotGaussianRational(
        std::to_string(rem.degree()) + " distinct eigenvalues are not "
        "Gaussian rationals; use the numeric fallback");

  std::size_t n_exact = sd.eigenvalues.size();
  std::vector<cld> approx = aberth_roots(rem);
  for (long bits = opts.fallback_bits; bits <= 4096; bits *= 2) {
    sd.eigenvalues.resize(n_exact);
    std::vector<ComplexRational> z;
    for (cld a : approx) z.push_back(newton_refine(rem, from_cld(a), bits));
    Rational lead_lo = modulus_lower(rem.lead());
    bool ok = true;
    for (std::size_t i = 0; i < z.size() && ok; ++i) {
      Rational den = lead_lo;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) den *= modulus_lower(z[i] - z[j]);
      if (sgn(den) == 0) { ok = false; break; }
      Rational rad = up64(Rational(static_cast<long>(z.size())) * modulus_upper(rem(z[i])) / den);
      if (sgn(rad) == 0) rad = pow2(-bits);
      sd.eigenvalues.push_back({z[i], rad});
    }
    for (std::size_t i = 0; i < sd.eigenvalues.size() && ok; ++i)
      for (std::size_t j = i + 1; j < sd.eigenvalues.size() && ok; ++j)
        ok = discs_disjoint(sd.eigenvalues[i], sd.eigenvalues[j]);
    if (ok) return sd;
  }
  throw EigenvalueNotGaussianRational("could not separate eigenvalue enclosures");
}

SymbolicState closed_form_solution(const QctmcModel& model, const ClosedFormOptions& opts) {
  require_valid(model);
  return closed_form_solution(build_governing_matrix(model), model.rho0, opts);
}

SymbolicState closed_form_solution(const GoverningMatrix& gm, const CMatrix& rho0,
                                   const ClosedFormOptions& opts) {
  const CMatrix& M = gm.M;
  std::size_t n = gm.dim, N = n * n;
  if (rho0.rows() != n || rho0.cols() != n || M.rows() != N) throw DimensionMismatch("closed form");
  SpectralData sd = spectral_data(M, opts);
  std::vector<ComplexRational> v0 = vectorize(rho0);
  std::vector<std::vector<ExpTerm>> terms(N);
  SymbolicState st;
  st.dim = n;
  st.exact = sd.split;

  if (sd.split) {
    // P_l v0 = prod_{m != l} (M - m) v0 / (l - m)
    for (std::size_t l = 0; l < sd.eigenvalues.size(); ++l) {
      const ComplexRational& lam = sd.eigenvalues[l].center;
      std::vector<ComplexRational> w = v0;
      ComplexRational den(1);
      for (std::size_t m = 0; m < sd.eigenvalues.size(); ++m) {
        if (m == l) continue;
        const ComplexRational& mu = sd.eigenvalues[m].center;
        std::vector<ComplexRational> mw = mat_vec(M, w);
        for (std::size_t i = 0; i < N; ++i) mw[i] -= mu * w[i];
        w = std::move(mw);
        den = den * (lam - mu);
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (w[i].is_zero()) continue;
        terms[i].push_back(ExpTerm{lam, CPoly(w[i] / den), {}, {}, {}});
      }
    }
  } else {
    long bits = opts.fallback_bits;
    std::vector<Rational> absM(N * N);
    for (std::size_t k = 0; k < N * N; ++k) absM[k] = modulus_upper(M.data()[k]);
    for (std::size_t l = 0; l < sd.eigenvalues.size(); ++l) {
      const Eigenvalue& lam = sd.eigenvalues[l];
      std::vector<Ball> w(N);
      for (std::size_t i = 0; i < N; ++i) w[i].c = v0[i];
      Ball den{ComplexRational(1), Rational(0)};
      for (std::size_t m = 0; m < sd.eigenvalues.size(); ++m) {
        if (m == l) continue;
        const Eigenvalue& mu = sd.eigenvalues[m];
        std::vector<Ball> nw(N);
        Rational mu_abs = modulus_upper(mu.center);
        for (std::size_t i = 0; i < N; ++i) {
          ComplexRational c;
          Rational r;
          for (std::size_t j = 0; j < N; ++j) {
            const ComplexRational& a = M(i, j);
            if (a.is_zero()) continue;
            c += a * w[j].c;
            r += absM[i * N + j] * w[j].r;
          }
          c -= mu.center * w[i].c;
          r += mu_abs * w[i].r + mu.radius * (modulus_upper(w[i].c) + w[i].r);
          nw[i] = Ball{c, r};
          round_ball(nw[i], bits);
        }
        w = std::move(nw);
        den = mul(den, Ball{lam.center - mu.center, lam.radius + mu.radius});
        round_ball(den, bits);
      }
      Ball iden = inv(den);
      for (std::size_t i = 0; i < N; ++i) {
        Ball coef = mul(w[i], iden);
        round_ball(coef, bits);
        if (coef.c.is_zero() && sgn(coef.r) == 0) continue;
        ExpTerm t;
        t.alpha = lam.center;
        t.alpha_radius = lam.radius;
        t.beta = CPoly(coef.c);
        t.beta_radius = coef.r;
        t.mag = up64(modulus_upper(coef.c) + coef.r);
        terms[i].push_back(std::move(t));
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i) st.entries.push_back(ExpPolynomial::from_terms(std::move(terms[i])));
  return st;
}

ExpPolynomial trace_observable(const CMatrix& P, const SymbolicState& state) {
  if (P.rows() != state.dim || P.cols() != state.dim) throw DimensionMismatch("projector shape");
  if (!is_projector(P)) throw NotAProjector("observable is not an orthogonal projector");
  std::vector<ExpTerm> all;
  for (std::size_t i = 0; i < state.dim; ++i)
    for (std::size_t j = 0; j < state.dim; ++j) {
      if (P(i, j).is_zero()) continue;
      ExpPolynomial e = P(i, j) * state.at(j, i);
      all.insert(all.end(), e.terms().begin(), e.terms().end());
    }
  return ExpPolynomial::from_terms(std::move(all)).real_part();
}

}  // namespace qrr
