#include "kindex/circleop/winding.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "kindex/error.hpp"

namespace kindex {

namespace {

// Half-open quadrants covering C \ {0}.
int quadrant(const GaussianRational& w) {
  const int re = w.re().sign();
  const int im = w.im().sign();
  if (re > 0 && im >= 0) return 0;
  if (re <= 0 && im > 0) return 1;
  if (re < 0 && im <= 0) return 2;
  return 3;
}

// Upper bound on |d/dtheta q(e^{i theta})|: sum |k| (|re a_k| + |im a_k|).
Rational derivative_bound(const LaurentPoly& q) {
  Rational l(0);
  for (const auto& [k, c] : q.coefficients()) l += Rational(k < 0 ? -k : k) * (c.re().abs() + c.im().abs());
  return l;
}

struct Interval {
  Rational ta, tb;
  GaussianRational wa, wb;
  int depth;
};

}  // namespace

GaussianRational circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational den = Rational(1) + t2;
  return {(Rational(1) - t2) / den, Rational(2) * t / den};
}

WindingResult winding_details(const LaurentPoly& q, const WindingOptions& opts) {
  if (q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "winding number of the zero symbol");
  WindingResult res;
  long quarter_turns = 0;
  const Rational lip = derivative_bound(q);
  // Chart +1 covers angles [-pi/2, pi/2], chart -1 covers [pi/2, 3pi/2].
  for (const int chart : {1, -1}) {
    auto sample = [&](const Rational& t) {
      GaussianRational z = circle_point(t);
      if (chart < 0) z = -z;
      GaussianRational w = q.evaluate_on_circle(z);
      if (w.is_zero()) {
        throw Error(ErrorCode::SymbolVanishesOnCircle,
                    "symbol " + q.to_string() + " vanishes at z = " + z.to_string() + "; not elliptic");
      }
      return w;
    };
    const std::array<Rational, 5> grid = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                          Rational(1)};
    std::vector<GaussianRational> w0;
    for (const auto& t : grid) w0.push_back(sample(t));
    std::vector<Interval> stack;
    for (std::size_t i = 4; i-- > 0;) stack.push_back({grid[i], grid[i + 1], w0[i], w0[i + 1], 0});
    while (!stack.empty()) {
      Interval iv = std::move(stack.back());
      stack.pop_back();
      // Accept when the endpoint angle step is below pi/2 and the whole arc
      // provably stays within |w_a|/sqrt(2) of w_a (arc length <= 2 (tb - ta)).
      const Rational h = iv.tb - iv.ta;
      const bool certified = Rational(8) * lip * lip * h * h < iv.wa.norm();
      if (certified && (iv.wa * iv.wb.conj()).re().sign() > 0) {
        const int d = (quadrant(iv.wb) - quadrant(iv.wa) + 4) % 4;
        if (d == 1) ++quarter_turns;
        if (d == 3) --quarter_turns;
        ++res.samples;
        continue;
      }
      if (iv.depth >= opts.max_depth) {
        throw Error(ErrorCode::SymbolVanishesOnCircle,
                    "refinement depth " + std::to_string(opts.max_depth) + " exhausted for " + q.to_string() +
                        "; symbol is not elliptic or nearly vanishes");
      }
      const Rational tm = (iv.ta + iv.tb) / Rational(2);
      const GaussianRational wm = sample(tm);
      res.depth_reached = std::max(res.depth_reached, iv.depth + 1);
      stack.push_back({tm, iv.tb, wm, iv.wb, iv.depth + 1});
      stack.push_back({iv.ta, tm, iv.wa, wm, iv.depth + 1});
    }
  }
  if (quarter_turns % 4 != 0) throw Error(ErrorCode::InvalidArgument, "winding count did not close up");
  res.winding = quarter_turns / 4;
  return res;
}

long winding_number(const LaurentPoly& q, const WindingOptions& opts) { return winding_details(q, opts).winding; }

long wiener_hopf_index(const LaurentMatrix& f, const WindingOptions& opts) {
  return -winding_number(determinant(f), opts);
}

KerCoker explicit_pn_dims(long n) { return n >= 0 ? KerCoker{0, n} : KerCoker{-n, 0}; }

}  // namespace kindex
