#pragma once
// Generalized cosine/sine on the triangle Δ = {0 <= t1, t2, -t3 <= 1}, the
// Steiner map onto the hypocycloid region, and generalized Chebyshev polynomials.
#include <array>
#include <functional>

#include "lattika/fourier.hpp"

namespace lattika {

// t -> sign * (t_{p[0]}, t_{p[1]}, t_{p[2]}). The three rotations carry
// sign +1, the three reflections are negated transpositions with sign -1.
struct GroupElementA2 {
  std::array<int, 3> perm;
  int sign;
};

const std::array<GroupElementA2, 6>& a2_group();
HomoPoint act(const GroupElementA2& s, const HomoPoint& t);
IndexPoint act(const GroupElementA2& s, const IndexPoint& k);
HomoExact act(const GroupElementA2& s, const HomoExact& t);

bool in_cone(const IndexPoint& k);           // k1 >= 0, k2 >= 0, k3 <= 0
bool in_cone_interior(const IndexPoint& k);  // k1 > 0, k2 > 0, k3 < 0

cplx tc(const IndexPoint& k, const HomoPoint& t);
cplx ts(const IndexPoint& k, const HomoPoint& t);

using HomoFn = std::function<cplx(const HomoPoint&)>;
// Plain group sums: P+ f = sum f(t s), P- f = sum sign(s) f(t s).
HomoFn project_pm(HomoFn f, int sign);

// (x, y) = (Re, Im) TC_{0,1,-1}(t).
Point2 steiner_map(const HomoPoint& t);
// det d(x,y)/d(x1,x2) with t = E x Cartesian.
double steiner_jacobian(const HomoPoint& t);

double bracket(double x, double y);
// bracket(steiner_map(t)) = (64/27) (sin pi t1 sin pi t2 sin pi t3)^2, free of
// the cancellation the (x, y) form suffers near the cusps.
double bracket_at(const HomoPoint& t);
// |J(t)| * w_alpha(steiner_map(t)) via |J| = 8 pi^2 / (9 sqrt3) |sin sin sin|;
// the density of the pullback of w_alpha dx dy to Δ.
double steiner_density(const HomoPoint& t, double alpha);
double w_alpha(double x, double y, double alpha);
bool in_hypocycloid(double x, double y);

enum class ChebKind { first, second };
// T_k^m = TC_{k,m-k,-m};  U_k^m = TS_{k+1,m-k+1,-m-2} / TS_{1,1,-2}.
cplx generalized_chebyshev(ChebKind kind, int k, int m, const HomoPoint& t);

// Δ as a Cartesian polygon.
Polygon delta_polygon();

}  // namespace lattika
