#pragma once

#include <span>

namespace conjsum {

// Guard distance around kernel poles t = 2*l*pi/r; evaluating closer than
// this throws SingularityError.
inline constexpr double kernel_guard = 1e-8;

// Pole of the r-step kernels nearest to t (some 2*l*pi/r, l integer).
double nearest_singularity(int r, double t);

// Generalized Dirichlet kernel  D..{k,r}(t) = sin((2k+r)t/2) / (2 sin(rt/2)).
// Defined for k >= 0 and any nonzero integer r (negative r flips the sign of
// the denominator, as used by the Abel boundary terms).
double dirichlet_gen(int k, int r, double t);

// Conjugate counterpart           cos((2k+r)t/2) / (2 sin(rt/2)).
double conj_dirichlet_gen(int k, int r, double t);

// Conjugate Dirichlet kernel (cos(t/2) - cos((2k+r)t/2)) / (2 sin(rt/2));
// for r = 1 this equals sum_{nu=1..k} sin(nu t).
double conj_dirichlet(int k, int r, double t);

// Half-angle cotangent (1/2) cot(t/2): the r = 1 split
// conj_dirichlet(k,1,t) + conj_dirichlet_gen(k,1,t) recovers it for every k.
double half_cotangent(double t);

// Both sides of the r-step Abel (summation-by-parts) identity
//   sum_{k=n}^{m} a_k sin(k t)  (sine form) or  a_k cos(k t) (cosine form),
// the right side expanded through the generalized kernels. The coefficient
// span is indexed absolutely: a[k] must be valid for k = 0 .. m+r.
struct AbelIdentityValue {
    double lhs = 0.0;
    double rhs = 0.0;
};

AbelIdentityValue abel_sin_identity(std::span<const double> a, int n, int m,
                                    int r, double t);
AbelIdentityValue abel_cos_identity(std::span<const double> a, int n, int m,
                                    int r, double t);

} // namespace conjsum
