#pragma once

#include <complex>

namespace iongate {

// Lamb-Dicke parameter: dimensionless coupling between the internal transition
// and the motional mode. Strictly positive; the code stays accurate up to
// eta ~ 2 without overflow.
class LDParameter {
public:
    explicit LDParameter(double eta);
    double value() const { return eta_; }
    double squared() const { return eta_ * eta_; }

private:
    double eta_;
};

// Signed effective Rabi frequency of one sideband pair, in rad/s. Negative
// values occur past the roots of the Laguerre factor and the sign matters
// when the product Omega_{m,k}*t feeds cos/sin.
struct RabiFrequency {
    double rad_per_s;
};

// Generalized Laguerre polynomial L_m^k(x), evaluated by the upward
// three-term recurrence in m (stable for x >= 0, unlike the alternating
// factorial sum, which is kept only as a small-m test oracle).
double laguerre_assoc(int m, int k, double x);

// Effective Rabi frequency of the |m,g> <-> |m+k,e> pair driven at bare Rabi
// frequency omega on the k-th blue sideband:
//   (omega/2) e^{-eta^2/2} eta^k sqrt(m!/(m+k)!) L_m^k(eta^2)
// Factorial ratios go through log-gamma differences so large m cannot
// overflow.
RabiFrequency effective_rabi(double omega, LDParameter eta, int m, int k);

// Matrix element <row| exp[i eta (a + a^dag)] |col| of the displacement-type
// operator in the Fock basis. Symmetric under row<->col exchange.
std::complex<double> displacement_element(LDParameter eta, int row, int col);

} // namespace iongate
