#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>

namespace lerch {

using cplx = std::complex<double>;

enum class Parity { even, odd, none };

// Envelope of |f|: gaussian means |f(x)| <= amplitude * exp(-pi width (x - center)^2);
// compact means f vanishes outside center +- radius; adaptive means no bound is
// known and sums are scanned outward from center until terms die off.
struct Decay {
    enum class Kind { gaussian, compact, adaptive };
    Kind kind = Kind::adaptive;
    double center = 0.0;
    double width = 1.0;
    double amplitude = 1.0;
    double radius = 4.0;

    static Decay gaussian(double width, double amplitude = 1.0, double center = 0.0);
    static Decay compact(double radius, double center = 0.0);
    static Decay adaptive(double radius, double center = 0.0);

    // Interval outside which |f| < tol. Adaptive envelopes return the minimum scan range.
    std::pair<double, double> window(double tol) const;

    Decay translated(double shift) const;   // envelope of f(x + shift)
    Decay dilated(double t) const;          // envelope of |t|^{1/2} f(t x)
    Decay scaled(double factor) const;
    Decay mirrored() const;
};

struct LineFunction {
    std::function<cplx(double)> eval;
    std::function<cplx(double)> deriv;  // empty when no closed form is known
    Decay decay;
    Decay spectrum;  // envelope of the Fourier transform (default convention)
    Parity parity = Parity::none;
    std::string label;

    cplx operator()(double x) const { return eval(x); }
    bool has_derivative() const { return static_cast<bool>(deriv); }
};

}  // namespace lerch
