#pragma once

#include <cmath>
#include <cstdint>

#include "padicphi4/errors.hpp"

namespace padicphi4 {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Global dictionary of exponents. L = p^l, [phi] = (3-eps)/4.
struct ModelParams {
    long p = 2;
    int l = 1;
    double epsilon = 0.1;

    ModelParams() = default;
    ModelParams(long p_, int l_, double eps_) : p(p_), l(l_), epsilon(eps_) {
        validate();
    }

    void validate() const {
        if (!is_prime(p)) throw config_error("p must be prime >= 2");
        if (p > 251) throw config_error("p too large for digit storage");
        if (l < 1) throw config_error("l must be >= 1");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw config_error("epsilon must lie in (0,1)");
    }

    double phi_dim() const { return (3.0 - epsilon) / 4.0; }
    long L() const {
        long r = 1;
        for (int i = 0; i < l; ++i) r *= p;
        return r;
    }
    // real-valued p^x and L^x
    double pow_p(double x) const { return std::pow(double(p), x); }
    double pow_L(double x) const { return std::pow(double(L()), x); }
};

// Finite window: UV cutoff L^r, IR box Lambda_s.
struct CutoffWindow {
    int r = 0;
    int s = 0;

    CutoffWindow() = default;
    CutoffWindow(int r_, int s_) : r(r_), s(s_) {
        if (r > s) throw config_error("window requires r <= s");
    }
};

struct Couplings {
    double g = 0.0;
    double mu = 0.0;

    Couplings() = default;
    Couplings(double g_, double mu_) : g(g_), mu(mu_) {
        if (g < 0.0) throw config_error("coupling g must be >= 0");
    }
};

} // namespace padicphi4
