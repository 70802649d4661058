#pragma once

#include "wd/matrix.hpp"
#include "wd/wdpair.hpp"

#include <string>
#include <vector>

namespace wd {

/* matrix-valued polynomial in u, coefficient list of length order */
using USeries = std::vector<Matrix>;

/* log connection u d/du + A(u) with nilpotent residue together with a
   Frobenius Phi(u) over the substitution u -> u^p, everything truncated
   modulo u^order */
struct LogModule {
    long p = 2;
    int order = 1;
    USeries A;
    USeries Phi;

    int dim() const;
    const FieldPtr& field() const;
};

struct LogModuleReport {
    bool sizes_ok = false;
    bool p_prime = false;
    bool residue_nilpotent = false;
    bool frobenius_invertible = false;
    bool compatible = false;
    int first_bad_power = -1; /* lowest u-power where compatibility fails */

    bool ok() const {
        return sizes_ok && p_prime && residue_nilpotent && frobenius_invertible &&
               compatible;
    }
};

/* checks u Phi' + A Phi = p Phi A(u^p) modulo u^order plus the shape
   conditions */
LogModuleReport validate_log_module(const LogModule& m);

/* module with A and Phi constant in u */
LogModule constant_module(long p, int order, const Matrix& A0, const Matrix& P);

/* linear algebra fiber data: an invertible Frobenius and a nilpotent
   operator with N phi0 = p phi0 N */
struct PhiNModule {
    long p = 2;
    Matrix phi0;
    Matrix N;
};

struct PhiNReport {
    bool sizes_ok = false;
    bool p_prime = false;
    bool phi0_invertible = false;
    bool n_nilpotent = false;
    bool relation_ok = false;

    bool ok() const {
        return sizes_ok && p_prime && phi0_invertible && n_nilpotent && relation_ok;
    }
};

PhiNReport validate_phi_n(const PhiNModule& d);

/* fiber at u = 0: (Phi(0), -A(0)) */
PhiNModule special_fiber(const LogModule& m);

/* change of trivialization: A -> G^-1 (A G + u G'), Phi -> G^-1 Phi G(u^p),
   truncated */
LogModule gauge_transform(const LogModule& m, const USeries& G);

struct GaugeData {
    USeries gauge; /* G with G(0) = I */
    LogModule constant;
};

/* solves (k + ad_{A(0)}) G_k = lower order data; the nilpotent residue makes
   every step uniquely solvable and the transported Frobenius constant */
GaugeData gauge_to_constant(const LogModule& m);

struct FiberComparison {
    PhiNModule from_constant_form;
    PhiNModule from_fiber;
    bool pass = false;
};

/* the two fiber constructions agree after transport by G(0) = I */
FiberComparison check_fiber_comparison(const LogModule& m);

/* pair with s = phi0^{-s_deg} and q = p^{s_deg} */
WDPair wd_from_phin(const PhiNModule& d, int s_deg);

}
