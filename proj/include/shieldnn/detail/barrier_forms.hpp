#pragma once

#include <array>
#include <cmath>

// Closed-form expressions for the v-normalized on-barrier Lie derivative
//
//   L(xi, beta) = A*d*s*sin(xi-beta) + B*s*sin(beta) + C*d^2*cos(xi-beta)
//
// with s = sin(xi/2), c = cos(xi/2), d = sigma*c + 1 - sigma and constants
// A = sigma/(2 rbar^2), B = sigma/(2 rbar l_r), C = 1/rbar^2, together with
// its partial derivatives up to third order and the implicit-boundary
// derivatives gamma', gamma''. All forms are templated on the scalar type so
// the same expressions evaluate in double and in interval arithmetic (the
// certification engine needs sound enclosures of exactly these formulas).
// Parameters are lifted into T before any arithmetic, so the interval path
// also encloses the rounding of derived constants.
//
// Derivative shorthands (d/dxi): s' = c/2, c' = -s/2, d' = -sigma*s/2,
//   E   = (d*c - sigma*s^2)/2        (= d(d*s)/dxi)
//   E'  = -(3*sigma*s*c + d*s)/4
//   E'' = -(3*sigma*c^2 - 4*sigma*s^2 + d*c)/8
// Every term of L is a unit-frequency sinusoid in beta, hence
//   d2L/dbeta2 = -L,  d3L/dbeta3 = -dL/dbeta,  d3L/(dxi dbeta2) = -dL/dxi.

namespace shieldnn::detail {

// Parameters entering the on-barrier Lie derivative (exact double inputs).
struct LieConstants {
    double r_bar;
    double sigma;
    double l_r;
};

template <class T>
struct LieTerms {
    T sg;                       // sigma lifted to T
    T s, c, d, su, cu, sb, cb;  // half-angle, relative-angle and beta trig
    T A, B, C;
};

template <class T>
LieTerms<T> lie_terms(const T& xi, const T& beta, const LieConstants& k) {
    using std::cos;
    using std::sin;
    LieTerms<T> t;
    t.sg = T(k.sigma);
    const T rbar = T(k.r_bar);
    const T lr = T(k.l_r);
    t.s = sin(xi * T(0.5));
    t.c = cos(xi * T(0.5));
    t.d = t.sg * t.c + (T(1.0) - t.sg);
    const T u = xi - beta;
    t.su = sin(u);
    t.cu = cos(u);
    t.sb = sin(beta);
    t.cb = cos(beta);
    t.A = t.sg / (T(2.0) * rbar * rbar);
    t.B = t.sg / (T(2.0) * rbar * lr);
    t.C = T(1.0) / (rbar * rbar);
    return t;
}

template <class T>
T lie_E(const LieTerms<T>& t) {
    return (t.d * t.c - t.sg * t.s * t.s) * T(0.5);
}

template <class T>
T lie_Ep(const LieTerms<T>& t) {
    return -(T(3.0) * t.sg * t.s * t.c + t.d * t.s) * T(0.25);
}

template <class T>
T lie_Epp(const LieTerms<T>& t) {
    return -(T(3.0) * t.sg * t.c * t.c - T(4.0) * t.sg * t.s * t.s + t.d * t.c) * T(0.125);
}

template <class T>
T lie_value(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    return t.A * t.d * t.s * t.su + t.B * t.s * t.sb + t.C * t.d * t.d * t.cu;
}

template <class T>
T lie_dxi(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    const T E = lie_E(t);
    return t.A * (E * t.su + t.d * t.s * t.cu) + t.B * t.c * T(0.5) * t.sb -
           t.C * (t.sg * t.d * t.s * t.cu + t.d * t.d * t.su);
}

template <class T>
T lie_dbeta(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    return -(t.A * t.d * t.s * t.cu) + t.B * t.s * t.cb + t.C * t.d * t.d * t.su;
}

template <class T>
T lie_dxi2(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    const T E = lie_E(t);
    const T Ep = lie_Ep(t);
    return t.A * ((Ep - t.d * t.s) * t.su + T(2.0) * E * t.cu) - t.B * t.s * T(0.25) * t.sb -
           t.C * ((t.sg * E + t.d * t.d) * t.cu - T(2.0) * t.sg * t.d * t.s * t.su);
}

template <class T>
T lie_dxidbeta(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    return t.A * ((t.sg * t.s * t.s - t.d * t.c) * T(0.5) * t.cu + t.d * t.s * t.su) +
           t.B * t.c * T(0.5) * t.cb + t.C * (t.d * t.d * t.cu - t.sg * t.d * t.s * t.su);
}

template <class T>
T lie_dbeta2(const T& xi, const T& beta, const LieConstants& k) {
    return -lie_value(xi, beta, k);
}

template <class T>
T lie_dxi3(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    const T E = lie_E(t);
    const T Ep = lie_Ep(t);
    const T Epp = lie_Epp(t);
    return t.A * ((Epp - T(3.0) * E) * t.su + (T(3.0) * Ep - t.d * t.s) * t.cu) -
           t.B * t.c * T(0.125) * t.sb -
           t.C * (t.sg * (Ep - T(3.0) * t.d * t.s) * t.cu -
                  (T(3.0) * t.sg * E + t.d * t.d) * t.su);
}

template <class T>
T lie_dxi2dbeta(const T& xi, const T& beta, const LieConstants& k) {
    const auto t = lie_terms(xi, beta, k);
    const T E = lie_E(t);
    const T Ep = lie_Ep(t);
    return t.A * (-((Ep - t.d * t.s) * t.cu) + T(2.0) * E * t.su) -
           t.B * t.s * T(0.25) * t.cb -
           t.C * ((t.sg * E + t.d * t.d) * t.su + T(2.0) * t.sg * t.d * t.s * t.cu);
}

template <class T>
T lie_dxidbeta2(const T& xi, const T& beta, const LieConstants& k) {
    return -lie_dxi(xi, beta, k);
}

template <class T>
T lie_dbeta3(const T& xi, const T& beta, const LieConstants& k) {
    return -lie_dbeta(xi, beta, k);
}

// gamma'' = -(L_xixi Q^2 - 2 P Q L_xibeta + P^2 L_betabeta) / Q^3 with
// P = L_xi, Q = L_beta. In interval mode a Q enclosure containing zero makes
// the division return the whole line, which the certifier treats as unusable.
template <class T>
T gamma2_form(const T& xi, const T& beta, const LieConstants& k) {
    const T p = lie_dxi(xi, beta, k);
    const T q = lie_dbeta(xi, beta, k);
    const T pxx = lie_dxi2(xi, beta, k);
    const T pxb = lie_dxidbeta(xi, beta, k);
    const T pbb = lie_dbeta2(xi, beta, k);
    return -(pxx * q * q - T(2.0) * p * q * pxb + p * p * pbb) / (q * q * q);
}

// Gradient of gamma''. With N = L_xixi Q^2 - 2 P Q L_xibeta + P^2 L_betabeta:
//   dN/dxi   = L_xixixi Q^2 - 2 P L_xibeta^2 - 2 P Q L_xixibeta
//              + 2 P L_xixi L_betabeta + P^2 L_xibetabeta
//   dN/dbeta = L_xixibeta Q^2 + 2 L_xixi Q L_betabeta - 2 L_xibeta^2 Q
//              - 2 P Q L_xibetabeta + P^2 L_betabetabeta
//   dgamma''/dx = -(dN/dx * Q - 3 N dQ/dx) / Q^4.
template <class T>
std::array<T, 2> gamma2_grad_form(const T& xi, const T& beta, const LieConstants& k) {
    const T p = lie_dxi(xi, beta, k);
    const T q = lie_dbeta(xi, beta, k);
    const T pxx = lie_dxi2(xi, beta, k);
    const T pxb = lie_dxidbeta(xi, beta, k);
    const T pbb = lie_dbeta2(xi, beta, k);
    const T lxxx = lie_dxi3(xi, beta, k);
    const T lxxb = lie_dxi2dbeta(xi, beta, k);
    const T lxbb = lie_dxidbeta2(xi, beta, k);
    const T lbbb = lie_dbeta3(xi, beta, k);

    const T n = pxx * q * q - T(2.0) * p * q * pxb + p * p * pbb;
    const T n_xi = lxxx * q * q - T(2.0) * p * pxb * pxb - T(2.0) * p * q * lxxb +
                   T(2.0) * p * pxx * pbb + p * p * lxbb;
    const T n_beta = lxxb * q * q + T(2.0) * pxx * q * pbb - T(2.0) * pxb * pxb * q -
                     T(2.0) * p * q * lxbb + p * p * lbbb;
    const T q4 = q * q * q * q;
    return {-(n_xi * q - T(3.0) * n * pxb) / q4, -(n_beta * q - T(3.0) * n * pbb) / q4};
}

}  // namespace shieldnn::detail
