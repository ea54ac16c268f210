# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled dynamics kernels for the planar five-link walker.

Auto-generated by tools/gen_kernels.py -- do not edit by hand.
Mirrors _kernels_py.py; selected at import time by gaitmode.backend.
"""

from libc.math cimport sin, cos, pow

import numpy as np

COMPILED = True


cdef inline double[::1] _as_f64(obj):
    return np.ascontiguousarray(obj, dtype=np.float64)


cdef void _mass_matrix(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double I0 = par[15]
    cdef double I1 = par[16]
    cdef double I2 = par[17]
    cdef double I3 = par[18]
    cdef double I4 = par[19]
    cdef double x0 = m0 + m1 + m2 + m3 + m4
    cdef double x1 = c0*m0
    cdef double x2 = q2 + q3
    cdef double x3 = cos(x2)
    cdef double x4 = c1*m1
    cdef double x5 = q4 + x2
    cdef double x6 = c2*m2
    cdef double x7 = x6*cos(x5)
    cdef double x8 = l1*m2
    cdef double x9 = x3*x4 + x3*x8 + x7
    cdef double x10 = q2 + q5
    cdef double x11 = cos(x10)
    cdef double x12 = c3*m3
    cdef double x13 = q6 + x10
    cdef double x14 = c4*m4
    cdef double x15 = x14*cos(x13)
    cdef double x16 = l3*m4
    cdef double x17 = x11*x12 + x11*x16 + x15
    cdef double x18 = -x1*cos(q2) + x17 + x9
    cdef double x19 = sin(x2)
    cdef double x20 = x6*sin(x5)
    cdef double x21 = x19*x4 + x19*x8 + x20
    cdef double x22 = sin(x10)
    cdef double x23 = x14*sin(x13)
    cdef double x24 = x12*x22 + x16*x22 + x23
    cdef double x25 = -x1*sin(q2) + x21 + x24
    cdef double x26 = l1*x6*cos(q4)
    cdef double x27 = I2 + pow(c2, 2)*m2
    cdef double x28 = I1 + pow(c1, 2)*m1 + pow(l1, 2)*m2 + 2*x26 + x27
    cdef double x29 = l3*x14*cos(q6)
    cdef double x30 = I4 + pow(c4, 2)*m4
    cdef double x31 = I3 + pow(c3, 2)*m3 + pow(l3, 2)*m4 + 2*x29 + x30
    cdef double x32 = x26 + x27
    cdef double x33 = x29 + x30
    out[0] = x0
    out[1] = 0
    out[2] = x18
    out[3] = x9
    out[4] = x7
    out[5] = x17
    out[6] = x15
    out[7] = 0
    out[8] = x0
    out[9] = x25
    out[10] = x21
    out[11] = x20
    out[12] = x24
    out[13] = x23
    out[14] = x18
    out[15] = x25
    out[16] = I0 + pow(c0, 2)*m0 + x28 + x31
    out[17] = x28
    out[18] = x32
    out[19] = x31
    out[20] = x33
    out[21] = x9
    out[22] = x21
    out[23] = x28
    out[24] = x28
    out[25] = x32
    out[26] = 0
    out[27] = 0
    out[28] = x7
    out[29] = x20
    out[30] = x32
    out[31] = x32
    out[32] = x27
    out[33] = 0
    out[34] = 0
    out[35] = x17
    out[36] = x24
    out[37] = x31
    out[38] = 0
    out[39] = 0
    out[40] = x31
    out[41] = x33
    out[42] = x15
    out[43] = x23
    out[44] = x33
    out[45] = 0
    out[46] = 0
    out[47] = x33
    out[48] = x30


cdef void _coriolis_matrix(const double* q, const double* qd, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double qd2 = qd[2]
    cdef double qd3 = qd[3]
    cdef double qd4 = qd[4]
    cdef double qd5 = qd[5]
    cdef double qd6 = qd[6]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double x0 = q2 + q3
    cdef double x1 = sin(x0)
    cdef double x2 = c1*m1
    cdef double x3 = q4 + x0
    cdef double x4 = c2*m2
    cdef double x5 = x4*sin(x3)
    cdef double x6 = l1*m2
    cdef double x7 = x1*x2 + x1*x6 + x5
    cdef double x8 = q2 + q5
    cdef double x9 = sin(x8)
    cdef double x10 = c3*m3
    cdef double x11 = q6 + x8
    cdef double x12 = c4*m4
    cdef double x13 = x12*sin(x11)
    cdef double x14 = l3*m4
    cdef double x15 = x10*x9 + x13 + x14*x9
    cdef double x16 = -x7
    cdef double x17 = qd4*x5
    cdef double x18 = qd3*x16 - x17
    cdef double x19 = -x15
    cdef double x20 = qd6*x13
    cdef double x21 = qd5*x19 - x20
    cdef double x22 = cos(x0)
    cdef double x23 = x4*cos(x3)
    cdef double x24 = x2*x22 + x22*x6 + x23
    cdef double x25 = cos(x8)
    cdef double x26 = x12*cos(x11)
    cdef double x27 = x10*x25 + x14*x25 + x26
    cdef double x28 = qd4*x23
    cdef double x29 = qd3*x24 + x28
    cdef double x30 = qd6*x26
    cdef double x31 = qd5*x27 + x30
    cdef double x32 = l1*x4*sin(q4)
    cdef double x33 = qd4*x32
    cdef double x34 = l3*x12*sin(q6)
    cdef double x35 = qd6*x34
    cdef double x36 = -x33
    cdef double x37 = qd2*x32 + qd3*x32
    cdef double x38 = -x33 - x37
    cdef double x39 = -x35
    cdef double x40 = qd2*x34 + qd5*x34
    cdef double x41 = -x35 - x40
    out[0] = 0
    out[1] = 0
    out[2] = qd2*(c0*m0*sin(q2) - x15 - x7) + x18 + x21
    out[3] = qd2*x16 + x18
    out[4] = -qd2*x5 - qd3*x5 - x17
    out[5] = qd2*x19 + x21
    out[6] = -qd2*x13 - qd5*x13 - x20
    out[7] = 0
    out[8] = 0
    out[9] = qd2*(-c0*m0*cos(q2) + x24 + x27) + x29 + x31
    out[10] = qd2*x24 + x29
    out[11] = qd2*x23 + qd3*x23 + x28
    out[12] = qd2*x27 + x31
    out[13] = qd2*x26 + qd5*x26 + x30
    out[14] = 0
    out[15] = 0
    out[16] = -x33 - x35
    out[17] = x36
    out[18] = x38
    out[19] = x39
    out[20] = x41
    out[21] = 0
    out[22] = 0
    out[23] = x36
    out[24] = x36
    out[25] = x38
    out[26] = 0
    out[27] = 0
    out[28] = 0
    out[29] = 0
    out[30] = x37
    out[31] = x37
    out[32] = 0
    out[33] = 0
    out[34] = 0
    out[35] = 0
    out[36] = 0
    out[37] = x39
    out[38] = 0
    out[39] = 0
    out[40] = x39
    out[41] = x41
    out[42] = 0
    out[43] = 0
    out[44] = x40
    out[45] = 0
    out[46] = 0
    out[47] = x40
    out[48] = 0


cdef void _bias_vector(const double* q, const double* qd, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double qd2 = qd[2]
    cdef double qd3 = qd[3]
    cdef double qd4 = qd[4]
    cdef double qd5 = qd[5]
    cdef double qd6 = qd[6]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double x0 = pow(qd2, 2)
    cdef double x1 = q2 + q3
    cdef double x2 = sin(x1)
    cdef double x3 = c1*m1
    cdef double x4 = q4 + x1
    cdef double x5 = c2*m2
    cdef double x6 = x5*sin(x4)
    cdef double x7 = l1*m2
    cdef double x8 = x2*x3 + x2*x7 + x6
    cdef double x9 = q2 + q5
    cdef double x10 = sin(x9)
    cdef double x11 = c3*m3
    cdef double x12 = q6 + x9
    cdef double x13 = c4*m4
    cdef double x14 = x13*sin(x12)
    cdef double x15 = l3*m4
    cdef double x16 = x10*x11 + x10*x15 + x14
    cdef double x17 = pow(qd3, 2)
    cdef double x18 = -x8
    cdef double x19 = pow(qd5, 2)
    cdef double x20 = -x16
    cdef double x21 = pow(qd4, 2)
    cdef double x22 = pow(qd6, 2)
    cdef double x23 = 2*qd2
    cdef double x24 = qd4*x6
    cdef double x25 = qd6*x14
    cdef double x26 = 2*qd3
    cdef double x27 = 2*qd5
    cdef double x28 = cos(x1)
    cdef double x29 = x5*cos(x4)
    cdef double x30 = x28*x3 + x28*x7 + x29
    cdef double x31 = cos(x9)
    cdef double x32 = x13*cos(x12)
    cdef double x33 = x11*x31 + x15*x31 + x32
    cdef double x34 = qd3*x23
    cdef double x35 = qd5*x23
    cdef double x36 = qd4*x29
    cdef double x37 = qd6*x32
    cdef double x38 = l1*x5*sin(q4)
    cdef double x39 = qd4*x38
    cdef double x40 = x21*x38 + x23*x39 + x26*x39
    cdef double x41 = l3*x13*sin(q6)
    cdef double x42 = qd6*x41
    cdef double x43 = x22*x41 + x23*x42 + x27*x42
    out[0] = 2*qd2*qd3*x18 + 2*qd2*qd5*x20 + x0*(c0*m0*sin(q2) - x16 - x8) - x14*x22 + x17*x18 + x19*x20 - x21*x6 - x23*x24 - x23*x25 - x24*x26 - x25*x27
    out[1] = x0*(-c0*m0*cos(q2) + x30 + x33) + x17*x30 + x19*x33 + x21*x29 + x22*x32 + x23*x36 + x23*x37 + x26*x36 + x27*x37 + x30*x34 + x33*x35
    out[2] = -x40 - x43
    out[3] = -x40
    out[4] = x0*x38 + x17*x38 + x34*x38
    out[5] = -x43
    out[6] = x0*x41 + x19*x41 + x35*x41


cdef void _gravity_vector(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double g = par[20]
    cdef double x0 = q2 + q3
    cdef double x1 = c2*sin(q4 + x0)
    cdef double x2 = sin(x0)
    cdef double x3 = c1*m1*x2 + m2*(l1*x2 + x1)
    cdef double x4 = q2 + q5
    cdef double x5 = c4*sin(q6 + x4)
    cdef double x6 = sin(x4)
    cdef double x7 = c3*m3*x6 + m4*(l3*x6 + x5)
    out[0] = 0
    out[1] = g*(m0 + m1 + m2 + m3 + m4)
    out[2] = g*(-c0*m0*sin(q2) + x3 + x7)
    out[3] = g*x3
    out[4] = g*m2*x1
    out[5] = g*x7
    out[6] = g*m4*x5


cdef void _foot_pos_left(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double l1 = par[6]
    cdef double l2 = par[7]
    cdef double x0 = q2 + q3
    cdef double x1 = q4 + x0
    out[0] = l1*sin(x0) + l2*sin(x1) + q0
    out[1] = -l1*cos(x0) - l2*cos(x1) + q1


cdef void _foot_pos_right(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double l3 = par[8]
    cdef double l4 = par[9]
    cdef double x0 = q2 + q5
    cdef double x1 = q6 + x0
    out[0] = l3*sin(x0) + l4*sin(x1) + q0
    out[1] = -l3*cos(x0) - l4*cos(x1) + q1


cdef void _foot_jac_left(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double l1 = par[6]
    cdef double l2 = par[7]
    cdef double x0 = q2 + q3
    cdef double x1 = q4 + x0
    cdef double x2 = l2*cos(x1)
    cdef double x3 = l1*cos(x0) + x2
    cdef double x4 = l2*sin(x1)
    cdef double x5 = l1*sin(x0) + x4
    out[0] = 1
    out[1] = 0
    out[2] = x3
    out[3] = x3
    out[4] = x2
    out[5] = 0
    out[6] = 0
    out[7] = 0
    out[8] = 1
    out[9] = x5
    out[10] = x5
    out[11] = x4
    out[12] = 0
    out[13] = 0


cdef void _foot_jac_right(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double l3 = par[8]
    cdef double l4 = par[9]
    cdef double x0 = q2 + q5
    cdef double x1 = q6 + x0
    cdef double x2 = l4*cos(x1)
    cdef double x3 = l3*cos(x0) + x2
    cdef double x4 = l4*sin(x1)
    cdef double x5 = l3*sin(x0) + x4
    out[0] = 1
    out[1] = 0
    out[2] = x3
    out[3] = 0
    out[4] = 0
    out[5] = x3
    out[6] = x2
    out[7] = 0
    out[8] = 1
    out[9] = x5
    out[10] = 0
    out[11] = 0
    out[12] = x5
    out[13] = x4


cdef void _foot_jacdot_left(const double* q, const double* qd, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double qd2 = qd[2]
    cdef double qd3 = qd[3]
    cdef double qd4 = qd[4]
    cdef double l1 = par[6]
    cdef double l2 = par[7]
    cdef double x0 = q2 + q3
    cdef double x1 = q4 + x0
    cdef double x2 = l2*sin(x1)
    cdef double x3 = -l1*sin(x0) - x2
    cdef double x4 = qd4*x2
    cdef double x5 = qd2*x3 + qd3*x3 - x4
    cdef double x6 = l2*cos(x1)
    cdef double x7 = l1*cos(x0) + x6
    cdef double x8 = qd4*x6
    cdef double x9 = qd2*x7 + qd3*x7 + x8
    out[0] = 0
    out[1] = 0
    out[2] = x5
    out[3] = x5
    out[4] = -qd2*x2 - qd3*x2 - x4
    out[5] = 0
    out[6] = 0
    out[7] = 0
    out[8] = 0
    out[9] = x9
    out[10] = x9
    out[11] = qd2*x6 + qd3*x6 + x8
    out[12] = 0
    out[13] = 0


cdef void _foot_jacdot_right(const double* q, const double* qd, const double* par, double* out) noexcept nogil:
    cdef double q2 = q[2]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double qd2 = qd[2]
    cdef double qd5 = qd[5]
    cdef double qd6 = qd[6]
    cdef double l3 = par[8]
    cdef double l4 = par[9]
    cdef double x0 = q2 + q5
    cdef double x1 = q6 + x0
    cdef double x2 = l4*sin(x1)
    cdef double x3 = -l3*sin(x0) - x2
    cdef double x4 = qd6*x2
    cdef double x5 = qd2*x3 + qd5*x3 - x4
    cdef double x6 = l4*cos(x1)
    cdef double x7 = l3*cos(x0) + x6
    cdef double x8 = qd6*x6
    cdef double x9 = qd2*x7 + qd5*x7 + x8
    out[0] = 0
    out[1] = 0
    out[2] = x5
    out[3] = 0
    out[4] = 0
    out[5] = x5
    out[6] = -qd2*x2 - qd5*x2 - x4
    out[7] = 0
    out[8] = 0
    out[9] = x9
    out[10] = 0
    out[11] = 0
    out[12] = x9
    out[13] = qd2*x6 + qd5*x6 + x8


cdef void _energies(const double* q, const double* qd, const double* par, double* out) noexcept nogil:
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double qd0 = qd[0]
    cdef double qd1 = qd[1]
    cdef double qd2 = qd[2]
    cdef double qd3 = qd[3]
    cdef double qd4 = qd[4]
    cdef double qd5 = qd[5]
    cdef double qd6 = qd[6]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double I0 = par[15]
    cdef double I1 = par[16]
    cdef double I2 = par[17]
    cdef double I3 = par[18]
    cdef double I4 = par[19]
    cdef double g = par[20]
    cdef double x0 = pow(qd2, 2)
    cdef double x1 = (1.0/2.0)*x0
    cdef double x2 = pow(qd3, 2)
    cdef double x3 = (1.0/2.0)*x2
    cdef double x4 = (1.0/2.0)*pow(qd4, 2)
    cdef double x5 = pow(qd5, 2)
    cdef double x6 = (1.0/2.0)*x5
    cdef double x7 = (1.0/2.0)*pow(qd6, 2)
    cdef double x8 = pow(qd0, 2)
    cdef double x9 = (1.0/2.0)*m0
    cdef double x10 = pow(qd1, 2)
    cdef double x11 = (1.0/2.0)*m1
    cdef double x12 = (1.0/2.0)*m2
    cdef double x13 = (1.0/2.0)*m3
    cdef double x14 = (1.0/2.0)*m4
    cdef double x15 = qd2*qd3
    cdef double x16 = I2*qd4
    cdef double x17 = qd2*qd5
    cdef double x18 = I4*qd6
    cdef double x19 = cos(q2)
    cdef double x20 = pow(c0, 2)*m0*x1
    cdef double x21 = sin(q2)
    cdef double x22 = pow(c1, 2)*m1
    cdef double x23 = q2 + q3
    cdef double x24 = cos(x23)
    cdef double x25 = pow(x24, 2)
    cdef double x26 = x1*x25
    cdef double x27 = sin(x23)
    cdef double x28 = pow(x27, 2)
    cdef double x29 = x22*x28
    cdef double x30 = x25*x3
    cdef double x31 = q4 + x23
    cdef double x32 = cos(x31)
    cdef double x33 = pow(x32, 2)
    cdef double x34 = pow(c2, 2)
    cdef double x35 = m2*x1
    cdef double x36 = x34*x35
    cdef double x37 = sin(x31)
    cdef double x38 = pow(x37, 2)
    cdef double x39 = pow(l1, 2)
    cdef double x40 = m2*x39
    cdef double x41 = m2*x34
    cdef double x42 = x3*x41
    cdef double x43 = x28*x40
    cdef double x44 = x4*x41
    cdef double x45 = pow(c3, 2)*m3
    cdef double x46 = q2 + q5
    cdef double x47 = cos(x46)
    cdef double x48 = pow(x47, 2)
    cdef double x49 = x1*x48
    cdef double x50 = sin(x46)
    cdef double x51 = pow(x50, 2)
    cdef double x52 = x45*x51
    cdef double x53 = x48*x6
    cdef double x54 = q6 + x46
    cdef double x55 = cos(x54)
    cdef double x56 = pow(x55, 2)
    cdef double x57 = pow(c4, 2)
    cdef double x58 = m4*x1
    cdef double x59 = x57*x58
    cdef double x60 = sin(x54)
    cdef double x61 = pow(x60, 2)
    cdef double x62 = pow(l3, 2)
    cdef double x63 = m4*x62
    cdef double x64 = m4*x57
    cdef double x65 = x6*x64
    cdef double x66 = x51*x63
    cdef double x67 = x64*x7
    cdef double x68 = qd0*qd2
    cdef double x69 = c1*x24
    cdef double x70 = m1*x69
    cdef double x71 = c2*x32
    cdef double x72 = m2*x68
    cdef double x73 = c3*x47
    cdef double x74 = m3*x73
    cdef double x75 = c4*x55
    cdef double x76 = m4*x68
    cdef double x77 = l1*x24
    cdef double x78 = l3*x47
    cdef double x79 = qd0*qd3
    cdef double x80 = m2*x79
    cdef double x81 = m2*qd4
    cdef double x82 = x71*x81
    cdef double x83 = qd0*qd5
    cdef double x84 = m4*x83
    cdef double x85 = m4*qd6
    cdef double x86 = x75*x85
    cdef double x87 = qd1*qd2
    cdef double x88 = x27*x87
    cdef double x89 = c1*m1
    cdef double x90 = c2*x37
    cdef double x91 = m2*x90
    cdef double x92 = x50*x87
    cdef double x93 = c3*m3
    cdef double x94 = c4*x60
    cdef double x95 = m4*x94
    cdef double x96 = l1*m2
    cdef double x97 = l3*m4
    cdef double x98 = qd1*qd3
    cdef double x99 = x27*x98
    cdef double x100 = x81*x90
    cdef double x101 = qd1*qd5
    cdef double x102 = x101*x50
    cdef double x103 = x85*x94
    cdef double x104 = x15*x25
    cdef double x105 = x15*x41
    cdef double x106 = qd4*x41
    cdef double x107 = qd2*x106
    cdef double x108 = x17*x48
    cdef double x109 = x17*x64
    cdef double x110 = qd6*x64
    cdef double x111 = qd2*x110
    cdef double x112 = qd3*x106
    cdef double x113 = qd5*x110
    cdef double x114 = c0*x19
    cdef double x115 = m2*x71*x77
    cdef double x116 = l1*x27
    cdef double x117 = x116*x91
    cdef double x118 = m4*x75*x78
    cdef double x119 = l3*x50
    cdef double x120 = x119*x95
    cdef double x121 = x77*x82
    cdef double x122 = x100*x116
    cdef double x123 = x78*x86
    cdef double x124 = x103*x119
    cdef double x125 = 2*x15
    cdef double x126 = 2*x17
    cdef double x127 = -q1
    out[0] = I0*x1 + I1*x1 + I1*x15 + I1*x3 + I2*x1 + I2*x15 + I2*x3 + I2*x4 + I3*x1 + I3*x17 + I3*x6 + I4*x1 + I4*x17 + I4*x6 + I4*x7 - c0*m0*x21*x87 - m0*x114*x68 + qd0*x82 + qd0*x86 + qd1*x100 + qd1*x103 + qd2*x121 + qd2*x122 + qd2*x123 + qd2*x124 + qd2*x16 + qd2*x18 + qd3*x121 + qd3*x122 + qd3*x16 + qd5*x123 + qd5*x124 + qd5*x18 + x0*x115 + x0*x117 + x0*x118 + x0*x120 + x1*x29 + x1*x52 + x10*x11 + x10*x12 + x10*x13 + x10*x14 + x10*x9 + x101*x95 + x102*x93 + x102*x97 + x104*x22 + x104*x40 + x105*x33 + x105*x38 + x107*x33 + x107*x38 + x108*x45 + x108*x63 + x109*x56 + x109*x61 + x11*x8 + x111*x56 + x111*x61 + x112*x33 + x112*x38 + x113*x56 + x113*x61 + x115*x125 + x115*x2 + x117*x125 + x117*x2 + x118*x126 + x118*x5 + x12*x8 + x120*x126 + x120*x5 + x13*x8 + x14*x8 + x15*x29 + x15*x43 + x17*x52 + x17*x66 + pow(x19, 2)*x20 + x20*pow(x21, 2) + x22*x26 + x22*x30 + x26*x40 + x28*x35*x39 + x29*x3 + x3*x43 + x30*x40 + x33*x36 + x33*x42 + x33*x44 + x36*x38 + x38*x42 + x38*x44 + x45*x49 + x45*x53 + x49*x63 + x51*x58*x62 + x52*x6 + x53*x63 + x56*x59 + x56*x65 + x56*x67 + x59*x61 + x6*x66 + x61*x65 + x61*x67 + x68*x70 + x68*x74 + x70*x79 + x71*x72 + x71*x80 + x72*x77 + x74*x83 + x75*x76 + x75*x84 + x76*x78 + x77*x80 + x78*x84 + x8*x9 + x87*x91 + x87*x95 + x88*x89 + x88*x96 + x89*x99 + x91*x98 + x92*x93 + x92*x97 + x96*x99
    out[1] = g*(m0*(q1 + x114) + m1*(-x127 - x69) + m2*(-x127 - x71 - x77) + m3*(-x127 - x73) + m4*(-x127 - x75 - x78))


cdef void _com_position(const double* q, const double* par, double* out) noexcept nogil:
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double x0 = 1.0/(m0 + m1 + m2 + m3 + m4)
    cdef double x1 = q2 + q3
    cdef double x2 = sin(x1)
    cdef double x3 = q4 + x1
    cdef double x4 = q2 + q5
    cdef double x5 = sin(x4)
    cdef double x6 = q6 + x4
    cdef double x7 = -q1
    cdef double x8 = cos(x1)
    cdef double x9 = cos(x4)
    out[0] = x0*(m0*(-c0*sin(q2) + q0) + m1*(c1*x2 + q0) + m2*(c2*sin(x3) + l1*x2 + q0) + m3*(c3*x5 + q0) + m4*(c4*sin(x6) + l3*x5 + q0))
    out[1] = x0*(m0*(c0*cos(q2) + q1) + m1*(-c1*x8 - x7) + m2*(-c2*cos(x3) - l1*x8 - x7) + m3*(-c3*x9 - x7) + m4*(-c4*cos(x6) - l3*x9 - x7))


cdef void _obs_terms_left(const double* y, const double* yd, const double* par, double* out) noexcept nogil:
    cdef double q2 = y[0]
    cdef double q3 = y[1]
    cdef double q4 = y[2]
    cdef double q5 = y[3]
    cdef double q6 = y[4]
    cdef double qd2 = yd[0]
    cdef double qd3 = yd[1]
    cdef double qd4 = yd[2]
    cdef double qd5 = yd[3]
    cdef double qd6 = yd[4]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l2 = par[7]
    cdef double l3 = par[8]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double I0 = par[15]
    cdef double I1 = par[16]
    cdef double I2 = par[17]
    cdef double I3 = par[18]
    cdef double I4 = par[19]
    cdef double g = par[20]
    cdef double x0 = c2*m2
    cdef double x1 = l1*x0
    cdef double x2 = x1*cos(q4)
    cdef double x3 = I2 + pow(c2, 2)*m2
    cdef double x4 = I1 + pow(c1, 2)*m1 + pow(l1, 2)*m2 + 2*x2 + x3
    cdef double x5 = c4*m4
    cdef double x6 = l3*x5
    cdef double x7 = x6*cos(q6)
    cdef double x8 = I4 + pow(c4, 2)*m4
    cdef double x9 = I3 + pow(c3, 2)*m3 + pow(l3, 2)*m4 + 2*x7 + x8
    cdef double x10 = q2 + q3
    cdef double x11 = cos(x10)
    cdef double x12 = l1*x11
    cdef double x13 = q4 + x10
    cdef double x14 = cos(x13)
    cdef double x15 = l2*x14
    cdef double x16 = x12 + x15
    cdef double x17 = -x16
    cdef double x18 = qd4*x15
    cdef double x19 = qd2*x17 + qd3*x17 - x18
    cdef double x20 = c0*m0
    cdef double x21 = c1*m1
    cdef double x22 = x0*x14
    cdef double x23 = m2*x12 + x11*x21 + x22
    cdef double x24 = q2 + q5
    cdef double x25 = cos(x24)
    cdef double x26 = c3*m3
    cdef double x27 = q6 + x24
    cdef double x28 = cos(x27)
    cdef double x29 = x28*x5
    cdef double x30 = l3*m4*x25 + x25*x26 + x29
    cdef double x31 = -x20*cos(q2) + x23 + x30
    cdef double x32 = sin(x10)
    cdef double x33 = l1*x32
    cdef double x34 = sin(x13)
    cdef double x35 = l2*x34
    cdef double x36 = -x33 - x35
    cdef double x37 = qd4*x35
    cdef double x38 = qd2*x36 + qd3*x36 - x37
    cdef double x39 = -x20*sin(q2)
    cdef double x40 = x21*x32
    cdef double x41 = c2*x34
    cdef double x42 = m2*x41
    cdef double x43 = m2*x33 + x40 + x42
    cdef double x44 = sin(x24)
    cdef double x45 = x26*x44
    cdef double x46 = c4*sin(x27)
    cdef double x47 = m4*x46
    cdef double x48 = l3*x44
    cdef double x49 = m4*x48 + x45 + x47
    cdef double x50 = x39 + x43 + x49
    cdef double x51 = x7 + x8
    cdef double x52 = qd5*x9 + qd6*x51
    cdef double x53 = x2 + x3
    cdef double x54 = qd2*x31
    cdef double x55 = qd3*x23
    cdef double x56 = qd5*x30
    cdef double x57 = m0 + m1 + m2 + m3 + m4
    cdef double x58 = qd4*x22
    cdef double x59 = qd6*x29
    cdef double x60 = x19*x57 + x54 + x55 + x56 + x58 + x59
    cdef double x61 = qd4*x42
    cdef double x62 = qd6*x47
    cdef double x63 = qd2*x50 + qd3*x43 + qd5*x49 + x38*x57 + x61 + x62
    cdef double x64 = qd3*x4 + qd4*x53 + x17*x60 + x36*x63
    cdef double x65 = m2*(x33 + x41) + x40
    cdef double x66 = m4*(x46 + x48) + x45
    cdef double x67 = qd2*x19
    cdef double x68 = -x49
    cdef double x69 = qd5*x19
    cdef double x70 = x19*x62
    cdef double x71 = x38*x56 + x38*x59 + x68*x69 - x70
    cdef double x72 = -x43
    cdef double x73 = qd3*x19
    cdef double x74 = x19*x61
    cdef double x75 = -g*x36*x57 + x38*x55 + x38*x58 - x38*x60 + x63*(-qd2*x16 - qd3*x16 - x18) + x72*x73 - x74
    cdef double x76 = qd2*x38
    cdef double x77 = pow(qd2, 2)
    cdef double x78 = x1*sin(q4)
    cdef double x79 = qd4*x78
    cdef double x80 = 2*qd2
    cdef double x81 = x6*sin(q6)
    cdef double x82 = qd6*x81
    out[0] = qd2*(I0 + pow(c0, 2)*m0 + x4 + x9) + x19*x31 + x38*x50 + x52 + x64
    out[1] = qd2*x4 + x19*x23 + x38*x43 + x64
    out[2] = qd2*x53 + qd3*x53 + qd4*x3 - x15*x60 + x19*x22 - x35*x63 + x38*x42
    out[3] = qd2*x9 + x19*x30 + x38*x49 + x52
    out[4] = qd2*x51 + qd5*x51 + qd6*x8 + x19*x29 + x38*x47
    out[5] = -g*(x39 + x65 + x66) + x38*x54 - x50*x67 + x71 + x75
    out[6] = -g*x65 + x23*x76 + x67*x72 + x75
    out[7] = c2*m2*qd2*x14*x38 + c2*m2*qd3*x14*x38 + c2*m2*qd4*x14*x38 + g*l2*x34*x57 - g*x42 - qd2*x79 - pow(qd3, 2)*x78 - qd3*x78*x80 - qd3*x79 - x42*x67 - x42*x73 + x60*(qd2*x35 + qd3*x35 + x37) + x63*(-qd2*x15 - qd3*x15 - x18) - x74 - x77*x78
    out[8] = -g*x66 + x30*x76 + x67*x68 + x71
    out[9] = c4*m4*qd2*x28*x38 + c4*m4*qd5*x28*x38 + c4*m4*qd6*x28*x38 - g*x47 - qd2*x82 - pow(qd5, 2)*x81 - qd5*x80*x81 - qd5*x82 - x47*x67 - x47*x69 - x70 - x77*x81


cdef void _obs_terms_right(const double* y, const double* yd, const double* par, double* out) noexcept nogil:
    cdef double q2 = y[0]
    cdef double q3 = y[1]
    cdef double q4 = y[2]
    cdef double q5 = y[3]
    cdef double q6 = y[4]
    cdef double qd2 = yd[0]
    cdef double qd3 = yd[1]
    cdef double qd4 = yd[2]
    cdef double qd5 = yd[3]
    cdef double qd6 = yd[4]
    cdef double m0 = par[0]
    cdef double m1 = par[1]
    cdef double m2 = par[2]
    cdef double m3 = par[3]
    cdef double m4 = par[4]
    cdef double l1 = par[6]
    cdef double l3 = par[8]
    cdef double l4 = par[9]
    cdef double c0 = par[10]
    cdef double c1 = par[11]
    cdef double c2 = par[12]
    cdef double c3 = par[13]
    cdef double c4 = par[14]
    cdef double I0 = par[15]
    cdef double I1 = par[16]
    cdef double I2 = par[17]
    cdef double I3 = par[18]
    cdef double I4 = par[19]
    cdef double g = par[20]
    cdef double x0 = c2*m2
    cdef double x1 = l1*x0
    cdef double x2 = x1*cos(q4)
    cdef double x3 = I2 + pow(c2, 2)*m2
    cdef double x4 = I1 + pow(c1, 2)*m1 + pow(l1, 2)*m2 + 2*x2 + x3
    cdef double x5 = c4*m4
    cdef double x6 = l3*x5
    cdef double x7 = x6*cos(q6)
    cdef double x8 = I4 + pow(c4, 2)*m4
    cdef double x9 = I3 + pow(c3, 2)*m3 + pow(l3, 2)*m4 + 2*x7 + x8
    cdef double x10 = q2 + q5
    cdef double x11 = cos(x10)
    cdef double x12 = l3*x11
    cdef double x13 = q6 + x10
    cdef double x14 = cos(x13)
    cdef double x15 = l4*x14
    cdef double x16 = x12 + x15
    cdef double x17 = -x16
    cdef double x18 = qd6*x15
    cdef double x19 = qd2*x17 + qd5*x17 - x18
    cdef double x20 = c0*m0
    cdef double x21 = q2 + q3
    cdef double x22 = cos(x21)
    cdef double x23 = c1*m1
    cdef double x24 = q4 + x21
    cdef double x25 = cos(x24)
    cdef double x26 = x0*x25
    cdef double x27 = l1*m2*x22 + x22*x23 + x26
    cdef double x28 = c3*m3
    cdef double x29 = x14*x5
    cdef double x30 = m4*x12 + x11*x28 + x29
    cdef double x31 = -x20*cos(q2) + x27 + x30
    cdef double x32 = sin(x10)
    cdef double x33 = l3*x32
    cdef double x34 = sin(x13)
    cdef double x35 = l4*x34
    cdef double x36 = -x33 - x35
    cdef double x37 = qd6*x35
    cdef double x38 = qd2*x36 + qd5*x36 - x37
    cdef double x39 = -x20*sin(q2)
    cdef double x40 = sin(x21)
    cdef double x41 = x23*x40
    cdef double x42 = c2*sin(x24)
    cdef double x43 = m2*x42
    cdef double x44 = l1*x40
    cdef double x45 = m2*x44 + x41 + x43
    cdef double x46 = x28*x32
    cdef double x47 = c4*x34
    cdef double x48 = m4*x47
    cdef double x49 = m4*x33 + x46 + x48
    cdef double x50 = x39 + x45 + x49
    cdef double x51 = x2 + x3
    cdef double x52 = qd3*x4 + qd4*x51
    cdef double x53 = x7 + x8
    cdef double x54 = qd2*x31
    cdef double x55 = qd3*x27
    cdef double x56 = qd5*x30
    cdef double x57 = m0 + m1 + m2 + m3 + m4
    cdef double x58 = qd4*x26
    cdef double x59 = qd6*x29
    cdef double x60 = x19*x57 + x54 + x55 + x56 + x58 + x59
    cdef double x61 = qd4*x43
    cdef double x62 = qd6*x48
    cdef double x63 = qd2*x50 + qd3*x45 + qd5*x49 + x38*x57 + x61 + x62
    cdef double x64 = qd5*x9 + qd6*x53 + x17*x60 + x36*x63
    cdef double x65 = m2*(x42 + x44) + x41
    cdef double x66 = m4*(x33 + x47) + x46
    cdef double x67 = qd2*x19
    cdef double x68 = -x45
    cdef double x69 = qd3*x19
    cdef double x70 = x19*x61
    cdef double x71 = x38*x55 + x38*x58 + x68*x69 - x70
    cdef double x72 = -x49
    cdef double x73 = qd5*x19
    cdef double x74 = x19*x62
    cdef double x75 = -g*x36*x57 + x38*x56 + x38*x59 - x38*x60 + x63*(-qd2*x16 - qd5*x16 - x18) + x72*x73 - x74
    cdef double x76 = qd2*x38
    cdef double x77 = pow(qd2, 2)
    cdef double x78 = x1*sin(q4)
    cdef double x79 = qd4*x78
    cdef double x80 = 2*qd2
    cdef double x81 = x6*sin(q6)
    cdef double x82 = qd6*x81
    out[0] = qd2*(I0 + pow(c0, 2)*m0 + x4 + x9) + x19*x31 + x38*x50 + x52 + x64
    out[1] = qd2*x4 + x19*x27 + x38*x45 + x52
    out[2] = qd2*x51 + qd3*x51 + qd4*x3 + x19*x26 + x38*x43
    out[3] = qd2*x9 + x19*x30 + x38*x49 + x64
    out[4] = qd2*x53 + qd5*x53 + qd6*x8 - x15*x60 + x19*x29 - x35*x63 + x38*x48
    out[5] = -g*(x39 + x65 + x66) + x38*x54 - x50*x67 + x71 + x75
    out[6] = -g*x65 + x27*x76 + x67*x68 + x71
    out[7] = c2*m2*qd2*x25*x38 + c2*m2*qd3*x25*x38 + c2*m2*qd4*x25*x38 - g*x43 - qd2*x79 - pow(qd3, 2)*x78 - qd3*x78*x80 - qd3*x79 - x43*x67 - x43*x69 - x70 - x77*x78
    out[8] = -g*x66 + x30*x76 + x67*x72 + x75
    out[9] = c4*m4*qd2*x14*x38 + c4*m4*qd5*x14*x38 + c4*m4*qd6*x14*x38 + g*l4*x34*x57 - g*x48 - qd2*x82 - pow(qd5, 2)*x81 - qd5*x80*x81 - qd5*x82 - x48*x67 - x48*x73 + x60*(qd2*x35 + qd5*x35 + x37) + x63*(-qd2*x15 - qd5*x15 - x18) - x74 - x77*x81


cdef void _rel_vel(const double* y, const double* yd, const double* par, double* out) noexcept nogil:
    cdef double q2 = y[0]
    cdef double q3 = y[1]
    cdef double q4 = y[2]
    cdef double q5 = y[3]
    cdef double q6 = y[4]
    cdef double qd2 = yd[0]
    cdef double qd3 = yd[1]
    cdef double qd4 = yd[2]
    cdef double qd5 = yd[3]
    cdef double qd6 = yd[4]
    cdef double l1 = par[6]
    cdef double l2 = par[7]
    cdef double l3 = par[8]
    cdef double l4 = par[9]
    cdef double x0 = q2 + q5
    cdef double x1 = l3*cos(x0)
    cdef double x2 = q6 + x0
    cdef double x3 = l4*cos(x2)
    cdef double x4 = q2 + q3
    cdef double x5 = q4 + x4
    cdef double x6 = l2*cos(x5)
    cdef double x7 = l1*cos(x4) + x6
    cdef double x8 = l3*sin(x0)
    cdef double x9 = l4*sin(x2)
    cdef double x10 = l2*sin(x5)
    cdef double x11 = l1*sin(x4) + x10
    out[0] = qd2*(-x1 - x3 + x7) + qd3*x7 + qd4*x6 + qd5*(-x1 - x3) - qd6*x3
    out[1] = qd2*(x11 - x8 - x9) + qd3*x11 + qd4*x10 + qd5*(-x8 - x9) - qd6*x9


def mass_matrix(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((7, 7))
    cdef double[::1] out_v = out.ravel()
    _mass_matrix(&q_v[0], &par_v[0], &out_v[0])
    return out


def coriolis_matrix(q, qd, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] qd_v = _as_f64(qd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((7, 7))
    cdef double[::1] out_v = out.ravel()
    _coriolis_matrix(&q_v[0], &qd_v[0], &par_v[0], &out_v[0])
    return out


def bias_vector(q, qd, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] qd_v = _as_f64(qd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((7,))
    cdef double[::1] out_v = out.ravel()
    _bias_vector(&q_v[0], &qd_v[0], &par_v[0], &out_v[0])
    return out


def gravity_vector(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((7,))
    cdef double[::1] out_v = out.ravel()
    _gravity_vector(&q_v[0], &par_v[0], &out_v[0])
    return out


def foot_pos_left(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2,))
    cdef double[::1] out_v = out.ravel()
    _foot_pos_left(&q_v[0], &par_v[0], &out_v[0])
    return out


def foot_pos_right(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2,))
    cdef double[::1] out_v = out.ravel()
    _foot_pos_right(&q_v[0], &par_v[0], &out_v[0])
    return out


def foot_jac_left(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2, 7))
    cdef double[::1] out_v = out.ravel()
    _foot_jac_left(&q_v[0], &par_v[0], &out_v[0])
    return out


def foot_jac_right(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2, 7))
    cdef double[::1] out_v = out.ravel()
    _foot_jac_right(&q_v[0], &par_v[0], &out_v[0])
    return out


def foot_jacdot_left(q, qd, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] qd_v = _as_f64(qd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2, 7))
    cdef double[::1] out_v = out.ravel()
    _foot_jacdot_left(&q_v[0], &qd_v[0], &par_v[0], &out_v[0])
    return out


def foot_jacdot_right(q, qd, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] qd_v = _as_f64(qd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2, 7))
    cdef double[::1] out_v = out.ravel()
    _foot_jacdot_right(&q_v[0], &qd_v[0], &par_v[0], &out_v[0])
    return out


def energies(q, qd, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] qd_v = _as_f64(qd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2,))
    cdef double[::1] out_v = out.ravel()
    _energies(&q_v[0], &qd_v[0], &par_v[0], &out_v[0])
    return out


def com_position(q, par, out=None):
    cdef double[::1] q_v = _as_f64(q)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2,))
    cdef double[::1] out_v = out.ravel()
    _com_position(&q_v[0], &par_v[0], &out_v[0])
    return out


def obs_terms_left(y, yd, par, out=None):
    cdef double[::1] y_v = _as_f64(y)
    cdef double[::1] yd_v = _as_f64(yd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((10,))
    cdef double[::1] out_v = out.ravel()
    _obs_terms_left(&y_v[0], &yd_v[0], &par_v[0], &out_v[0])
    return out


def obs_terms_right(y, yd, par, out=None):
    cdef double[::1] y_v = _as_f64(y)
    cdef double[::1] yd_v = _as_f64(yd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((10,))
    cdef double[::1] out_v = out.ravel()
    _obs_terms_right(&y_v[0], &yd_v[0], &par_v[0], &out_v[0])
    return out


def rel_vel(y, yd, par, out=None):
    cdef double[::1] y_v = _as_f64(y)
    cdef double[::1] yd_v = _as_f64(yd)
    cdef double[::1] par_v = _as_f64(par)
    if out is None:
        out = np.empty((2,))
    cdef double[::1] out_v = out.ravel()
    _rel_vel(&y_v[0], &yd_v[0], &par_v[0], &out_v[0])
    return out



def observer_terms_batch(Y, Yd, par, out=None):
    """Stack obs_terms_{left,right} over rows of Y/Yd -> (n, 2, 10)."""
    cdef double[:, ::1] yv = np.ascontiguousarray(Y, dtype=np.float64)
    cdef double[:, ::1] ydv = np.ascontiguousarray(Yd, dtype=np.float64)
    cdef double[::1] pv = _as_f64(par)
    cdef Py_ssize_t n = yv.shape[0]
    if out is None:
        out = np.empty((n, 2, 10))
    cdef double[:, :, ::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _obs_terms_left(&yv[i, 0], &ydv[i, 0], &pv[0], &ov[i, 0, 0])
            _obs_terms_right(&yv[i, 0], &ydv[i, 0], &pv[0], &ov[i, 1, 0])
    return out


def rel_vel_batch(Y, Yd, par, out=None):
    """Stack rel_vel over rows of Y/Yd -> (n, 2)."""
    cdef double[:, ::1] yv = np.ascontiguousarray(Y, dtype=np.float64)
    cdef double[:, ::1] ydv = np.ascontiguousarray(Yd, dtype=np.float64)
    cdef double[::1] pv = _as_f64(par)
    cdef Py_ssize_t n = yv.shape[0]
    if out is None:
        out = np.empty((n, 2))
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _rel_vel(&yv[i, 0], &ydv[i, 0], &pv[0], &ov[i, 0])
    return out
