"""Closed-form dynamics kernels for the planar five-link walker.

Auto-generated by tools/gen_kernels.py -- do not edit by hand.
Pure-Python backend; the compiled backend in _speedups.pyx carries the
same functions.  See tools/gen_kernels.py for conventions.
"""

from math import sin, cos

import numpy as np

COMPILED = False


def mass_matrix(q, par, out=None):
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    q5 = q[5]
    q6 = q[6]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    I0 = par[15]
    I1 = par[16]
    I2 = par[17]
    I3 = par[18]
    I4 = par[19]
    x0 = m0 + m1 + m2 + m3 + m4
    x1 = c0*m0
    x2 = q2 + q3
    x3 = cos(x2)
    x4 = c1*m1
    x5 = q4 + x2
    x6 = c2*m2
    x7 = x6*cos(x5)
    x8 = l1*m2
    x9 = x3*x4 + x3*x8 + x7
    x10 = q2 + q5
    x11 = cos(x10)
    x12 = c3*m3
    x13 = q6 + x10
    x14 = c4*m4
    x15 = x14*cos(x13)
    x16 = l3*m4
    x17 = x11*x12 + x11*x16 + x15
    x18 = -x1*cos(q2) + x17 + x9
    x19 = sin(x2)
    x20 = x6*sin(x5)
    x21 = x19*x4 + x19*x8 + x20
    x22 = sin(x10)
    x23 = x14*sin(x13)
    x24 = x12*x22 + x16*x22 + x23
    x25 = -x1*sin(q2) + x21 + x24
    x26 = l1*x6*cos(q4)
    x27 = I2 + c2**2*m2
    x28 = I1 + c1**2*m1 + l1**2*m2 + 2*x26 + x27
    x29 = l3*x14*cos(q6)
    x30 = I4 + c4**2*m4
    x31 = I3 + c3**2*m3 + l3**2*m4 + 2*x29 + x30
    x32 = x26 + x27
    x33 = x29 + x30
    if out is None:
        out = np.empty((7, 7))
    out[0, 0] = x0
    out[0, 1] = 0
    out[0, 2] = x18
    out[0, 3] = x9
    out[0, 4] = x7
    out[0, 5] = x17
    out[0, 6] = x15
    out[1, 0] = 0
    out[1, 1] = x0
    out[1, 2] = x25
    out[1, 3] = x21
    out[1, 4] = x20
    out[1, 5] = x24
    out[1, 6] = x23
    out[2, 0] = x18
    out[2, 1] = x25
    out[2, 2] = I0 + c0**2*m0 + x28 + x31
    out[2, 3] = x28
    out[2, 4] = x32
    out[2, 5] = x31
    out[2, 6] = x33
    out[3, 0] = x9
    out[3, 1] = x21
    out[3, 2] = x28
    out[3, 3] = x28
    out[3, 4] = x32
    out[3, 5] = 0
    out[3, 6] = 0
    out[4, 0] = x7
    out[4, 1] = x20
    out[4, 2] = x32
    out[4, 3] = x32
    out[4, 4] = x27
    out[4, 5] = 0
    out[4, 6] = 0
    out[5, 0] = x17
    out[5, 1] = x24
    out[5, 2] = x31
    out[5, 3] = 0
    out[5, 4] = 0
    out[5, 5] = x31
    out[5, 6] = x33
    out[6, 0] = x15
    out[6, 1] = x23
    out[6, 2] = x33
    out[6, 3] = 0
    out[6, 4] = 0
    out[6, 5] = x33
    out[6, 6] = x30
    return out


def coriolis_matrix(q, qd, par, out=None):
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    q5 = q[5]
    q6 = q[6]
    qd2 = qd[2]
    qd3 = qd[3]
    qd4 = qd[4]
    qd5 = qd[5]
    qd6 = qd[6]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    x0 = q2 + q3
    x1 = sin(x0)
    x2 = c1*m1
    x3 = q4 + x0
    x4 = c2*m2
    x5 = x4*sin(x3)
    x6 = l1*m2
    x7 = x1*x2 + x1*x6 + x5
    x8 = q2 + q5
    x9 = sin(x8)
    x10 = c3*m3
    x11 = q6 + x8
    x12 = c4*m4
    x13 = x12*sin(x11)
    x14 = l3*m4
    x15 = x10*x9 + x13 + x14*x9
    x16 = -x7
    x17 = qd4*x5
    x18 = qd3*x16 - x17
    x19 = -x15
    x20 = qd6*x13
    x21 = qd5*x19 - x20
    x22 = cos(x0)
    x23 = x4*cos(x3)
    x24 = x2*x22 + x22*x6 + x23
    x25 = cos(x8)
    x26 = x12*cos(x11)
    x27 = x10*x25 + x14*x25 + x26
    x28 = qd4*x23
    x29 = qd3*x24 + x28
    x30 = qd6*x26
    x31 = qd5*x27 + x30
    x32 = l1*x4*sin(q4)
    x33 = qd4*x32
    x34 = l3*x12*sin(q6)
    x35 = qd6*x34
    x36 = -x33
    x37 = qd2*x32 + qd3*x32
    x38 = -x33 - x37
    x39 = -x35
    x40 = qd2*x34 + qd5*x34
    x41 = -x35 - x40
    if out is None:
        out = np.empty((7, 7))
    out[0, 0] = 0
    out[0, 1] = 0
    out[0, 2] = qd2*(c0*m0*sin(q2) - x15 - x7) + x18 + x21
    out[0, 3] = qd2*x16 + x18
    out[0, 4] = -qd2*x5 - qd3*x5 - x17
    out[0, 5] = qd2*x19 + x21
    out[0, 6] = -qd2*x13 - qd5*x13 - x20
    out[1, 0] = 0
    out[1, 1] = 0
    out[1, 2] = qd2*(-c0*m0*cos(q2) + x24 + x27) + x29 + x31
    out[1, 3] = qd2*x24 + x29
    out[1, 4] = qd2*x23 + qd3*x23 + x28
    out[1, 5] = qd2*x27 + x31
    out[1, 6] = qd2*x26 + qd5*x26 + x30
    out[2, 0] = 0
    out[2, 1] = 0
    out[2, 2] = -x33 - x35
    out[2, 3] = x36
    out[2, 4] = x38
    out[2, 5] = x39
    out[2, 6] = x41
    out[3, 0] = 0
    out[3, 1] = 0
    out[3, 2] = x36
    out[3, 3] = x36
    out[3, 4] = x38
    out[3, 5] = 0
    out[3, 6] = 0
    out[4, 0] = 0
    out[4, 1] = 0
    out[4, 2] = x37
    out[4, 3] = x37
    out[4, 4] = 0
    out[4, 5] = 0
    out[4, 6] = 0
    out[5, 0] = 0
    out[5, 1] = 0
    out[5, 2] = x39
    out[5, 3] = 0
    out[5, 4] = 0
    out[5, 5] = x39
    out[5, 6] = x41
    out[6, 0] = 0
    out[6, 1] = 0
    out[6, 2] = x40
    out[6, 3] = 0
    out[6, 4] = 0
    out[6, 5] = x40
    out[6, 6] = 0
    return out


def bias_vector(q, qd, par, out=None):
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    q5 = q[5]
    q6 = q[6]
    qd2 = qd[2]
    qd3 = qd[3]
    qd4 = qd[4]
    qd5 = qd[5]
    qd6 = qd[6]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    x0 = qd2**2
    x1 = q2 + q3
    x2 = sin(x1)
    x3 = c1*m1
    x4 = q4 + x1
    x5 = c2*m2
    x6 = x5*sin(x4)
    x7 = l1*m2
    x8 = x2*x3 + x2*x7 + x6
    x9 = q2 + q5
    x10 = sin(x9)
    x11 = c3*m3
    x12 = q6 + x9
    x13 = c4*m4
    x14 = x13*sin(x12)
    x15 = l3*m4
    x16 = x10*x11 + x10*x15 + x14
    x17 = qd3**2
    x18 = -x8
    x19 = qd5**2
    x20 = -x16
    x21 = qd4**2
    x22 = qd6**2
    x23 = 2*qd2
    x24 = qd4*x6
    x25 = qd6*x14
    x26 = 2*qd3
    x27 = 2*qd5
    x28 = cos(x1)
    x29 = x5*cos(x4)
    x30 = x28*x3 + x28*x7 + x29
    x31 = cos(x9)
    x32 = x13*cos(x12)
    x33 = x11*x31 + x15*x31 + x32
    x34 = qd3*x23
    x35 = qd5*x23
    x36 = qd4*x29
    x37 = qd6*x32
    x38 = l1*x5*sin(q4)
    x39 = qd4*x38
    x40 = x21*x38 + x23*x39 + x26*x39
    x41 = l3*x13*sin(q6)
    x42 = qd6*x41
    x43 = x22*x41 + x23*x42 + x27*x42
    if out is None:
        out = np.empty((7,))
    out[0] = 2*qd2*qd3*x18 + 2*qd2*qd5*x20 + x0*(c0*m0*sin(q2) - x16 - x8) - x14*x22 + x17*x18 + x19*x20 - x21*x6 - x23*x24 - x23*x25 - x24*x26 - x25*x27
    out[1] = x0*(-c0*m0*cos(q2) + x30 + x33) + x17*x30 + x19*x33 + x21*x29 + x22*x32 + x23*x36 + x23*x37 + x26*x36 + x27*x37 + x30*x34 + x33*x35
    out[2] = -x40 - x43
    out[3] = -x40
    out[4] = x0*x38 + x17*x38 + x34*x38
    out[5] = -x43
    out[6] = x0*x41 + x19*x41 + x35*x41
    return out


def gravity_vector(q, par, out=None):
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    q5 = q[5]
    q6 = q[6]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    g = par[20]
    x0 = q2 + q3
    x1 = c2*sin(q4 + x0)
    x2 = sin(x0)
    x3 = c1*m1*x2 + m2*(l1*x2 + x1)
    x4 = q2 + q5
    x5 = c4*sin(q6 + x4)
    x6 = sin(x4)
    x7 = c3*m3*x6 + m4*(l3*x6 + x5)
    if out is None:
        out = np.empty((7,))
    out[0] = 0
    out[1] = g*(m0 + m1 + m2 + m3 + m4)
    out[2] = g*(-c0*m0*sin(q2) + x3 + x7)
    out[3] = g*x3
    out[4] = g*m2*x1
    out[5] = g*x7
    out[6] = g*m4*x5
    return out


def foot_pos_left(q, par, out=None):
    q0 = q[0]
    q1 = q[1]
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    l1 = par[6]
    l2 = par[7]
    x0 = q2 + q3
    x1 = q4 + x0
    if out is None:
        out = np.empty((2,))
    out[0] = l1*sin(x0) + l2*sin(x1) + q0
    out[1] = -l1*cos(x0) - l2*cos(x1) + q1
    return out


def foot_pos_right(q, par, out=None):
    q0 = q[0]
    q1 = q[1]
    q2 = q[2]
    q5 = q[5]
    q6 = q[6]
    l3 = par[8]
    l4 = par[9]
    x0 = q2 + q5
    x1 = q6 + x0
    if out is None:
        out = np.empty((2,))
    out[0] = l3*sin(x0) + l4*sin(x1) + q0
    out[1] = -l3*cos(x0) - l4*cos(x1) + q1
    return out


def foot_jac_left(q, par, out=None):
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    l1 = par[6]
    l2 = par[7]
    x0 = q2 + q3
    x1 = q4 + x0
    x2 = l2*cos(x1)
    x3 = l1*cos(x0) + x2
    x4 = l2*sin(x1)
    x5 = l1*sin(x0) + x4
    if out is None:
        out = np.empty((2, 7))
    out[0, 0] = 1
    out[0, 1] = 0
    out[0, 2] = x3
    out[0, 3] = x3
    out[0, 4] = x2
    out[0, 5] = 0
    out[0, 6] = 0
    out[1, 0] = 0
    out[1, 1] = 1
    out[1, 2] = x5
    out[1, 3] = x5
    out[1, 4] = x4
    out[1, 5] = 0
    out[1, 6] = 0
    return out


def foot_jac_right(q, par, out=None):
    q2 = q[2]
    q5 = q[5]
    q6 = q[6]
    l3 = par[8]
    l4 = par[9]
    x0 = q2 + q5
    x1 = q6 + x0
    x2 = l4*cos(x1)
    x3 = l3*cos(x0) + x2
    x4 = l4*sin(x1)
    x5 = l3*sin(x0) + x4
    if out is None:
        out = np.empty((2, 7))
    out[0, 0] = 1
    out[0, 1] = 0
    out[0, 2] = x3
    out[0, 3] = 0
    out[0, 4] = 0
    out[0, 5] = x3
    out[0, 6] = x2
    out[1, 0] = 0
    out[1, 1] = 1
    out[1, 2] = x5
    out[1, 3] = 0
    out[1, 4] = 0
    out[1, 5] = x5
    out[1, 6] = x4
    return out


def foot_jacdot_left(q, qd, par, out=None):
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    qd2 = qd[2]
    qd3 = qd[3]
    qd4 = qd[4]
    l1 = par[6]
    l2 = par[7]
    x0 = q2 + q3
    x1 = q4 + x0
    x2 = l2*sin(x1)
    x3 = -l1*sin(x0) - x2
    x4 = qd4*x2
    x5 = qd2*x3 + qd3*x3 - x4
    x6 = l2*cos(x1)
    x7 = l1*cos(x0) + x6
    x8 = qd4*x6
    x9 = qd2*x7 + qd3*x7 + x8
    if out is None:
        out = np.empty((2, 7))
    out[0, 0] = 0
    out[0, 1] = 0
    out[0, 2] = x5
    out[0, 3] = x5
    out[0, 4] = -qd2*x2 - qd3*x2 - x4
    out[0, 5] = 0
    out[0, 6] = 0
    out[1, 0] = 0
    out[1, 1] = 0
    out[1, 2] = x9
    out[1, 3] = x9
    out[1, 4] = qd2*x6 + qd3*x6 + x8
    out[1, 5] = 0
    out[1, 6] = 0
    return out


def foot_jacdot_right(q, qd, par, out=None):
    q2 = q[2]
    q5 = q[5]
    q6 = q[6]
    qd2 = qd[2]
    qd5 = qd[5]
    qd6 = qd[6]
    l3 = par[8]
    l4 = par[9]
    x0 = q2 + q5
    x1 = q6 + x0
    x2 = l4*sin(x1)
    x3 = -l3*sin(x0) - x2
    x4 = qd6*x2
    x5 = qd2*x3 + qd5*x3 - x4
    x6 = l4*cos(x1)
    x7 = l3*cos(x0) + x6
    x8 = qd6*x6
    x9 = qd2*x7 + qd5*x7 + x8
    if out is None:
        out = np.empty((2, 7))
    out[0, 0] = 0
    out[0, 1] = 0
    out[0, 2] = x5
    out[0, 3] = 0
    out[0, 4] = 0
    out[0, 5] = x5
    out[0, 6] = -qd2*x2 - qd5*x2 - x4
    out[1, 0] = 0
    out[1, 1] = 0
    out[1, 2] = x9
    out[1, 3] = 0
    out[1, 4] = 0
    out[1, 5] = x9
    out[1, 6] = qd2*x6 + qd5*x6 + x8
    return out


def energies(q, qd, par, out=None):
    q1 = q[1]
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    q5 = q[5]
    q6 = q[6]
    qd0 = qd[0]
    qd1 = qd[1]
    qd2 = qd[2]
    qd3 = qd[3]
    qd4 = qd[4]
    qd5 = qd[5]
    qd6 = qd[6]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    I0 = par[15]
    I1 = par[16]
    I2 = par[17]
    I3 = par[18]
    I4 = par[19]
    g = par[20]
    x0 = qd2**2
    x1 = (1/2)*x0
    x2 = qd3**2
    x3 = (1/2)*x2
    x4 = (1/2)*qd4**2
    x5 = qd5**2
    x6 = (1/2)*x5
    x7 = (1/2)*qd6**2
    x8 = qd0**2
    x9 = (1/2)*m0
    x10 = qd1**2
    x11 = (1/2)*m1
    x12 = (1/2)*m2
    x13 = (1/2)*m3
    x14 = (1/2)*m4
    x15 = qd2*qd3
    x16 = I2*qd4
    x17 = qd2*qd5
    x18 = I4*qd6
    x19 = cos(q2)
    x20 = c0**2*m0*x1
    x21 = sin(q2)
    x22 = c1**2*m1
    x23 = q2 + q3
    x24 = cos(x23)
    x25 = x24**2
    x26 = x1*x25
    x27 = sin(x23)
    x28 = x27**2
    x29 = x22*x28
    x30 = x25*x3
    x31 = q4 + x23
    x32 = cos(x31)
    x33 = x32**2
    x34 = c2**2
    x35 = m2*x1
    x36 = x34*x35
    x37 = sin(x31)
    x38 = x37**2
    x39 = l1**2
    x40 = m2*x39
    x41 = m2*x34
    x42 = x3*x41
    x43 = x28*x40
    x44 = x4*x41
    x45 = c3**2*m3
    x46 = q2 + q5
    x47 = cos(x46)
    x48 = x47**2
    x49 = x1*x48
    x50 = sin(x46)
    x51 = x50**2
    x52 = x45*x51
    x53 = x48*x6
    x54 = q6 + x46
    x55 = cos(x54)
    x56 = x55**2
    x57 = c4**2
    x58 = m4*x1
    x59 = x57*x58
    x60 = sin(x54)
    x61 = x60**2
    x62 = l3**2
    x63 = m4*x62
    x64 = m4*x57
    x65 = x6*x64
    x66 = x51*x63
    x67 = x64*x7
    x68 = qd0*qd2
    x69 = c1*x24
    x70 = m1*x69
    x71 = c2*x32
    x72 = m2*x68
    x73 = c3*x47
    x74 = m3*x73
    x75 = c4*x55
    x76 = m4*x68
    x77 = l1*x24
    x78 = l3*x47
    x79 = qd0*qd3
    x80 = m2*x79
    x81 = m2*qd4
    x82 = x71*x81
    x83 = qd0*qd5
    x84 = m4*x83
    x85 = m4*qd6
    x86 = x75*x85
    x87 = qd1*qd2
    x88 = x27*x87
    x89 = c1*m1
    x90 = c2*x37
    x91 = m2*x90
    x92 = x50*x87
    x93 = c3*m3
    x94 = c4*x60
    x95 = m4*x94
    x96 = l1*m2
    x97 = l3*m4
    x98 = qd1*qd3
    x99 = x27*x98
    x100 = x81*x90
    x101 = qd1*qd5
    x102 = x101*x50
    x103 = x85*x94
    x104 = x15*x25
    x105 = x15*x41
    x106 = qd4*x41
    x107 = qd2*x106
    x108 = x17*x48
    x109 = x17*x64
    x110 = qd6*x64
    x111 = qd2*x110
    x112 = qd3*x106
    x113 = qd5*x110
    x114 = c0*x19
    x115 = m2*x71*x77
    x116 = l1*x27
    x117 = x116*x91
    x118 = m4*x75*x78
    x119 = l3*x50
    x120 = x119*x95
    x121 = x77*x82
    x122 = x100*x116
    x123 = x78*x86
    x124 = x103*x119
    x125 = 2*x15
    x126 = 2*x17
    x127 = -q1
    if out is None:
        out = np.empty((2,))
    out[0] = I0*x1 + I1*x1 + I1*x15 + I1*x3 + I2*x1 + I2*x15 + I2*x3 + I2*x4 + I3*x1 + I3*x17 + I3*x6 + I4*x1 + I4*x17 + I4*x6 + I4*x7 - c0*m0*x21*x87 - m0*x114*x68 + qd0*x82 + qd0*x86 + qd1*x100 + qd1*x103 + qd2*x121 + qd2*x122 + qd2*x123 + qd2*x124 + qd2*x16 + qd2*x18 + qd3*x121 + qd3*x122 + qd3*x16 + qd5*x123 + qd5*x124 + qd5*x18 + x0*x115 + x0*x117 + x0*x118 + x0*x120 + x1*x29 + x1*x52 + x10*x11 + x10*x12 + x10*x13 + x10*x14 + x10*x9 + x101*x95 + x102*x93 + x102*x97 + x104*x22 + x104*x40 + x105*x33 + x105*x38 + x107*x33 + x107*x38 + x108*x45 + x108*x63 + x109*x56 + x109*x61 + x11*x8 + x111*x56 + x111*x61 + x112*x33 + x112*x38 + x113*x56 + x113*x61 + x115*x125 + x115*x2 + x117*x125 + x117*x2 + x118*x126 + x118*x5 + x12*x8 + x120*x126 + x120*x5 + x13*x8 + x14*x8 + x15*x29 + x15*x43 + x17*x52 + x17*x66 + x19**2*x20 + x20*x21**2 + x22*x26 + x22*x30 + x26*x40 + x28*x35*x39 + x29*x3 + x3*x43 + x30*x40 + x33*x36 + x33*x42 + x33*x44 + x36*x38 + x38*x42 + x38*x44 + x45*x49 + x45*x53 + x49*x63 + x51*x58*x62 + x52*x6 + x53*x63 + x56*x59 + x56*x65 + x56*x67 + x59*x61 + x6*x66 + x61*x65 + x61*x67 + x68*x70 + x68*x74 + x70*x79 + x71*x72 + x71*x80 + x72*x77 + x74*x83 + x75*x76 + x75*x84 + x76*x78 + x77*x80 + x78*x84 + x8*x9 + x87*x91 + x87*x95 + x88*x89 + x88*x96 + x89*x99 + x91*x98 + x92*x93 + x92*x97 + x96*x99
    out[1] = g*(m0*(q1 + x114) + m1*(-x127 - x69) + m2*(-x127 - x71 - x77) + m3*(-x127 - x73) + m4*(-x127 - x75 - x78))
    return out


def com_position(q, par, out=None):
    q0 = q[0]
    q1 = q[1]
    q2 = q[2]
    q3 = q[3]
    q4 = q[4]
    q5 = q[5]
    q6 = q[6]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    x0 = 1/(m0 + m1 + m2 + m3 + m4)
    x1 = q2 + q3
    x2 = sin(x1)
    x3 = q4 + x1
    x4 = q2 + q5
    x5 = sin(x4)
    x6 = q6 + x4
    x7 = -q1
    x8 = cos(x1)
    x9 = cos(x4)
    if out is None:
        out = np.empty((2,))
    out[0] = x0*(m0*(-c0*sin(q2) + q0) + m1*(c1*x2 + q0) + m2*(c2*sin(x3) + l1*x2 + q0) + m3*(c3*x5 + q0) + m4*(c4*sin(x6) + l3*x5 + q0))
    out[1] = x0*(m0*(c0*cos(q2) + q1) + m1*(-c1*x8 - x7) + m2*(-c2*cos(x3) - l1*x8 - x7) + m3*(-c3*x9 - x7) + m4*(-c4*cos(x6) - l3*x9 - x7))
    return out


def obs_terms_left(y, yd, par, out=None):
    q2 = y[0]
    q3 = y[1]
    q4 = y[2]
    q5 = y[3]
    q6 = y[4]
    qd2 = yd[0]
    qd3 = yd[1]
    qd4 = yd[2]
    qd5 = yd[3]
    qd6 = yd[4]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l2 = par[7]
    l3 = par[8]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    I0 = par[15]
    I1 = par[16]
    I2 = par[17]
    I3 = par[18]
    I4 = par[19]
    g = par[20]
    x0 = c2*m2
    x1 = l1*x0
    x2 = x1*cos(q4)
    x3 = I2 + c2**2*m2
    x4 = I1 + c1**2*m1 + l1**2*m2 + 2*x2 + x3
    x5 = c4*m4
    x6 = l3*x5
    x7 = x6*cos(q6)
    x8 = I4 + c4**2*m4
    x9 = I3 + c3**2*m3 + l3**2*m4 + 2*x7 + x8
    x10 = q2 + q3
    x11 = cos(x10)
    x12 = l1*x11
    x13 = q4 + x10
    x14 = cos(x13)
    x15 = l2*x14
    x16 = x12 + x15
    x17 = -x16
    x18 = qd4*x15
    x19 = qd2*x17 + qd3*x17 - x18
    x20 = c0*m0
    x21 = c1*m1
    x22 = x0*x14
    x23 = m2*x12 + x11*x21 + x22
    x24 = q2 + q5
    x25 = cos(x24)
    x26 = c3*m3
    x27 = q6 + x24
    x28 = cos(x27)
    x29 = x28*x5
    x30 = l3*m4*x25 + x25*x26 + x29
    x31 = -x20*cos(q2) + x23 + x30
    x32 = sin(x10)
    x33 = l1*x32
    x34 = sin(x13)
    x35 = l2*x34
    x36 = -x33 - x35
    x37 = qd4*x35
    x38 = qd2*x36 + qd3*x36 - x37
    x39 = -x20*sin(q2)
    x40 = x21*x32
    x41 = c2*x34
    x42 = m2*x41
    x43 = m2*x33 + x40 + x42
    x44 = sin(x24)
    x45 = x26*x44
    x46 = c4*sin(x27)
    x47 = m4*x46
    x48 = l3*x44
    x49 = m4*x48 + x45 + x47
    x50 = x39 + x43 + x49
    x51 = x7 + x8
    x52 = qd5*x9 + qd6*x51
    x53 = x2 + x3
    x54 = qd2*x31
    x55 = qd3*x23
    x56 = qd5*x30
    x57 = m0 + m1 + m2 + m3 + m4
    x58 = qd4*x22
    x59 = qd6*x29
    x60 = x19*x57 + x54 + x55 + x56 + x58 + x59
    x61 = qd4*x42
    x62 = qd6*x47
    x63 = qd2*x50 + qd3*x43 + qd5*x49 + x38*x57 + x61 + x62
    x64 = qd3*x4 + qd4*x53 + x17*x60 + x36*x63
    x65 = m2*(x33 + x41) + x40
    x66 = m4*(x46 + x48) + x45
    x67 = qd2*x19
    x68 = -x49
    x69 = qd5*x19
    x70 = x19*x62
    x71 = x38*x56 + x38*x59 + x68*x69 - x70
    x72 = -x43
    x73 = qd3*x19
    x74 = x19*x61
    x75 = -g*x36*x57 + x38*x55 + x38*x58 - x38*x60 + x63*(-qd2*x16 - qd3*x16 - x18) + x72*x73 - x74
    x76 = qd2*x38
    x77 = qd2**2
    x78 = x1*sin(q4)
    x79 = qd4*x78
    x80 = 2*qd2
    x81 = x6*sin(q6)
    x82 = qd6*x81
    if out is None:
        out = np.empty((10,))
    out[0] = qd2*(I0 + c0**2*m0 + x4 + x9) + x19*x31 + x38*x50 + x52 + x64
    out[1] = qd2*x4 + x19*x23 + x38*x43 + x64
    out[2] = qd2*x53 + qd3*x53 + qd4*x3 - x15*x60 + x19*x22 - x35*x63 + x38*x42
    out[3] = qd2*x9 + x19*x30 + x38*x49 + x52
    out[4] = qd2*x51 + qd5*x51 + qd6*x8 + x19*x29 + x38*x47
    out[5] = -g*(x39 + x65 + x66) + x38*x54 - x50*x67 + x71 + x75
    out[6] = -g*x65 + x23*x76 + x67*x72 + x75
    out[7] = c2*m2*qd2*x14*x38 + c2*m2*qd3*x14*x38 + c2*m2*qd4*x14*x38 + g*l2*x34*x57 - g*x42 - qd2*x79 - qd3**2*x78 - qd3*x78*x80 - qd3*x79 - x42*x67 - x42*x73 + x60*(qd2*x35 + qd3*x35 + x37) + x63*(-qd2*x15 - qd3*x15 - x18) - x74 - x77*x78
    out[8] = -g*x66 + x30*x76 + x67*x68 + x71
    out[9] = c4*m4*qd2*x28*x38 + c4*m4*qd5*x28*x38 + c4*m4*qd6*x28*x38 - g*x47 - qd2*x82 - qd5**2*x81 - qd5*x80*x81 - qd5*x82 - x47*x67 - x47*x69 - x70 - x77*x81
    return out


def obs_terms_right(y, yd, par, out=None):
    q2 = y[0]
    q3 = y[1]
    q4 = y[2]
    q5 = y[3]
    q6 = y[4]
    qd2 = yd[0]
    qd3 = yd[1]
    qd4 = yd[2]
    qd5 = yd[3]
    qd6 = yd[4]
    m0 = par[0]
    m1 = par[1]
    m2 = par[2]
    m3 = par[3]
    m4 = par[4]
    l1 = par[6]
    l3 = par[8]
    l4 = par[9]
    c0 = par[10]
    c1 = par[11]
    c2 = par[12]
    c3 = par[13]
    c4 = par[14]
    I0 = par[15]
    I1 = par[16]
    I2 = par[17]
    I3 = par[18]
    I4 = par[19]
    g = par[20]
    x0 = c2*m2
    x1 = l1*x0
    x2 = x1*cos(q4)
    x3 = I2 + c2**2*m2
    x4 = I1 + c1**2*m1 + l1**2*m2 + 2*x2 + x3
    x5 = c4*m4
    x6 = l3*x5
    x7 = x6*cos(q6)
    x8 = I4 + c4**2*m4
    x9 = I3 + c3**2*m3 + l3**2*m4 + 2*x7 + x8
    x10 = q2 + q5
    x11 = cos(x10)
    x12 = l3*x11
    x13 = q6 + x10
    x14 = cos(x13)
    x15 = l4*x14
    x16 = x12 + x15
    x17 = -x16
    x18 = qd6*x15
    x19 = qd2*x17 + qd5*x17 - x18
    x20 = c0*m0
    x21 = q2 + q3
    x22 = cos(x21)
    x23 = c1*m1
    x24 = q4 + x21
    x25 = cos(x24)
    x26 = x0*x25
    x27 = l1*m2*x22 + x22*x23 + x26
    x28 = c3*m3
    x29 = x14*x5
    x30 = m4*x12 + x11*x28 + x29
    x31 = -x20*cos(q2) + x27 + x30
    x32 = sin(x10)
    x33 = l3*x32
    x34 = sin(x13)
    x35 = l4*x34
    x36 = -x33 - x35
    x37 = qd6*x35
    x38 = qd2*x36 + qd5*x36 - x37
    x39 = -x20*sin(q2)
    x40 = sin(x21)
    x41 = x23*x40
    x42 = c2*sin(x24)
    x43 = m2*x42
    x44 = l1*x40
    x45 = m2*x44 + x41 + x43
    x46 = x28*x32
    x47 = c4*x34
    x48 = m4*x47
    x49 = m4*x33 + x46 + x48
    x50 = x39 + x45 + x49
    x51 = x2 + x3
    x52 = qd3*x4 + qd4*x51
    x53 = x7 + x8
    x54 = qd2*x31
    x55 = qd3*x27
    x56 = qd5*x30
    x57 = m0 + m1 + m2 + m3 + m4
    x58 = qd4*x26
    x59 = qd6*x29
    x60 = x19*x57 + x54 + x55 + x56 + x58 + x59
    x61 = qd4*x43
    x62 = qd6*x48
    x63 = qd2*x50 + qd3*x45 + qd5*x49 + x38*x57 + x61 + x62
    x64 = qd5*x9 + qd6*x53 + x17*x60 + x36*x63
    x65 = m2*(x42 + x44) + x41
    x66 = m4*(x33 + x47) + x46
    x67 = qd2*x19
    x68 = -x45
    x69 = qd3*x19
    x70 = x19*x61
    x71 = x38*x55 + x38*x58 + x68*x69 - x70
    x72 = -x49
    x73 = qd5*x19
    x74 = x19*x62
    x75 = -g*x36*x57 + x38*x56 + x38*x59 - x38*x60 + x63*(-qd2*x16 - qd5*x16 - x18) + x72*x73 - x74
    x76 = qd2*x38
    x77 = qd2**2
    x78 = x1*sin(q4)
    x79 = qd4*x78
    x80 = 2*qd2
    x81 = x6*sin(q6)
    x82 = qd6*x81
    if out is None:
        out = np.empty((10,))
    out[0] = qd2*(I0 + c0**2*m0 + x4 + x9) + x19*x31 + x38*x50 + x52 + x64
    out[1] = qd2*x4 + x19*x27 + x38*x45 + x52
    out[2] = qd2*x51 + qd3*x51 + qd4*x3 + x19*x26 + x38*x43
    out[3] = qd2*x9 + x19*x30 + x38*x49 + x64
    out[4] = qd2*x53 + qd5*x53 + qd6*x8 - x15*x60 + x19*x29 - x35*x63 + x38*x48
    out[5] = -g*(x39 + x65 + x66) + x38*x54 - x50*x67 + x71 + x75
    out[6] = -g*x65 + x27*x76 + x67*x68 + x71
    out[7] = c2*m2*qd2*x25*x38 + c2*m2*qd3*x25*x38 + c2*m2*qd4*x25*x38 - g*x43 - qd2*x79 - qd3**2*x78 - qd3*x78*x80 - qd3*x79 - x43*x67 - x43*x69 - x70 - x77*x78
    out[8] = -g*x66 + x30*x76 + x67*x72 + x75
    out[9] = c4*m4*qd2*x14*x38 + c4*m4*qd5*x14*x38 + c4*m4*qd6*x14*x38 + g*l4*x34*x57 - g*x48 - qd2*x82 - qd5**2*x81 - qd5*x80*x81 - qd5*x82 - x48*x67 - x48*x73 + x60*(qd2*x35 + qd5*x35 + x37) + x63*(-qd2*x15 - qd5*x15 - x18) - x74 - x77*x81
    return out


def rel_vel(y, yd, par, out=None):
    q2 = y[0]
    q3 = y[1]
    q4 = y[2]
    q5 = y[3]
    q6 = y[4]
    qd2 = yd[0]
    qd3 = yd[1]
    qd4 = yd[2]
    qd5 = yd[3]
    qd6 = yd[4]
    l1 = par[6]
    l2 = par[7]
    l3 = par[8]
    l4 = par[9]
    x0 = q2 + q5
    x1 = l3*cos(x0)
    x2 = q6 + x0
    x3 = l4*cos(x2)
    x4 = q2 + q3
    x5 = q4 + x4
    x6 = l2*cos(x5)
    x7 = l1*cos(x4) + x6
    x8 = l3*sin(x0)
    x9 = l4*sin(x2)
    x10 = l2*sin(x5)
    x11 = l1*sin(x4) + x10
    if out is None:
        out = np.empty((2,))
    out[0] = qd2*(-x1 - x3 + x7) + qd3*x7 + qd4*x6 + qd5*(-x1 - x3) - qd6*x3
    out[1] = qd2*(x11 - x8 - x9) + qd3*x11 + qd4*x10 + qd5*(-x8 - x9) - qd6*x9
    return out



def observer_terms_batch(Y, Yd, par, out=None):
    """Stack obs_terms_{left,right} over rows of Y/Yd -> (n, 2, 10)."""
    Y = np.asarray(Y, dtype=float)
    Yd = np.asarray(Yd, dtype=float)
    n = Y.shape[0]
    if out is None:
        out = np.empty((n, 2, 10))
    for i in range(n):
        obs_terms_left(Y[i], Yd[i], par, out=out[i, 0])
        obs_terms_right(Y[i], Yd[i], par, out=out[i, 1])
    return out


def rel_vel_batch(Y, Yd, par, out=None):
    """Stack rel_vel over rows of Y/Yd -> (n, 2)."""
    Y = np.asarray(Y, dtype=float)
    Yd = np.asarray(Yd, dtype=float)
    n = Y.shape[0]
    if out is None:
        out = np.empty((n, 2))
    for i in range(n):
        rel_vel(Y[i], Yd[i], par, out=out[i])
    return out
